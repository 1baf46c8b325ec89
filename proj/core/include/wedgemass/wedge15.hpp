#ifndef WEDGEMASS_WEDGE15_HPP_
#define WEDGEMASS_WEDGE15_HPP_

#include <Eigen/Dense>

#include <array>
#include <stdexcept>

#include "wedgemass/poly3.hpp"

namespace wedgemass {

inline constexpr int kNodeCount = 15;

/// Thrown when an element configuration is non-physical: non-positive
/// volume, or non-positive Jacobian determinant at an evaluation point.
class InvalidElementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point in the natural coordinates of the reference wedge.
struct NaturalPoint {
  double xi = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
};

/// True when p lies in {xi >= 0, eta >= 0, xi + eta <= 1, -1 <= zeta <= 1},
/// with a symmetric tolerance on every face.
bool inside_reference_domain(const NaturalPoint& p, double tol = 1e-12);

using RationalTriple = std::array<Rational, 3>;

/// The 15 Cartesian nodal coordinates of one element.
///
/// Node ordering convention: corners 1-3 on the bottom triangle (zeta = -1),
/// corners 4-6 on the top (zeta = +1); mid-edge nodes 7-9 on the bottom
/// triangle edges (7: mid 1-2, 8: mid 2-3, 9: mid 3-1); 10-12 the matching
/// top-triangle mid-edges; 13-15 the vertical mid-edges (zeta = 0) under
/// corners 1-3.
///
/// Coordinates are held exactly; doubles passed in are promoted through
/// their exact binary value. A double mirror is kept for the fast paths.
class NodeSet {
 public:
  explicit NodeSet(std::array<RationalTriple, kNodeCount> coords);

  static NodeSet from_doubles(const std::array<std::array<double, 3>, kNodeCount>& coords);

  /// The parent element: every node sits at its natural coordinates, the
  /// isoparametric map is the identity and the metric is constant 1.
  static NodeSet parent();

  const RationalTriple& node(int i) const { return coords_[static_cast<size_t>(i)]; }
  RationalTriple& node(int i) { return coords_[static_cast<size_t>(i)]; }

  /// Cartesian component m of node i as double (m: 0 = x, 1 = y, 2 = z).
  double coord(int i, int m) const { return doubles_[static_cast<size_t>(i)][static_cast<size_t>(m)]; }

  /// Re-syncs the double mirror after mutation through node().
  void refresh();

 private:
  std::array<RationalTriple, kNodeCount> coords_;
  std::array<std::array<double, 3>, kNodeCount> doubles_{};
};

/// Natural coordinates of the 15 nodes (exact; the parent element's
/// Cartesian coordinates coincide with them).
const std::array<RationalTriple, kNodeCount>& node_natural_coords();

/// The 15 shape functions as exact expanded polynomials. Kronecker at the
/// nodes, and they sum to the constant 1.
const std::array<Poly3, kNodeCount>& shape_polynomials();

/// Fast float evaluation of the 15 shape functions (factored forms).
std::array<double, kNodeCount> shape_values(const NaturalPoint& p);

/// d(shape i)/d(xi, eta, zeta) for all 15 shape functions.
std::array<std::array<double, 3>, kNodeCount> shape_gradients(const NaturalPoint& p);

/// Image of a natural point under the isoparametric map sum_i phi^i X_i.
std::array<double, 3> isoparametric_map(const NodeSet& nodes, const NaturalPoint& p);

/// J(m, n) = d X_m / d(natural coordinate n) at p.
Eigen::Matrix3d jacobian(const NodeSet& nodes, const NaturalPoint& p);

/// Exact determinant of the polynomial-valued Jacobian, expanded. Total
/// degree <= 6; every monomial lies in the fixed 57-monomial family of the
/// wedge metric.
Poly3 metric_polynomial(const NodeSet& nodes);

/// Exact element volume (integral of the metric over the reference wedge).
Rational volume_exact(const NodeSet& nodes);

/// volume_exact converted to double; throws InvalidElementError when <= 0.
double volume(const NodeSet& nodes);

}  // namespace wedgemass

#endif  // WEDGEMASS_WEDGE15_HPP_
