#ifndef WEDGEMASS_SCHEMES_HPP_
#define WEDGEMASS_SCHEMES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "wedgemass/wedge15.hpp"

namespace wedgemass {

/// Metric-interpolation scheme: constant (1 point), linear (4 points) or
/// quadratic (10 points).
enum class SchemeKind { CM, LM, QM };

int point_count(SchemeKind kind);
std::string_view scheme_name(SchemeKind kind);          // "cm" / "lm" / "qm"
SchemeKind scheme_from_name(std::string_view name);     // throws on unknown

/// Evaluation points p_k and interpolant polynomials phihat^k of a scheme.
///
/// Invariants: phihat^k(p_l) = delta_kl exactly, and sum_k phihat^k == 1 as
/// a polynomial identity. The LM interpolants reproduce every polynomial of
/// total degree <= 1, the QM interpolants every polynomial of degree <= 2.
struct SchemeSpec {
  SchemeKind kind;
  std::vector<RationalTriple> points;
  std::vector<Poly3> interpolants;
  std::vector<NaturalPoint> points_d;  // double mirror of points

  NaturalPoint point_as_double(int k) const { return points_d[static_cast<size_t>(k)]; }
};

/// The fixed tables for each scheme. The 10 QM points form a tetrahedron of
/// edge length 1/10 centred at the wedge centroid (1/3, 1/3, 0): the first
/// four are its corners, the last six its edge midpoints.
const SchemeSpec& scheme_spec(SchemeKind kind);

/// Metric samples Jhat_k = det J(p_k) for each scheme point. Throws
/// InvalidElementError when a sample is <= 0 (element inverted near p_k).
std::vector<double> metric_samples(SchemeKind kind, const NodeSet& nodes);

/// sum_k Jhat_k phihat^k with exactly-sampled Jhat_k, as a polynomial.
/// Reproduces the exact metric whenever its degree is within the scheme's
/// reproduction order (LM: affine, QM: quadratic).
Poly3 interpolated_metric(SchemeKind kind, const NodeSet& nodes);

/// Symmetric 15x15 exact-rational matrix, stored packed (i <= j, row-major).
class SymRational15 {
 public:
  static constexpr int kPacked = kNodeCount * (kNodeCount + 1) / 2;  // 120

  static int packed_index(int i, int j);

  const Rational& at(int i, int j) const { return packed_[static_cast<size_t>(packed_index(i, j))]; }
  void set(int i, int j, Rational value) { packed_[static_cast<size_t>(packed_index(i, j))] = std::move(value); }

  const std::array<Rational, kPacked>& packed() const { return packed_; }
  std::array<Rational, kPacked>& packed() { return packed_; }

  /// Sum of all 225 entries (each off-diagonal packed entry counted twice).
  Rational total() const;

  friend bool operator==(const SymRational15&, const SymRational15&) = default;

 private:
  std::array<Rational, kPacked> packed_{};
};

/// The scheme's coefficient matrices M_k^{ij} = integral of
/// phi^i phi^j phihat^k over the reference wedge, one matrix per point.
/// They act as generalized quadrature weights: the scheme's mass matrix is
/// rho0 * sum_k Jhat_k M_k.
struct CoeffMatrices {
  SchemeKind kind;
  std::vector<SymRational15> matrices;

  friend bool operator==(const CoeffMatrices&, const CoeffMatrices&) = default;
};

/// Exact integration of phi^i phi^j phihat^k for every i <= j and k.
CoeffMatrices generate_coeff_matrices(SchemeKind kind);

/// The build-time tables; equals generate_coeff_matrices(kind) exactly.
const CoeffMatrices& embedded_coeff_matrices(SchemeKind kind);

/// JSON document: {"kind", "points" (exact rational strings),
/// "matrices" (arrays of "n/d" strings, packed i <= j row-major)}.
/// Round-trips bit-exactly through import_coeff_json.
std::string export_coeff_json(const CoeffMatrices& coeffs);
CoeffMatrices import_coeff_json(std::string_view json_text);

}  // namespace wedgemass

#endif  // WEDGEMASS_SCHEMES_HPP_
