#ifndef WEDGEMASS_MASSMAT_HPP_
#define WEDGEMASS_MASSMAT_HPP_

#include <Eigen/Dense>

#include "wedgemass/schemes.hpp"
#include "wedgemass/wedge15.hpp"

namespace wedgemass {

using Matrix15d = Eigen::Matrix<double, kNodeCount, kNodeCount>;

/// Consistent mass matrix of one element: symmetric, and for valid elements
/// positive definite; the sum of all entries equals rho0 * volume.
struct MassMatrix {
  Matrix15d entries;
  double rho0 = 1.0;
};

/// Componentwise absolute difference between two mass matrices, averaged
/// over all 225 entries / maximized.
struct ErrorStats {
  double avg_abs = 0.0;
  double max_abs = 0.0;
};

/// Exact consistent mass matrix at rho0 = 1:
/// entry (i,j) = integral of phi^i phi^j J over the reference wedge, as
/// exact rationals. The oracle against which the schemes are measured.
SymRational15 mass_exact_rational(const NodeSet& nodes);

/// mass_exact_rational scaled by rho0 and converted to double at the end.
/// Throws InvalidElementError when the element volume is <= 0.
MassMatrix mass_exact(const NodeSet& nodes, double rho0);

/// Scheme mass matrix rho0 * sum_k Jhat_k M_k using the embedded
/// coefficient matrices and float metric samples. Propagates the
/// inverted-element error from metric_samples.
MassMatrix mass_scheme(const NodeSet& nodes, SchemeKind kind, double rho0);

/// Requires both matrices to carry the same rho0.
ErrorStats error_stats(const MassMatrix& approx, const MassMatrix& reference);

}  // namespace wedgemass

#endif  // WEDGEMASS_MASSMAT_HPP_
