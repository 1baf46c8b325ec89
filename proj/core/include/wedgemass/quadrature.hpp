#ifndef WEDGEMASS_QUADRATURE_HPP_
#define WEDGEMASS_QUADRATURE_HPP_

#include <vector>

#include "wedgemass/massmat.hpp"
#include "wedgemass/wedge15.hpp"

namespace wedgemass {

/// Numerical integration rule over the reference wedge.
/// Invariants: all points inside the reference domain, weights sum to the
/// reference volume 1.
struct QuadratureRule {
  std::vector<NaturalPoint> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
};

/// The 18-point product rule: degree-4 six-point symmetric triangle rule
/// (two three-point orbits, closed algebraic form) crossed with 3-point
/// Gauss-Legendre on zeta. Integrates every monomial with a+b <= 4 and
/// c <= 5 exactly; all weights positive.
const QuadratureRule& gauss18();

/// M^{ij} = rho0 * sum_p w_p phi^i(p) phi^j(p) det J(p), accumulated i <= j
/// with pairwise summation over the rule points (bitwise-deterministic).
/// Throws InvalidElementError when det J <= 0 at a rule point.
MassMatrix apply_mass_rule(const QuadratureRule& rule, const NodeSet& nodes, double rho0);

}  // namespace wedgemass

#endif  // WEDGEMASS_QUADRATURE_HPP_
