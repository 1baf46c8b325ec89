#include <doctest.h>

#include <cmath>

#include "wedgemass/families.hpp"
#include "wedgemass/massmat.hpp"
#include "wedgemass/quadrature.hpp"

using namespace wedgemass;

namespace {

double apply_to_monomial(const QuadratureRule& rule, int a, int b, int c) {
  double acc = 0.0;
  for (int p = 0; p < rule.size(); ++p) {
    const auto& pt = rule.points[static_cast<size_t>(p)];
    double term = rule.weights[static_cast<size_t>(p)];
    for (int k = 0; k < a; ++k) term *= pt.xi;
    for (int k = 0; k < b; ++k) term *= pt.eta;
    for (int k = 0; k < c; ++k) term *= pt.zeta;
    acc += term;
  }
  return acc;
}

}  // namespace

TEST_CASE("gauss18: 18 interior points, positive weights summing to 1") {
  const QuadratureRule& rule = gauss18();
  REQUIRE(rule.size() == 18);
  double sum = 0.0;
  for (int p = 0; p < rule.size(); ++p) {
    CHECK(rule.weights[static_cast<size_t>(p)] > 0.0);
    CHECK(inside_reference_domain(rule.points[static_cast<size_t>(p)]));
    sum += rule.weights[static_cast<size_t>(p)];
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gauss18: exact for every monomial with a+b <= 4 and c <= 5") {
  const QuadratureRule& rule = gauss18();
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      for (int c = 0; c <= 5; ++c) {
        const double approx = apply_to_monomial(rule, a, b, c);
        const double exact = monomial_integral(a, b, c).to_double();
        if (exact == 0.0) {
          CHECK(std::abs(approx) <= 1e-15);
        } else {
          CHECK(std::abs(approx - exact) / std::abs(exact) <= 1e-15);
        }
      }
    }
  }
}

TEST_CASE("gauss18: exactness frontier stops at a+b = 5 / c = 6") {
  const QuadratureRule& rule = gauss18();
  // zeta^6 exceeds the 3-point line rule's degree
  const double z6 = apply_to_monomial(rule, 0, 0, 6);
  CHECK(std::abs(z6 - monomial_integral(0, 0, 6).to_double()) > 1e-6);
  // xi^5 exceeds the degree-4 triangle rule
  const double x5 = apply_to_monomial(rule, 5, 0, 0);
  CHECK(std::abs(x5 - monomial_integral(5, 0, 0).to_double()) > 1e-6);
}

TEST_CASE("mass rule on the parent element reproduces the exact mass matrix") {
  const MassMatrix approx = apply_mass_rule(gauss18(), NodeSet::parent(), 1.0);
  const MassMatrix exact = mass_exact(NodeSet::parent(), 1.0);
  CHECK((approx.entries - exact.entries).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(approx.entries(0, 14) == doctest::Approx(-30.0 / 1080.0).epsilon(1e-14));
}

TEST_CASE("mass rule: symmetry, density linearity, total mass") {
  const NodeSet nodes = family_nodes(FamilyId::F1, 0.25);
  const MassMatrix m1 = apply_mass_rule(gauss18(), nodes, 1.0);
  const MassMatrix m2 = apply_mass_rule(gauss18(), nodes, 2.0);

  CHECK((m1.entries - m1.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((m2.entries - 2.0 * m1.entries).cwiseAbs().maxCoeff() <= 1e-15);

  // sum of all entries = rho0 * rule-applied volume (partition of unity)
  double rule_volume = 0.0;
  const QuadratureRule& rule = gauss18();
  for (int p = 0; p < rule.size(); ++p)
    rule_volume += rule.weights[static_cast<size_t>(p)] *
                   jacobian(nodes, rule.points[static_cast<size_t>(p)]).determinant();
  CHECK(m1.entries.sum() == doctest::Approx(rule_volume).epsilon(1e-13));
}

TEST_CASE("mass rule rejects inverted elements and bad density") {
  NodeSet mirrored = NodeSet::parent();
  for (int i = 0; i < kNodeCount; ++i) mirrored.node(i)[2] *= Rational(-1);
  mirrored.refresh();
  CHECK_THROWS_AS(apply_mass_rule(gauss18(), mirrored, 1.0), InvalidElementError);
  CHECK_THROWS_AS(apply_mass_rule(gauss18(), NodeSet::parent(), 0.0), std::invalid_argument);
}
