#include <doctest.h>

#include <Eigen/Cholesky>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "wedgemass/families.hpp"
#include "wedgemass/massmat.hpp"
#include "wedgemass/quadrature.hpp"

using namespace wedgemass;

namespace {

std::mt19937 rng(424242);

// ---- independent brute-force oracle -----------------------------------------
// High-order quadrature over the wedge via the Duffy transform
// xi = u, eta = v (1 - u), with Gauss-Legendre nodes computed by Newton
// iteration on the Legendre recurrence. Independent of the exact-integration
// path under test.

std::vector<std::pair<double, double>> gauss_legendre(int n) {
  std::vector<std::pair<double, double>> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p1 = 0.0, dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    out[static_cast<size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
  }
  return out;
}

std::vector<std::pair<NaturalPoint, double>> duffy_wedge_rule(int nu, int nv, int nz) {
  const auto gu = gauss_legendre(nu), gv = gauss_legendre(nv), gz = gauss_legendre(nz);
  std::vector<std::pair<NaturalPoint, double>> rule;
  for (const auto& [tu, wu] : gu) {
    const double u = 0.5 * (tu + 1.0);
    for (const auto& [tv, wv] : gv) {
      const double v = 0.5 * (tv + 1.0);
      for (const auto& [tz, wz] : gz) {
        const NaturalPoint p{u, v * (1.0 - u), tz};
        rule.push_back({p, 0.25 * wu * wv * wz * (1.0 - u)});
      }
    }
  }
  return rule;
}

Matrix15d brute_force_mass(const NodeSet& nodes) {
  static const auto rule = duffy_wedge_rule(10, 6, 6);
  Matrix15d m = Matrix15d::Zero();
  for (const auto& [p, w] : rule) {
    const auto phi = shape_values(p);
    const double det = jacobian(nodes, p).determinant();
    for (int i = 0; i < kNodeCount; ++i)
      for (int j = i; j < kNodeCount; ++j) {
        const double c = w * phi[static_cast<size_t>(i)] * phi[static_cast<size_t>(j)] * det;
        m(i, j) += c;
        if (i != j) m(j, i) += c;
      }
  }
  return m;
}

NodeSet random_perturbed_parent(double amplitude) {
  std::uniform_real_distribution<double> d(-amplitude, amplitude);
  std::array<std::array<double, 3>, kNodeCount> coords{};
  const auto& nat = node_natural_coords();
  for (size_t i = 0; i < kNodeCount; ++i)
    for (size_t m = 0; m < 3; ++m)
      coords[i][m] = nat[i][m].to_double() + d(rng);
  return NodeSet::from_doubles(coords);
}

NodeSet stretched_element(const Rational& a, const Rational& b) {
  std::array<RationalTriple, kNodeCount> coords;
  const auto& nat = node_natural_coords();
  for (size_t i = 0; i < kNodeCount; ++i) {
    coords[i][0] = nat[i][0] + a * nat[i][0] * nat[i][2];
    coords[i][1] = nat[i][1] + b * nat[i][1] * nat[i][2];
    coords[i][2] = nat[i][2];
  }
  return NodeSet(std::move(coords));
}

double max_abs_diff(const MassMatrix& x, const MassMatrix& y) {
  return (x.entries - y.entries).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("exact mass of the parent equals the CM coefficient matrix exactly") {
  const SymRational15 mass = mass_exact_rational(NodeSet::parent());
  CHECK(mass == embedded_coeff_matrices(SchemeKind::CM).matrices[0]);
  CHECK(mass.at(0, 0) == Rational(24, 1080));
  CHECK(mass.at(0, 14) == Rational(-30, 1080));
  CHECK(mass.at(14, 14) == Rational(96, 1080));
  CHECK(mass.total() == Rational(1));  // parent volume

  const MassMatrix dbl = mass_exact(NodeSet::parent(), 1.0);
  CHECK(dbl.entries(0, 0) == doctest::Approx(24.0 / 1080.0).epsilon(1e-15));
  CHECK((dbl.entries - dbl.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("total exact mass equals the exact volume for every family and delta") {
  for (const FamilyId family : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
    for (int tenth = 0; tenth <= 5; ++tenth) {
      const NodeSet nodes = family_nodes(family, Rational(tenth, 10));
      CHECK(mass_exact_rational(nodes).total() == volume_exact(nodes));
    }
  }
}

TEST_CASE("family at delta 0 reproduces the parent exact mass") {
  const SymRational15 parent = mass_exact_rational(NodeSet::parent());
  CHECK(mass_exact_rational(family_nodes(FamilyId::F1, Rational(0))) == parent);
}

TEST_CASE("scheme mass on the parent matches the exact mass") {
  const MassMatrix exact = mass_exact(NodeSet::parent(), 1.0);
  for (const SchemeKind kind : {SchemeKind::CM, SchemeKind::LM, SchemeKind::QM})
    CHECK(max_abs_diff(mass_scheme(NodeSet::parent(), kind, 1.0), exact) <= 1e-14);
}

TEST_CASE("CM scheme equals the centroid sample times the CM matrix") {
  const NodeSet nodes = family_nodes(FamilyId::F2, 0.2);
  const double sample = jacobian(nodes, {1.0 / 3.0, 1.0 / 3.0, 0.0}).determinant();
  const auto& cm = embedded_coeff_matrices(SchemeKind::CM).matrices[0];
  const MassMatrix scheme = mass_scheme(nodes, SchemeKind::CM, 1.0);
  for (int i = 0; i < kNodeCount; ++i)
    for (int j = 0; j < kNodeCount; ++j)
      CHECK(scheme.entries(i, j) ==
            doctest::Approx(sample * cm.at(i, j).to_double()).epsilon(1e-14));
}

TEST_CASE("exactness hierarchy: linear metric, quadratic metric") {
  const NodeSet linear = stretched_element(Rational(1, 4), 0);
  REQUIRE(metric_polynomial(linear).total_degree() == 1);
  const MassMatrix exact_lin = mass_exact(linear, 1.0);
  CHECK(max_abs_diff(mass_scheme(linear, SchemeKind::LM, 1.0), exact_lin) <= 1e-13);
  CHECK(max_abs_diff(mass_scheme(linear, SchemeKind::QM, 1.0), exact_lin) <= 1e-13);

  const NodeSet quadratic = stretched_element(Rational(1, 4), Rational(-1, 8));
  REQUIRE(metric_polynomial(quadratic).total_degree() == 2);
  const MassMatrix exact_quad = mass_exact(quadratic, 1.0);
  CHECK(max_abs_diff(mass_scheme(quadratic, SchemeKind::QM, 1.0), exact_quad) <= 1e-13);
  CHECK(max_abs_diff(mass_scheme(quadratic, SchemeKind::CM, 1.0), exact_quad) > 1e-6);
}

TEST_CASE("positive definiteness for the parent and families up to delta 0.3") {
  const auto is_pd = [](const NodeSet& nodes) {
    const Eigen::LLT<Matrix15d> llt(mass_exact(nodes, 1.0).entries);
    return llt.info() == Eigen::Success;
  };
  CHECK(is_pd(NodeSet::parent()));
  for (const FamilyId family : {FamilyId::F1, FamilyId::F2, FamilyId::F3})
    for (const double delta : {0.1, 0.2, 0.3})
      CHECK(is_pd(family_nodes(family, delta)));
}

TEST_CASE("exact mass agrees with the brute-force quadrature oracle") {
  // parent plus 19 bounded random perturbations
  std::vector<NodeSet> elements;
  elements.push_back(NodeSet::parent());
  for (int trial = 0; trial < 19; ++trial) elements.push_back(random_perturbed_parent(0.05));

  for (const NodeSet& nodes : elements) {
    const MassMatrix exact = mass_exact(nodes, 1.0);
    const Matrix15d oracle = brute_force_mass(nodes);
    for (int i = 0; i < kNodeCount; ++i)
      for (int j = 0; j < kNodeCount; ++j) {
        const double scale = std::max(std::abs(oracle(i, j)), std::abs(exact.entries(i, j)));
        CHECK(std::abs(exact.entries(i, j) - oracle(i, j)) <= 1e-12 * scale);
      }
  }
}

TEST_CASE("density scales the exact and scheme masses linearly") {
  const NodeSet nodes = family_nodes(FamilyId::F1, 0.2);
  const MassMatrix one = mass_exact(nodes, 1.0);
  const MassMatrix two = mass_exact(nodes, 2.0);
  CHECK((two.entries - 2.0 * one.entries).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK_THROWS_AS(mass_exact(nodes, -1.0), std::invalid_argument);
}

TEST_CASE("error stats: zero on identical matrices, constructed perturbation") {
  const MassMatrix m = mass_exact(NodeSet::parent(), 1.0);
  const ErrorStats zero = error_stats(m, m);
  CHECK(zero.avg_abs == 0.0);
  CHECK(zero.max_abs == 0.0);

  MassMatrix perturbed = m;
  perturbed.entries(2, 7) += 0.01;
  perturbed.entries(7, 2) += 0.01;
  const ErrorStats stats = error_stats(perturbed, m);
  CHECK(stats.max_abs == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(stats.avg_abs == doctest::Approx(0.02 / 225.0).epsilon(1e-12));

  MassMatrix other_rho = m;
  other_rho.rho0 = 2.0;
  CHECK_THROWS_AS(error_stats(other_rho, m), std::invalid_argument);
}

TEST_CASE("scheme error ordering on a coarse element") {
  const NodeSet nodes = family_nodes(FamilyId::F1, 0.3);
  const MassMatrix exact = mass_exact(nodes, 1.0);
  const double cm = error_stats(mass_scheme(nodes, SchemeKind::CM, 1.0), exact).avg_abs;
  const double lm = error_stats(mass_scheme(nodes, SchemeKind::LM, 1.0), exact).avg_abs;
  const double qm = error_stats(mass_scheme(nodes, SchemeKind::QM, 1.0), exact).avg_abs;
  CHECK(cm >= lm);
  CHECK(lm >= qm);
  CHECK(qm > 0.0);
}
