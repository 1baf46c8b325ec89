#include <doctest.h>

#include <cmath>
#include <random>

#include "wedgemass/families.hpp"
#include "wedgemass/wedge15.hpp"

using namespace wedgemass;

namespace {

std::mt19937 rng(987651);

NaturalPoint random_interior_point() {
  std::uniform_real_distribution<double> u(0.0, 1.0), z(-1.0, 1.0);
  double xi = u(rng), eta = u(rng);
  if (xi + eta > 1.0) {  // fold into the triangle
    xi = 1.0 - xi;
    eta = 1.0 - eta;
  }
  return {xi, eta, z(rng)};
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

// the full monomial family a wedge metric can touch (57 monomials)
bool in_metric_monomial_family(const Monomial& m) {
  const int d = m.total_degree();
  if (d <= 4) return true;  // all 35 monomials up to degree 4 are listed
  if (d == 5) return m.a + m.b <= 4 && m.c <= 5;       // zeta-degree >= 1 each
  if (d == 6) return m.c >= 3 && m.c <= 4 && m.a + m.b <= 3;
  return false;
}

}  // namespace

TEST_CASE("natural node table: Kronecker property of the shape polynomials") {
  const auto& phi = shape_polynomials();
  const auto& nat = node_natural_coords();
  for (int i = 0; i < kNodeCount; ++i)
    for (int j = 0; j < kNodeCount; ++j)
      CHECK(phi[j].eval(nat[i][0], nat[i][1], nat[i][2]) == Rational(i == j ? 1 : 0));
}

TEST_CASE("partition of unity holds as an exact polynomial identity") {
  Poly3 sum;
  for (const auto& p : shape_polynomials()) sum += p;
  CHECK(sum == Poly3::one());

  // consequently the gradients sum to zero
  for (const Var v : {Var::Xi, Var::Eta, Var::Zeta}) {
    Poly3 gsum;
    for (const auto& p : shape_polynomials()) gsum += p.diff(v);
    CHECK(gsum.is_zero());
  }
}

TEST_CASE("shape value spot checks") {
  const auto& phi = shape_polynomials();
  CHECK(phi[12].eval(Rational(1, 3), Rational(1, 3), Rational(0)) == Rational(1, 3));
  CHECK(phi[0].eval(Rational(1, 3), Rational(1, 3), Rational(0)) == Rational(-2, 9));

  const auto at_origin = shape_values({0.0, 0.0, 0.0});
  for (int j = 0; j < kNodeCount; ++j)
    CHECK(at_origin[static_cast<size_t>(j)] == doctest::Approx(j == 12 ? 1.0 : 0.0).epsilon(1e-14));

  // float-mode Kronecker property at all 15 nodes
  const auto& nat = node_natural_coords();
  for (int i = 0; i < kNodeCount; ++i) {
    const auto values = shape_values(
        {nat[static_cast<size_t>(i)][0].to_double(), nat[static_cast<size_t>(i)][1].to_double(),
         nat[static_cast<size_t>(i)][2].to_double()});
    for (int j = 0; j < kNodeCount; ++j)
      CHECK(values[static_cast<size_t>(j)] ==
            doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
  }
}

TEST_CASE("float shape values match the exact polynomials and sum to one") {
  const auto& phi = shape_polynomials();
  for (int trial = 0; trial < 100; ++trial) {
    const NaturalPoint p = random_interior_point();
    const auto values = shape_values(p);
    double sum = 0.0;
    for (int i = 0; i < kNodeCount; ++i) {
      const double exact = phi[static_cast<size_t>(i)].eval(p.xi, p.eta, p.zeta);
      CHECK(values[static_cast<size_t>(i)] == doctest::Approx(exact).epsilon(1e-14));
      sum += values[static_cast<size_t>(i)];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("float shape gradients match the polynomial derivatives") {
  const auto& phi = shape_polynomials();
  for (int trial = 0; trial < 100; ++trial) {
    const NaturalPoint p = random_interior_point();
    const auto grads = shape_gradients(p);
    for (int i = 0; i < kNodeCount; ++i)
      for (int n = 0; n < 3; ++n) {
        const double exact =
            phi[static_cast<size_t>(i)].diff(static_cast<Var>(n)).eval(p.xi, p.eta, p.zeta);
        CHECK(grads[static_cast<size_t>(i)][static_cast<size_t>(n)] ==
              doctest::Approx(exact).epsilon(1e-13));
      }
  }
}

TEST_CASE("isoparametric map: identity on the parent, Kronecker, translation") {
  const NodeSet parent = NodeSet::parent();
  for (int trial = 0; trial < 20; ++trial) {
    const NaturalPoint p = random_interior_point();
    const auto image = isoparametric_map(parent, p);
    CHECK(image[0] == doctest::Approx(p.xi).epsilon(1e-14));
    CHECK(image[1] == doctest::Approx(p.eta).epsilon(1e-14));
    CHECK(image[2] == doctest::Approx(p.zeta).epsilon(1e-14));
  }

  const auto& nat = node_natural_coords();
  const NodeSet nodes = random_perturbed_parent(0.1);
  for (int i = 0; i < kNodeCount; ++i) {
    const NaturalPoint p{nat[static_cast<size_t>(i)][0].to_double(),
                         nat[static_cast<size_t>(i)][1].to_double(),
                         nat[static_cast<size_t>(i)][2].to_double()};
    const auto image = isoparametric_map(nodes, p);
    for (int m = 0; m < 3; ++m)
      CHECK(image[static_cast<size_t>(m)] == doctest::Approx(nodes.coord(i, m)).epsilon(1e-13));
  }

  // translating every node translates the image
  NodeSet shifted = nodes;
  const Rational tx(3, 2), ty(-1, 4), tz(2);
  for (int i = 0; i < kNodeCount; ++i) {
    shifted.node(i)[0] += tx;
    shifted.node(i)[1] += ty;
    shifted.node(i)[2] += tz;
  }
  shifted.refresh();
  const NaturalPoint p = random_interior_point();
  const auto a = isoparametric_map(nodes, p);
  const auto b = isoparametric_map(shifted, p);
  CHECK(b[0] - a[0] == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(b[1] - a[1] == doctest::Approx(-0.25).epsilon(1e-13));
  CHECK(b[2] - a[2] == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("jacobian: identity on the parent, scaling law") {
  const NodeSet parent = NodeSet::parent();
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Matrix3d J = jacobian(parent, random_interior_point());
    CHECK((J - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    CHECK(J.determinant() == doctest::Approx(1.0).epsilon(1e-14));
  }

  NodeSet scaled = NodeSet::parent();
  for (int i = 0; i < kNodeCount; ++i)
    for (int m = 0; m < 3; ++m)
      scaled.node(i)[static_cast<size_t>(m)] *= Rational(2);
  scaled.refresh();
  const NaturalPoint p = random_interior_point();
  CHECK((jacobian(scaled, p) - 2.0 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK(jacobian(scaled, p).determinant() == doctest::Approx(8.0).epsilon(1e-14));

  CHECK((jacobian(family_nodes(FamilyId::F2, 0.0), p) - Eigen::Matrix3d::Identity())
            .cwiseAbs()
            .maxCoeff() <= 1e-14);
}

TEST_CASE("metric polynomial: parent is exactly the constant 1") {
  CHECK(metric_polynomial(NodeSet::parent()) == Poly3::one());
}

TEST_CASE("metric polynomial matches det(jacobian) at random points, all families") {
  std::uniform_real_distribution<double> ud(0.0, 0.5);
  for (const FamilyId family : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
    const NodeSet nodes = family_nodes(family, ud(rng));
    const Poly3 metric = metric_polynomial(nodes);
    for (int trial = 0; trial < 100; ++trial) {
      const NaturalPoint p = random_interior_point();
      CHECK(jacobian(nodes, p).determinant() ==
            doctest::Approx(metric.eval(p.xi, p.eta, p.zeta)).epsilon(1e-13));
    }
  }
}

TEST_CASE("metric polynomial degree bounds and monomial family") {
  for (int trial = 0; trial < 30; ++trial) {
    const Poly3 metric = metric_polynomial(random_perturbed_parent(0.2));
    CHECK(metric.total_degree() <= 6);
    for (const auto& [m, c] : metric.terms()) CHECK(in_metric_monomial_family(m));
  }
}

// Exact symbolic expansions of the family metrics, derived independently
// (symbolic determinant of the polynomial Jacobian, cross-checked by two
// engines): the source of truth for the spot values below.
TEST_CASE("family 1 metric: exact coefficients in delta") {
  for (const Rational& d : {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(1, 2)}) {
    const Poly3 metric = metric_polynomial(family_nodes(FamilyId::F1, d));
    // constant term (delta - 1)^2 (delta + 2) / 2 = 1 - 1.5 d + 0.5 d^3
    CHECK(metric.coefficient({0, 0, 0}) ==
          Rational(1) - Rational(3, 2) * d + Rational(1, 2) * d * d * d);
    CHECK(metric.coefficient({0, 2, 3}) == -(d * d * d));                     // eta^2 zeta^3
    CHECK(metric.coefficient({0, 1, 4}) == Rational(3, 2) * d * d * d);       // eta zeta^4
    CHECK(metric.coefficient({1, 0, 4}) == Rational(3, 2) * d * d * d);       // xi zeta^4
    CHECK(metric.coefficient({0, 0, 1}) == Rational(3, 2) * d * d * (d - Rational(1)));
    CHECK(metric.total_degree() == 6);
  }
}

TEST_CASE("family 2 metric: exact coefficients in delta") {
  for (const Rational& d : {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(1, 2)}) {
    const Poly3 metric = metric_polynomial(family_nodes(FamilyId::F2, d));
    CHECK(metric.coefficient({0, 0, 0}) == Rational(1) - d - Rational(3, 2) * d * d);
    CHECK(metric.coefficient({0, 0, 3}) == -(d * d));                // zeta^3
    CHECK(metric.coefficient({0, 0, 4}) == Rational(1, 4) * d * d);  // zeta^4
    CHECK(metric.total_degree() == 4);
  }
}

TEST_CASE("family 3 metric: exact closed form 1 - d/2 - d z + 1.5 d e + d e z - d e^2") {
  for (const Rational& d : {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(1, 2)}) {
    Poly3 expected = Poly3::constant(Rational(1) - Rational(1, 2) * d);
    expected += Poly3::term({0, 0, 1}, -d);
    expected += Poly3::term({0, 1, 0}, Rational(3, 2) * d);
    expected += Poly3::term({0, 1, 1}, d);
    expected += Poly3::term({0, 2, 0}, -d);
    CHECK(metric_polynomial(family_nodes(FamilyId::F3, d)) == expected);
  }
}

TEST_CASE("volume: parent, scaling, family values") {
  CHECK(volume(NodeSet::parent()) == doctest::Approx(1.0));

  NodeSet scaled = NodeSet::parent();
  for (int i = 0; i < kNodeCount; ++i)
    for (int m = 0; m < 3; ++m)
      scaled.node(i)[static_cast<size_t>(m)] *= Rational(2);
  scaled.refresh();
  CHECK(volume(scaled) == doctest::Approx(8.0));

  // exact family volumes at delta = 3/10 (independent oracle values)
  CHECK(volume_exact(family_nodes(FamilyId::F1, Rational(3, 10))) == Rational(4433, 5000));
  CHECK(volume_exact(family_nodes(FamilyId::F2, Rational(3, 10))) == Rational(1039, 1000));
  CHECK(volume_exact(family_nodes(FamilyId::F3, Rational(3, 10))) == Rational(19, 20));

  // mirrored element: negative volume is rejected
  NodeSet mirrored = NodeSet::parent();
  for (int i = 0; i < kNodeCount; ++i) mirrored.node(i)[2] *= Rational(-1);
  mirrored.refresh();
  CHECK_THROWS_AS(volume(mirrored), InvalidElementError);
}

TEST_CASE("inside_reference_domain accepts scheme-like points and rejects outsiders") {
  CHECK(inside_reference_domain({37.0 / 120.0, 37.0 / 120.0, -1.0 / 40.0}));
  CHECK(inside_reference_domain({0.0, 0.0, -1.0}));
  CHECK(!inside_reference_domain({0.6, 0.6, 0.0}));
  CHECK(!inside_reference_domain({0.1, 0.1, -1.1}));
}
