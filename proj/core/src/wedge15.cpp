#include "wedgemass/wedge15.hpp"

#include <cmath>

namespace wedgemass {
namespace {

Poly3 linear(Rational c0, Rational cx, Rational ce, Rational cz) {
  Poly3 p = Poly3::constant(std::move(c0));
  p += Poly3::term({1, 0, 0}, std::move(cx));
  p += Poly3::term({0, 1, 0}, std::move(ce));
  p += Poly3::term({0, 0, 1}, std::move(cz));
  return p;
}

std::array<Poly3, kNodeCount> build_shape_polynomials() {
  const Poly3 xi = Poly3::variable(Var::Xi);
  const Poly3 eta = Poly3::variable(Var::Eta);
  const Poly3 lam = linear(1, -1, -1, 0);   // 1 - xi - eta
  const Poly3 zm = linear(1, 0, 0, -1);     // 1 - zeta
  const Poly3 zp = linear(1, 0, 0, 1);      // 1 + zeta
  const Poly3 zq = linear(1, 0, 0, 0) - Poly3::term({0, 0, 2}, 1);  // 1 - zeta^2
  const Rational half{1, 2};

  return {
      lam * zm * linear(0, 2, 2, 1) * -half,
      xi * zm * linear(-2, 2, 0, -1) * half,
      eta * zm * linear(-2, 0, 2, -1) * half,
      lam * zp * linear(0, 2, 2, -1) * -half,
      xi * zp * linear(-2, 2, 0, 1) * half,
      eta * zp * linear(-2, 0, 2, 1) * half,
      xi * lam * zm * Rational(2),
      xi * eta * zm * Rational(2),
      eta * lam * zm * Rational(2),
      xi * lam * zp * Rational(2),
      xi * eta * zp * Rational(2),
      eta * lam * zp * Rational(2),
      lam * zq,
      xi * zq,
      eta * zq,
  };
}

const std::array<std::array<Poly3, 3>, kNodeCount>& shape_gradient_polynomials() {
  static const auto grads = [] {
    std::array<std::array<Poly3, 3>, kNodeCount> g;
    const auto& phi = shape_polynomials();
    for (int i = 0; i < kNodeCount; ++i)
      for (int n = 0; n < 3; ++n)
        g[static_cast<size_t>(i)][static_cast<size_t>(n)] = phi[static_cast<size_t>(i)].diff(static_cast<Var>(n));
    return g;
  }();
  return grads;
}

}  // namespace

bool inside_reference_domain(const NaturalPoint& p, double tol) {
  return p.xi >= -tol && p.eta >= -tol && p.xi + p.eta <= 1.0 + tol &&
         p.zeta >= -1.0 - tol && p.zeta <= 1.0 + tol;
}

NodeSet::NodeSet(std::array<RationalTriple, kNodeCount> coords) : coords_(std::move(coords)) {
  refresh();
}

NodeSet NodeSet::from_doubles(const std::array<std::array<double, 3>, kNodeCount>& coords) {
  std::array<RationalTriple, kNodeCount> exact;
  for (size_t i = 0; i < kNodeCount; ++i)
    for (size_t m = 0; m < 3; ++m)
      exact[i][m] = Rational::from_double(coords[i][m]);
  return NodeSet(std::move(exact));
}

NodeSet NodeSet::parent() { return NodeSet(node_natural_coords()); }

void NodeSet::refresh() {
  for (size_t i = 0; i < kNodeCount; ++i)
    for (size_t m = 0; m < 3; ++m)
      doubles_[i][m] = coords_[i][m].to_double();
}

const std::array<RationalTriple, kNodeCount>& node_natural_coords() {
  static const std::array<RationalTriple, kNodeCount> coords = [] {
    const Rational h{1, 2};
    return std::array<RationalTriple, kNodeCount>{{
        {0, 0, -1}, {1, 0, -1}, {0, 1, -1},          // bottom corners
        {0, 0, 1},  {1, 0, 1},  {0, 1, 1},           // top corners
        {h, 0, -1}, {h, h, -1}, {0, h, -1},          // bottom mid-edges
        {h, 0, 1},  {h, h, 1},  {0, h, 1},           // top mid-edges
        {0, 0, 0},  {1, 0, 0},  {0, 1, 0},           // vertical mid-edges
    }};
  }();
  return coords;
}

const std::array<Poly3, kNodeCount>& shape_polynomials() {
  static const auto phi = build_shape_polynomials();
  return phi;
}

std::array<double, kNodeCount> shape_values(const NaturalPoint& p) {
  const double x = p.xi, e = p.eta, z = p.zeta;
  const double lam = 1.0 - x - e;
  const double zm = 1.0 - z, zp = 1.0 + z, zq = 1.0 - z * z;
  return {
      -0.5 * lam * zm * (2.0 * x + 2.0 * e + z),
      0.5 * x * zm * (2.0 * x - z - 2.0),
      0.5 * e * zm * (2.0 * e - z - 2.0),
      -0.5 * lam * zp * (2.0 * x + 2.0 * e - z),
      0.5 * x * zp * (2.0 * x + z - 2.0),
      0.5 * e * zp * (2.0 * e + z - 2.0),
      2.0 * x * lam * zm,
      2.0 * x * e * zm,
      2.0 * e * lam * zm,
      2.0 * x * lam * zp,
      2.0 * x * e * zp,
      2.0 * e * lam * zp,
      lam * zq,
      x * zq,
      e * zq,
  };
}

std::array<std::array<double, 3>, kNodeCount> shape_gradients(const NaturalPoint& p) {
  const double x = p.xi, e = p.eta, z = p.zeta;
  const double zm = z - 1.0, zp = z + 1.0, lam = e + x - 1.0;
  return {{
      {-0.5 * zm * (4.0 * e + 4.0 * x + z - 2.0),
       -0.5 * zm * (4.0 * e + 4.0 * x + z - 2.0),
       -0.5 * lam * (2.0 * e + 2.0 * x + 2.0 * z - 1.0)},
      {-0.5 * zm * (4.0 * x - z - 2.0), 0.0, -0.5 * x * (2.0 * x - 2.0 * z - 1.0)},
      {0.0, 0.5 * zm * (-4.0 * e + z + 2.0), 0.5 * e * (-2.0 * e + 2.0 * z + 1.0)},
      {0.5 * zp * (4.0 * e + 4.0 * x - z - 2.0),
       0.5 * zp * (4.0 * e + 4.0 * x - z - 2.0),
       0.5 * lam * (2.0 * e + 2.0 * x - 2.0 * z - 1.0)},
      {0.5 * zp * (4.0 * x + z - 2.0), 0.0, 0.5 * x * (2.0 * x + 2.0 * z - 1.0)},
      {0.0, 0.5 * zp * (4.0 * e + z - 2.0), 0.5 * e * (2.0 * e + 2.0 * z - 1.0)},
      {2.0 * zm * (e + 2.0 * x - 1.0), 2.0 * x * zm, 2.0 * x * lam},
      {-2.0 * e * zm, -2.0 * x * zm, -2.0 * e * x},
      {2.0 * e * zm, 2.0 * zm * (2.0 * e + x - 1.0), 2.0 * e * lam},
      {-2.0 * zp * (e + 2.0 * x - 1.0), -2.0 * x * zp, -2.0 * x * lam},
      {2.0 * e * zp, 2.0 * x * zp, 2.0 * e * x},
      {-2.0 * e * zp, -2.0 * zp * (2.0 * e + x - 1.0), -2.0 * e * lam},
      {zm * zp, zm * zp, 2.0 * z * lam},
      {-zm * zp, 0.0, -2.0 * x * z},
      {0.0, -zm * zp, -2.0 * e * z},
  }};
}

std::array<double, 3> isoparametric_map(const NodeSet& nodes, const NaturalPoint& p) {
  const auto phi = shape_values(p);
  std::array<double, 3> out{0.0, 0.0, 0.0};
  for (int i = 0; i < kNodeCount; ++i)
    for (int m = 0; m < 3; ++m)
      out[static_cast<size_t>(m)] += phi[static_cast<size_t>(i)] * nodes.coord(i, m);
  return out;
}

Eigen::Matrix3d jacobian(const NodeSet& nodes, const NaturalPoint& p) {
  const auto grad = shape_gradients(p);
  Eigen::Matrix3d J = Eigen::Matrix3d::Zero();
  for (int i = 0; i < kNodeCount; ++i)
    for (int m = 0; m < 3; ++m)
      for (int n = 0; n < 3; ++n)
        J(m, n) += nodes.coord(i, m) * grad[static_cast<size_t>(i)][static_cast<size_t>(n)];
  return J;
}

Poly3 metric_polynomial(const NodeSet& nodes) {
  const auto& dphi = shape_gradient_polynomials();
  std::array<std::array<Poly3, 3>, 3> J;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      Poly3 entry;
      for (int i = 0; i < kNodeCount; ++i) {
        const Rational& x = nodes.node(i)[static_cast<size_t>(m)];
        if (!x.is_zero()) entry += dphi[static_cast<size_t>(i)][static_cast<size_t>(n)] * x;
      }
      J[static_cast<size_t>(m)][static_cast<size_t>(n)] = std::move(entry);
    }
  }
  // cofactor expansion along the first row
  Poly3 det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]);
  det -= J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]);
  det += J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
  return det;
}

Rational volume_exact(const NodeSet& nodes) { return wedge_integral(metric_polynomial(nodes)); }

double volume(const NodeSet& nodes) {
  const Rational v = volume_exact(nodes);
  if (v.sign() <= 0)
    throw InvalidElementError("non-physical element: volume " + v.str() + " <= 0");
  return v.to_double();
}

}  // namespace wedgemass
