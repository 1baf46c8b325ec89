#include "wedgemass/quadrature.hpp"

#include <array>
#include <cmath>
#include <string>

namespace wedgemass {
namespace {

// Pairwise reduction keeps the 18-term sums stable and the result
// independent of how the loop might later be reorganized.
double pairwise_sum(double* values, int n) {
  if (n == 1) return values[0];
  const int half = n / 2;
  for (int i = 0; i < half; ++i) values[i] += values[n - 1 - i];
  return pairwise_sum(values, half + (n % 2));
}

QuadratureRule build_gauss18() {
  // degree-4 six-point triangle rule, two symmetric orbits
  const double s10 = std::sqrt(10.0);
  const double spread = std::sqrt(38.0 - 44.0 * std::sqrt(2.0 / 5.0));
  const double b1 = (8.0 - s10 + spread) / 18.0;   // 0.4459484909159649
  const double b2 = (8.0 - s10 - spread) / 18.0;   // 0.0915762135097707
  const double wroot = std::sqrt(213125.0 - 53320.0 * s10);
  const double w1 = (620.0 + wroot) / 3720.0;      // orbit of b1
  const double w2 = (620.0 - wroot) / 3720.0;      // orbit of b2
  const std::array<std::array<double, 3>, 6> tri = {{
      {1.0 - 2.0 * b1, b1, w1}, {b1, 1.0 - 2.0 * b1, w1}, {b1, b1, w1},
      {1.0 - 2.0 * b2, b2, w2}, {b2, 1.0 - 2.0 * b2, w2}, {b2, b2, w2},
  }};

  // 3-point Gauss-Legendre on [-1, 1]
  const double g = std::sqrt(3.0 / 5.0);
  const std::array<std::array<double, 2>, 3> line = {{{-g, 5.0 / 9.0}, {0.0, 8.0 / 9.0}, {g, 5.0 / 9.0}}};

  QuadratureRule rule;
  rule.points.reserve(18);
  rule.weights.reserve(18);
  for (const auto& t : tri) {
    for (const auto& l : line) {
      rule.points.push_back({t[0], t[1], l[0]});
      // triangle weights are normalized to 1; the reference triangle has area 1/2
      rule.weights.push_back(0.5 * t[2] * l[1]);
    }
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss18() {
  static const QuadratureRule rule = build_gauss18();
  return rule;
}

MassMatrix apply_mass_rule(const QuadratureRule& rule, const NodeSet& nodes, double rho0) {
  if (rho0 <= 0.0) throw std::invalid_argument("apply_mass_rule: density must be positive");
  const int n = rule.size();
  std::vector<std::array<double, kNodeCount>> phis(static_cast<size_t>(n));
  std::vector<double> dets(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    const NaturalPoint& pt = rule.points[static_cast<size_t>(p)];
    const double det = jacobian(nodes, pt).determinant();
    if (det <= 0.0)
      throw InvalidElementError("non-positive det J at rule point " + std::to_string(p + 1) +
                                ": " + std::to_string(det));
    dets[static_cast<size_t>(p)] = det;
    phis[static_cast<size_t>(p)] = shape_values(pt);
  }

  MassMatrix mass;
  mass.rho0 = rho0;
  std::vector<double> contrib(static_cast<size_t>(n));
  for (int i = 0; i < kNodeCount; ++i) {
    for (int j = i; j < kNodeCount; ++j) {
      for (int p = 0; p < n; ++p)
        contrib[static_cast<size_t>(p)] = rule.weights[static_cast<size_t>(p)] *
                                          phis[static_cast<size_t>(p)][static_cast<size_t>(i)] *
                                          phis[static_cast<size_t>(p)][static_cast<size_t>(j)] *
                                          dets[static_cast<size_t>(p)];
      const double value = rho0 * pairwise_sum(contrib.data(), n);
      mass.entries(i, j) = value;
      mass.entries(j, i) = value;
    }
  }
  return mass;
}

}  // namespace wedgemass
