#include "wedgemass/massmat.hpp"

#include <map>
#include <stdexcept>

namespace wedgemass {
namespace {

const std::array<Poly3, SymRational15::kPacked>& shape_products() {
  static const auto products = [] {
    std::array<Poly3, SymRational15::kPacked> out;
    const auto& phi = shape_polynomials();
    for (int i = 0; i < kNodeCount; ++i)
      for (int j = i; j < kNodeCount; ++j)
        out[static_cast<size_t>(SymRational15::packed_index(i, j))] =
            phi[static_cast<size_t>(i)] * phi[static_cast<size_t>(j)];
    return out;
  }();
  return products;
}

// double views of the embedded coefficient matrices, converted once
const std::vector<Matrix15d>& coeff_matrices_double(SchemeKind kind) {
  static const auto make = [](SchemeKind k) {
    std::vector<Matrix15d> out;
    for (const auto& mat : embedded_coeff_matrices(k).matrices) {
      Matrix15d m;
      for (int i = 0; i < kNodeCount; ++i)
        for (int j = 0; j < kNodeCount; ++j)
          m(i, j) = mat.at(i, j).to_double();
      out.push_back(m);
    }
    return out;
  };
  static const std::vector<Matrix15d> cm = make(SchemeKind::CM);
  static const std::vector<Matrix15d> lm = make(SchemeKind::LM);
  static const std::vector<Matrix15d> qm = make(SchemeKind::QM);
  switch (kind) {
    case SchemeKind::CM: return cm;
    case SchemeKind::LM: return lm;
    case SchemeKind::QM: return qm;
  }
  throw std::logic_error("coeff_matrices_double: bad SchemeKind");
}

}  // namespace

SymRational15 mass_exact_rational(const NodeSet& nodes) {
  const Poly3 metric = metric_polynomial(nodes);
  // memoize integral of (monomial * metric) over the phi-phi monomials
  std::map<Monomial, Rational, GradedLexLess> metric_moments;
  const auto moment = [&](const Monomial& m) -> const Rational& {
    auto it = metric_moments.find(m);
    if (it == metric_moments.end()) {
      Rational acc = 0;
      for (const auto& [mj, cj] : metric.terms())
        acc += cj * monomial_integral(m.a + mj.a, m.b + mj.b, m.c + mj.c);
      it = metric_moments.emplace(m, std::move(acc)).first;
    }
    return it->second;
  };

  const auto& products = shape_products();
  SymRational15 out;
  for (int i = 0; i < kNodeCount; ++i) {
    for (int j = i; j < kNodeCount; ++j) {
      Rational acc = 0;
      for (const auto& [m, c] : products[static_cast<size_t>(SymRational15::packed_index(i, j))].terms())
        acc += c * moment(m);
      out.set(i, j, std::move(acc));
    }
  }
  return out;
}

MassMatrix mass_exact(const NodeSet& nodes, double rho0) {
  if (rho0 <= 0.0) throw std::invalid_argument("mass_exact: density must be positive");
  volume(nodes);  // rejects non-physical elements
  const SymRational15 exact = mass_exact_rational(nodes);
  MassMatrix mass;
  mass.rho0 = rho0;
  for (int i = 0; i < kNodeCount; ++i)
    for (int j = 0; j < kNodeCount; ++j)
      mass.entries(i, j) = rho0 * exact.at(i, j).to_double();
  return mass;
}

MassMatrix mass_scheme(const NodeSet& nodes, SchemeKind kind, double rho0) {
  if (rho0 <= 0.0) throw std::invalid_argument("mass_scheme: density must be positive");
  const std::vector<double> samples = metric_samples(kind, nodes);
  const auto& mats = coeff_matrices_double(kind);
  MassMatrix mass;
  mass.rho0 = rho0;
  mass.entries.setZero();
  for (size_t k = 0; k < mats.size(); ++k) mass.entries += samples[k] * mats[k];
  mass.entries *= rho0;
  return mass;
}

ErrorStats error_stats(const MassMatrix& approx, const MassMatrix& reference) {
  if (approx.rho0 != reference.rho0)
    throw std::invalid_argument("error_stats: mismatched densities");
  const Matrix15d diff = (approx.entries - reference.entries).cwiseAbs();
  ErrorStats stats;
  stats.avg_abs = diff.sum() / (kNodeCount * kNodeCount);
  stats.max_abs = diff.maxCoeff();
  return stats;
}

}  // namespace wedgemass
