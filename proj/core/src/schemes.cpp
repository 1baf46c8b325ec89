#include "wedgemass/schemes.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <utility>

#include "coeff_tables.hpp"

namespace wedgemass {
namespace {

Poly3 linear(Rational c0, Rational cx, Rational ce, Rational cz) {
  Poly3 p = Poly3::constant(std::move(c0));
  p += Poly3::term({1, 0, 0}, std::move(cx));
  p += Poly3::term({0, 1, 0}, std::move(ce));
  p += Poly3::term({0, 0, 1}, std::move(cz));
  return p;
}

// full quadratic: c0 + cx xi + ce eta + cz zeta + cxe xi eta + cxz xi zeta
//               + cez eta zeta + cxx xi^2 + cee eta^2 + czz zeta^2
Poly3 quadratic(Rational c0, Rational cx, Rational ce, Rational cz, Rational cxe,
                Rational cxz, Rational cez, Rational cxx, Rational cee, Rational czz) {
  Poly3 p = linear(std::move(c0), std::move(cx), std::move(ce), std::move(cz));
  p += Poly3::term({1, 1, 0}, std::move(cxe));
  p += Poly3::term({1, 0, 1}, std::move(cxz));
  p += Poly3::term({0, 1, 1}, std::move(cez));
  p += Poly3::term({2, 0, 0}, std::move(cxx));
  p += Poly3::term({0, 2, 0}, std::move(cee));
  p += Poly3::term({0, 0, 2}, std::move(czz));
  return p;
}

SchemeSpec finalize(SchemeSpec spec) {
  for (const auto& p : spec.points)
    spec.points_d.push_back({p[0].to_double(), p[1].to_double(), p[2].to_double()});
  return spec;
}

SchemeSpec build_cm() {
  SchemeSpec spec{SchemeKind::CM, {}, {}, {}};
  spec.points.push_back({Rational(1, 3), Rational(1, 3), Rational(0)});  // centroid
  spec.interpolants.push_back(Poly3::one());
  return spec;
}

std::vector<RationalTriple> lm_points() {
  const Rational a{37, 120}, b{49, 120}, zlo{-1, 40}, zhi{3, 40};
  return {{a, a, zlo}, {b, a, zlo}, {a, b, zlo}, {a, a, zhi}};
}

SchemeSpec build_lm() {
  SchemeSpec spec{SchemeKind::LM, lm_points(), {}, {}};
  spec.interpolants = {
      linear({83, 12}, -10, -10, -10),
      linear({-37, 12}, 10, 0, 0),
      linear({-37, 12}, 0, 10, 0),
      linear({1, 4}, 0, 0, 10),
  };
  return spec;
}

SchemeSpec build_qm() {
  SchemeSpec spec{SchemeKind::QM, lm_points(), {}, {}};
  const Rational m{43, 120}, a{37, 120}, zlo{-1, 40}, zmid{1, 40};
  spec.points.push_back({m, a, zlo});
  spec.points.push_back({m, m, zlo});
  spec.points.push_back({a, m, zlo});
  spec.points.push_back({a, a, zmid});
  spec.points.push_back({m, a, zmid});
  spec.points.push_back({a, m, zmid});
  spec.interpolants = {
      quadratic({6391, 72}, {-800, 3}, {-800, 3}, {-800, 3}, 400, 400, 400, 200, 200, 200),
      quadratic({1591, 72}, {-400, 3}, 0, 0, 0, 0, 0, 200, 0, 0),
      quadratic({1591, 72}, 0, {-400, 3}, 0, 0, 0, 0, 0, 200, 0),
      quadratic({-1, 8}, 0, 0, 0, 0, 0, 0, 0, 0, 200),
      quadratic({-3071, 36}, 400, {370, 3}, {370, 3}, -400, -400, 0, -400, 0, 0),
      quadratic({1369, 36}, {-370, 3}, {-370, 3}, 0, 400, 0, 0, 0, 0, 0),
      quadratic({-3071, 36}, {370, 3}, 400, {370, 3}, -400, 0, -400, 0, -400, 0),
      quadratic({83, 12}, -10, -10, {800, 3}, 0, -400, -400, 0, 0, -400),
      quadratic({-37, 12}, 10, 0, {-370, 3}, 0, 400, 0, 0, 0, 0),
      quadratic({-37, 12}, 0, 10, {-370, 3}, 0, 0, 400, 0, 0, 0),
  };
  return spec;
}

// integral of phi^i phi^j over the wedge for the packed (i, j) pairs,
// shared by every coefficient-matrix generation
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

CoeffMatrices parse_table(SchemeKind kind, const char* const* table) {
  CoeffMatrices out{kind, {}};
  const int n = point_count(kind);
  out.matrices.resize(static_cast<size_t>(n));
  size_t idx = 0;
  for (int k = 0; k < n; ++k)
    for (int p = 0; p < SymRational15::kPacked; ++p)
      out.matrices[static_cast<size_t>(k)].packed()[static_cast<size_t>(p)] =
          Rational::from_string(table[idx++]);
  return out;
}

}  // namespace

int point_count(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::CM: return 1;
    case SchemeKind::LM: return 4;
    case SchemeKind::QM: return 10;
  }
  throw std::logic_error("point_count: bad SchemeKind");
}

std::string_view scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::CM: return "cm";
    case SchemeKind::LM: return "lm";
    case SchemeKind::QM: return "qm";
  }
  throw std::logic_error("scheme_name: bad SchemeKind");
}

SchemeKind scheme_from_name(std::string_view name) {
  if (name == "cm") return SchemeKind::CM;
  if (name == "lm") return SchemeKind::LM;
  if (name == "qm") return SchemeKind::QM;
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

const SchemeSpec& scheme_spec(SchemeKind kind) {
  static const SchemeSpec cm = finalize(build_cm());
  static const SchemeSpec lm = finalize(build_lm());
  static const SchemeSpec qm = finalize(build_qm());
  switch (kind) {
    case SchemeKind::CM: return cm;
    case SchemeKind::LM: return lm;
    case SchemeKind::QM: return qm;
  }
  throw std::logic_error("scheme_spec: bad SchemeKind");
}

std::vector<double> metric_samples(SchemeKind kind, const NodeSet& nodes) {
  const SchemeSpec& spec = scheme_spec(kind);
  std::vector<double> samples;
  samples.reserve(spec.points.size());
  for (int k = 0; k < static_cast<int>(spec.points.size()); ++k) {
    const double det = jacobian(nodes, spec.point_as_double(k)).determinant();
    if (det <= 0.0)
      throw InvalidElementError("element inverted near evaluation point " +
                                std::to_string(k + 1) + " of scheme " +
                                std::string(scheme_name(kind)) + ": det J = " +
                                std::to_string(det));
    samples.push_back(det);
  }
  return samples;
}

Poly3 interpolated_metric(SchemeKind kind, const NodeSet& nodes) {
  const SchemeSpec& spec = scheme_spec(kind);
  const Poly3 metric = metric_polynomial(nodes);
  Poly3 out;
  for (size_t k = 0; k < spec.points.size(); ++k) {
    const auto& p = spec.points[k];
    out += spec.interpolants[k] * metric.eval(p[0], p[1], p[2]);
  }
  return out;
}

int SymRational15::packed_index(int i, int j) {
  if (i < 0 || j < 0 || i >= kNodeCount || j >= kNodeCount)
    throw std::out_of_range("SymRational15: index out of range");
  if (i > j) std::swap(i, j);
  // row-major upper triangle: row i starts after i*15 - i*(i-1)/2 entries
  return i * kNodeCount - i * (i - 1) / 2 + (j - i);
}

Rational SymRational15::total() const {
  Rational acc = 0;
  for (int i = 0; i < kNodeCount; ++i)
    for (int j = 0; j < kNodeCount; ++j)
      acc += at(i, j);
  return acc;
}

CoeffMatrices generate_coeff_matrices(SchemeKind kind) {
  const SchemeSpec& spec = scheme_spec(kind);
  const auto& products = shape_products();
  CoeffMatrices out{kind, {}};
  out.matrices.resize(spec.interpolants.size());
  for (size_t k = 0; k < spec.interpolants.size(); ++k) {
    auto& mat = out.matrices[k];
    for (int i = 0; i < kNodeCount; ++i)
      for (int j = i; j < kNodeCount; ++j)
        mat.set(i, j, wedge_integral_product(
                          products[static_cast<size_t>(SymRational15::packed_index(i, j))],
                          spec.interpolants[k]));
  }
  return out;
}

const CoeffMatrices& embedded_coeff_matrices(SchemeKind kind) {
  static const CoeffMatrices cm = parse_table(SchemeKind::CM, detail::kCmCoeffTable);
  static const CoeffMatrices lm = parse_table(SchemeKind::LM, detail::kLmCoeffTable);
  static const CoeffMatrices qm = parse_table(SchemeKind::QM, detail::kQmCoeffTable);
  switch (kind) {
    case SchemeKind::CM: return cm;
    case SchemeKind::LM: return lm;
    case SchemeKind::QM: return qm;
  }
  throw std::logic_error("embedded_coeff_matrices: bad SchemeKind");
}

std::string export_coeff_json(const CoeffMatrices& coeffs) {
  nlohmann::json doc;
  doc["kind"] = std::string(scheme_name(coeffs.kind));
  const SchemeSpec& spec = scheme_spec(coeffs.kind);
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : spec.points)
    points.push_back({p[0].str(), p[1].str(), p[2].str()});
  doc["points"] = std::move(points);
  nlohmann::json matrices = nlohmann::json::array();
  for (const auto& mat : coeffs.matrices) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& value : mat.packed()) entries.push_back(value.str());
    matrices.push_back(std::move(entries));
  }
  doc["matrices"] = std::move(matrices);
  return doc.dump(2);
}

CoeffMatrices import_coeff_json(std::string_view json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  CoeffMatrices out{scheme_from_name(doc.at("kind").get<std::string>()), {}};
  const auto& matrices = doc.at("matrices");
  if (static_cast<int>(matrices.size()) != point_count(out.kind))
    throw std::invalid_argument("coefficient document: wrong matrix count");
  for (const auto& entries : matrices) {
    if (entries.size() != SymRational15::kPacked)
      throw std::invalid_argument("coefficient document: wrong entry count");
    SymRational15 mat;
    for (size_t p = 0; p < SymRational15::kPacked; ++p)
      mat.packed()[p] = Rational::from_string(entries[p].get<std::string>());
    out.matrices.push_back(std::move(mat));
  }
  return out;
}

}  // namespace wedgemass
