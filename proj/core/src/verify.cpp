#include "wedgemass/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>

#include "wedgemass/massmat.hpp"
#include "wedgemass/quadrature.hpp"
#include "wedgemass/sweep.hpp"

namespace wedgemass {
namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// ---- check 1: CM anchor entries + generation runtime --------------------

CheckResult check_cm_anchors() {
  CheckResult r{"coefficient-matrix anchors (CM corner entries, generation < 60 s)", false, ""};
  const auto t0 = Clock::now();
  const CoeffMatrices cm = generate_coeff_matrices(SchemeKind::CM);
  generate_coeff_matrices(SchemeKind::LM);
  generate_coeff_matrices(SchemeKind::QM);
  const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  const auto& m = cm.matrices[0];
  const bool anchors = m.at(0, 0) == Rational(24, 1080) &&
                       m.at(0, 14) == Rational(-30, 1080) &&
                       m.at(14, 14) == Rational(96, 1080);
  r.pass = anchors && seconds < 60.0;
  r.detail = "M1(1,1)=" + m.at(0, 0).str() + " M1(1,15)=" + m.at(0, 14).str() +
             " M1(15,15)=" + m.at(14, 14).str() + "; all-scheme generation took " +
             fmt(seconds) + " s";
  return r;
}

// ---- check 2: sum_k M_k == CM matrix -------------------------------------

CheckResult check_scheme_consistency() {
  CheckResult r{"scheme-consistency identity (sum_k M_k == CM matrix, exact)", false, ""};
  const CoeffMatrices& cm = embedded_coeff_matrices(SchemeKind::CM);
  bool ok = true;
  std::string failed;
  for (const SchemeKind kind : {SchemeKind::LM, SchemeKind::QM}) {
    SymRational15 sum;
    for (const auto& mat : embedded_coeff_matrices(kind).matrices)
      for (int p = 0; p < SymRational15::kPacked; ++p)
        sum.packed()[static_cast<size_t>(p)] += mat.packed()[static_cast<size_t>(p)];
    if (!(sum == cm.matrices[0])) {
      ok = false;
      failed += std::string(scheme_name(kind)) + " ";
    }
  }
  r.pass = ok;
  r.detail = ok ? "LM (4 matrices) and QM (10 matrices) both sum to the CM matrix entrywise"
              : "mismatch for: " + failed;
  return r;
}

// ---- check 3: interpolant correctness -------------------------------------

CheckResult check_interpolants() {
  CheckResult r{"interpolant correctness (Kronecker, partition of unity, reproduction)", false, ""};
  std::string problems;

  for (const SchemeKind kind : {SchemeKind::CM, SchemeKind::LM, SchemeKind::QM}) {
    const SchemeSpec& spec = scheme_spec(kind);
    const int n = point_count(kind);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const auto& p = spec.points[static_cast<size_t>(l)];
        const Rational v = spec.interpolants[static_cast<size_t>(k)].eval(p[0], p[1], p[2]);
        if (v != Rational(k == l ? 1 : 0))
          problems += std::string(scheme_name(kind)) + ":kronecker(" + std::to_string(k + 1) +
                      "," + std::to_string(l + 1) + ")=" + v.str() + " ";
      }
    Poly3 sum;
    for (const auto& phihat : spec.interpolants) sum += phihat;
    if (!(sum == Poly3::one()))
      problems += std::string(scheme_name(kind)) + ":partition-of-unity ";
  }

  // reproduction: sum_k q(p_k) phihat^k == q over a monomial basis
  const auto reproduces = [](SchemeKind kind, const Monomial& m) {
    const SchemeSpec& spec = scheme_spec(kind);
    const Poly3 target = Poly3::term(m, 1);
    Poly3 acc;
    for (size_t k = 0; k < spec.points.size(); ++k) {
      const auto& p = spec.points[k];
      acc += spec.interpolants[k] * target.eval(p[0], p[1], p[2]);
    }
    return acc == target;
  };
  const std::vector<Monomial> deg1 = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const std::vector<Monomial> deg2 = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}};
  for (const auto& m : deg1) {
    if (!reproduces(SchemeKind::LM, m)) problems += "lm:reproduction ";
    if (!reproduces(SchemeKind::QM, m)) problems += "qm:reproduction-deg1 ";
  }
  for (const auto& m : deg2)
    if (!reproduces(SchemeKind::QM, m)) problems += "qm:reproduction-deg2 ";

  r.pass = problems.empty();
  r.detail = r.pass ? "exact for all schemes; LM reproduces degree <= 1, QM degree <= 2"
               : problems;
  return r;
}

// ---- check 4: exact-oracle self-check --------------------------------------

CheckResult check_exact_oracle() {
  CheckResult r{"exact-oracle self-check (parent mass == CM matrix; total mass == rho0*volume)",
                false, ""};
  std::string problems;
  const SymRational15 parent_mass = mass_exact_rational(NodeSet::parent());
  if (!(parent_mass == embedded_coeff_matrices(SchemeKind::CM).matrices[0]))
    problems += "parent mass != CM coefficient matrix; ";

  for (const FamilyId family : {FamilyId::F1, FamilyId::F2, FamilyId::F3}) {
    for (int tenth = 0; tenth <= 5; ++tenth) {
      const Rational delta(tenth, 10);
      const NodeSet nodes = family_nodes(family, delta);
      const Rational total = mass_exact_rational(nodes).total();
      const Rational vol = volume_exact(nodes);
      if (total != vol)
        problems += "family " + std::to_string(static_cast<int>(family)) + " delta " +
                    delta.str() + ": total " + total.str() + " != volume " + vol.str() + "; ";
    }
  }
  r.pass = problems.empty();
  r.detail = r.pass ? "exact equality for the parent matrix and all 18 family/delta combinations"
               : problems;
  return r;
}

// ---- check 5: metric spot-checks ------------------------------------------

CheckResult check_metric_spot_values() {
  CheckResult r{"metric spot-checks (quoted reference expansion coefficients)", false, ""};
  const std::vector<Rational> deltas = {{1, 10}, {1, 5}, {3, 10}, {2, 5}, {1, 2}};

  struct Spot {
    const char* label;
    FamilyId family;
    Monomial monomial;
    Rational (*expected)(const Rational&);
  };
  static const auto f1_const = [](const Rational& d) {
    return Rational(1) - Rational(3, 2) * d + Rational(1, 2) * d * d;
  };
  static const auto f1_e2z3 = [](const Rational& d) { return Rational(3, 2) * d * d * d; };
  static const auto f2_const = [](const Rational& d) {
    return Rational(1) - d - Rational(3, 2) * d * d;
  };
  static const auto f2_z4 = [](const Rational& d) { return -(d * d); };
  static const auto f3_const = [](const Rational& d) { return Rational(1) - Rational(1, 2) * d; };
  static const auto f3_z3 = [](const Rational& d) { return -(d * d); };

  const std::vector<Spot> spots = {
      {"F1 constant = 1 - 1.5d + 0.5d^2", FamilyId::F1, {0, 0, 0}, f1_const},
      {"F1 eta^2 zeta^3 = 1.5d^3", FamilyId::F1, {0, 2, 3}, f1_e2z3},
      {"F2 constant = 1 - d - 1.5d^2", FamilyId::F2, {0, 0, 0}, f2_const},
      {"F2 zeta^4 = -d^2", FamilyId::F2, {0, 0, 4}, f2_z4},
      {"F3 constant = 1 - 0.5d", FamilyId::F3, {0, 0, 0}, f3_const},
      {"F3 zeta^3 = -d^2", FamilyId::F3, {0, 0, 3}, f3_z3},
  };

  std::ostringstream detail;
  bool all_ok = true;
  for (const auto& spot : spots) {
    bool ok = true;
    std::string example;
    for (const auto& d : deltas) {
      const Poly3 metric = metric_polynomial(family_nodes(spot.family, d));
      const Rational actual = metric.coefficient(spot.monomial);
      const Rational expected = spot.expected(d);
      if (actual != expected) {
        ok = false;
        if (example.empty())
          example = " (at delta " + d.str() + ": actual " + actual.str() + ", asserted " +
                    expected.str() + ")";
      }
    }
    all_ok = all_ok && ok;
    detail << (ok ? "[ok] " : "[MISMATCH] ") << spot.label << example << "; ";
  }
  r.pass = all_ok;
  r.detail = detail.str();
  return r;
}

// ---- check 6: exactness hierarchy ------------------------------------------

double max_abs_diff(const MassMatrix& a, const MassMatrix& b) {
  return (a.entries - b.entries).cwiseAbs().maxCoeff();
}

// nodes of the map (xi + a xi zeta, eta + b eta zeta, zeta + c xi^2);
// exact metric (1 + a zeta)(1 + b zeta) - 2 a c xi^2 zeta... degree depends
// on which knobs are set
NodeSet synthesized_element(const Rational& a, const Rational& b, const Rational& c) {
  std::array<RationalTriple, kNodeCount> coords;
  const auto& nat = node_natural_coords();
  for (size_t i = 0; i < kNodeCount; ++i) {
    const Rational& xi = nat[i][0];
    const Rational& eta = nat[i][1];
    const Rational& zeta = nat[i][2];
    coords[i][0] = xi + a * xi * zeta;
    coords[i][1] = eta + b * eta * zeta;
    coords[i][2] = zeta + c * xi * xi;
  }
  return NodeSet(std::move(coords));
}

CheckResult check_exactness_hierarchy() {
  CheckResult r{"exactness hierarchy (constant/linear/quadratic metric vs CM/LM/QM)", false, ""};
  constexpr double kTol = 1e-13;
  std::string problems;

  const auto expect_match = [&](const NodeSet& nodes, SchemeKind kind, const char* label) {
    const double diff = max_abs_diff(mass_scheme(nodes, kind, 1.0), mass_exact(nodes, 1.0));
    if (diff > kTol)
      problems += std::string(label) + ":" + std::string(scheme_name(kind)) + " diff " +
                  fmt(diff) + "; ";
  };

  const NodeSet constant = NodeSet::parent();                                // metric 1
  const NodeSet linear = synthesized_element({1, 4}, 0, 0);                  // metric 1 + zeta/4
  const NodeSet quadratic = synthesized_element({1, 4}, {-1, 8}, 0);         // degree-2 metric

  if (metric_polynomial(constant).total_degree() != 0) problems += "constant-degree; ";
  if (metric_polynomial(linear).total_degree() != 1) problems += "linear-degree; ";
  if (metric_polynomial(quadratic).total_degree() != 2) problems += "quadratic-degree; ";

  for (const SchemeKind kind : {SchemeKind::CM, SchemeKind::LM, SchemeKind::QM})
    expect_match(constant, kind, "constant");
  for (const SchemeKind kind : {SchemeKind::LM, SchemeKind::QM})
    expect_match(linear, kind, "linear");
  expect_match(quadratic, SchemeKind::QM, "quadratic");

  r.pass = problems.empty();
  r.detail = r.pass ? "all required scheme/metric pairs agree to 1e-13 per entry" : problems;
  return r;
}

// ---- checks 7 and 8: default-sweep orderings --------------------------------

struct SweepTable {
  // keyed by (delta, method); missing entry = per-record failure
  std::map<std::pair<double, Method>, SweepRecord> records;
  std::vector<SweepFailure> failures;
  std::vector<double> grid;
};

SweepTable default_sweep(FamilyId family) {
  SweepConfig config;
  config.family = family;
  const SweepResult result = run_sweep(config);
  SweepTable table;
  table.failures = result.failures;
  for (const auto& rec : result.records) table.records.emplace(std::make_pair(rec.delta, rec.method), rec);
  for (int step = 0; step < config.steps; ++step)
    table.grid.push_back(config.delta_max * step / (config.steps - 1));
  return table;
}

CheckResult check_ordering(const std::array<SweepTable, 3>& sweeps) {
  CheckResult r{"error ordering avg(CM) >= avg(LM) >= avg(QM) at every delta > 0", false, ""};
  std::string problems;
  int compared = 0;
  for (int f = 0; f < 3; ++f) {
    const auto& table = sweeps[static_cast<size_t>(f)];
    for (const double delta : table.grid) {
      if (delta == 0.0) continue;
      const auto cm = table.records.find({delta, Method::CM});
      const auto lm = table.records.find({delta, Method::LM});
      const auto qm = table.records.find({delta, Method::QM});
      if (cm == table.records.end() || lm == table.records.end() || qm == table.records.end()) {
        problems += "family " + std::to_string(f + 1) + " delta " + fmt(delta) +
                    ": record missing (invalid element); ";
        continue;
      }
      ++compared;
      if (!(cm->second.avg_abs_err >= lm->second.avg_abs_err &&
            lm->second.avg_abs_err >= qm->second.avg_abs_err))
        problems += "family " + std::to_string(f + 1) + " delta " + fmt(delta) + ": cm " +
                    fmt(cm->second.avg_abs_err) + " lm " + fmt(lm->second.avg_abs_err) + " qm " +
                    fmt(qm->second.avg_abs_err) + "; ";
    }
  }
  r.pass = problems.empty();
  r.detail = r.pass ? "ordering holds at all " + std::to_string(compared) +
                          " delta > 0 grid points across the three families"
               : problems;
  return r;
}

CheckResult check_superiority(const std::array<SweepTable, 3>& sweeps) {
  CheckResult r{"QM vs 18-point baseline (strictly lower avg and max error at every delta > 0)",
                false, ""};
  std::ostringstream problems;
  int compared = 0, excluded = 0, violations = 0;
  bool zero_ok = true;
  for (int f = 0; f < 3; ++f) {
    const auto& table = sweeps[static_cast<size_t>(f)];
    for (const double delta : table.grid) {
      const auto qm = table.records.find({delta, Method::QM});
      const auto g18 = table.records.find({delta, Method::Gauss18});
      if (delta == 0.0) {
        if (qm == table.records.end() || g18 == table.records.end() ||
            qm->second.avg_abs_err > 1e-13 || qm->second.max_abs_err > 1e-13 ||
            g18->second.avg_abs_err > 1e-13 || g18->second.max_abs_err > 1e-13) {
          zero_ok = false;
          problems << "family " << f + 1 << " delta 0: errors exceed 1e-13; ";
        }
        continue;
      }
      if (qm == table.records.end() || g18 == table.records.end()) {
        ++excluded;  // element inverted at a sample point of one method
        continue;
      }
      ++compared;
      const bool avg_ok = qm->second.avg_abs_err < g18->second.avg_abs_err;
      const bool max_ok = qm->second.max_abs_err < g18->second.max_abs_err;
      if (!avg_ok || !max_ok) {
        ++violations;
        if (violations <= 8)
          problems << "family " << f + 1 << " delta " << fmt(delta) << ": qm(avg "
                   << fmt(qm->second.avg_abs_err) << ", max " << fmt(qm->second.max_abs_err)
                   << ") vs gauss18(avg " << fmt(g18->second.avg_abs_err) << ", max "
                   << fmt(g18->second.max_abs_err) << "); ";
      }
    }
  }
  r.pass = zero_ok && violations == 0;
  std::ostringstream detail;
  detail << compared << " comparable grid points, " << excluded
         << " excluded (element invalid for one method), " << violations << " violations. "
         << problems.str();
  r.detail = detail.str();
  return r;
}

// ---- check 9: baseline quadrature exactness ---------------------------------

CheckResult check_gauss18_exactness() {
  CheckResult r{"18-point rule integrates a+b <= 4, c <= 5 monomials; weights sum to 1", false, ""};
  const QuadratureRule& rule = gauss18();
  std::string problems;

  double wsum = 0.0;
  for (const double w : rule.weights) wsum += w;
  if (std::abs(wsum - 1.0) > 1e-15) problems += "weight sum " + fmt(wsum) + "; ";

  double worst = 0.0;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      for (int c = 0; c <= 5; ++c) {
        double approx = 0.0;
        for (int p = 0; p < rule.size(); ++p) {
          const auto& pt = rule.points[static_cast<size_t>(p)];
          double term = rule.weights[static_cast<size_t>(p)];
          for (int k = 0; k < a; ++k) term *= pt.xi;
          for (int k = 0; k < b; ++k) term *= pt.eta;
          for (int k = 0; k < c; ++k) term *= pt.zeta;
          approx += term;
        }
        const double exact = monomial_integral(a, b, c).to_double();
        const double err = exact != 0.0 ? std::abs(approx - exact) / std::abs(exact)
                                        : std::abs(approx);
        worst = std::max(worst, err);
        if (err > 1e-15)
          problems += "xi^" + std::to_string(a) + " eta^" + std::to_string(b) + " zeta^" +
                      std::to_string(c) + " err " + fmt(err) + "; ";
      }
    }
  }
  r.pass = problems.empty();
  r.detail = r.pass ? "worst relative error " + fmt(worst) + "; weights sum to 1 within 1e-15"
               : problems;
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> results;
  results.push_back(check_cm_anchors());
  results.push_back(check_scheme_consistency());
  results.push_back(check_interpolants());
  results.push_back(check_exact_oracle());
  results.push_back(check_metric_spot_values());
  results.push_back(check_exactness_hierarchy());
  const std::array<SweepTable, 3> sweeps = {
      default_sweep(FamilyId::F1), default_sweep(FamilyId::F2), default_sweep(FamilyId::F3)};
  results.push_back(check_ordering(sweeps));
  results.push_back(check_superiority(sweeps));
  results.push_back(check_gauss18_exactness());
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace wedgemass
