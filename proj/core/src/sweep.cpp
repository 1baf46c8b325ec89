#include "wedgemass/sweep.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "wedgemass/quadrature.hpp"

namespace wedgemass {
namespace {

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

MassMatrix compute_method(Method m, const NodeSet& nodes, double rho0) {
  switch (m) {
    case Method::CM: return mass_scheme(nodes, SchemeKind::CM, rho0);
    case Method::LM: return mass_scheme(nodes, SchemeKind::LM, rho0);
    case Method::QM: return mass_scheme(nodes, SchemeKind::QM, rho0);
    case Method::Gauss18: return apply_mass_rule(gauss18(), nodes, rho0);
  }
  throw std::logic_error("compute_method: bad Method");
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::CM: return "cm";
    case Method::LM: return "lm";
    case Method::QM: return "qm";
    case Method::Gauss18: return "gauss18";
  }
  throw std::logic_error("method_name: bad Method");
}

Method method_from_name(std::string_view name) {
  if (name == "cm") return Method::CM;
  if (name == "lm") return Method::LM;
  if (name == "qm") return Method::QM;
  if (name == "gauss18") return Method::Gauss18;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

SweepResult run_sweep(const SweepConfig& config) {
  if (config.steps < 2) throw std::invalid_argument("run_sweep: steps must be >= 2");
  if (config.delta_max <= 0.0) throw std::invalid_argument("run_sweep: delta_max must be > 0");
  if (config.rho0 <= 0.0) throw std::invalid_argument("run_sweep: rho0 must be > 0");
  if (config.methods.empty()) throw std::invalid_argument("run_sweep: no methods selected");

  SweepResult result;
  for (int step = 0; step < config.steps; ++step) {
    const double delta = config.delta_max * step / (config.steps - 1);
    NodeSet nodes = NodeSet::parent();
    try {
      nodes = family_nodes(config.family, delta);
    } catch (const InvalidElementError& e) {
      for (const Method m : config.methods)
        result.failures.push_back({config.family, delta, m, e.what()});
      continue;
    }
    const MassMatrix reference = mass_exact(nodes, config.rho0);
    for (const Method m : config.methods) {
      try {
        const MassMatrix approx = compute_method(m, nodes, config.rho0);
        const ErrorStats stats = error_stats(approx, reference);
        result.records.push_back({config.family, delta, m, stats.avg_abs, stats.max_abs});
      } catch (const InvalidElementError& e) {
        result.failures.push_back({config.family, delta, m, e.what()});
      }
    }
  }
  return result;
}

void write_csv(const std::vector<SweepRecord>& records, std::ostream& os) {
  os << "family,delta,scheme,avg_abs_err,max_abs_err\n";
  for (const auto& r : records) {
    os << static_cast<int>(r.family) << ',' << format_double(r.delta) << ','
       << method_name(r.method) << ',' << format_double(r.avg_abs_err) << ','
       << format_double(r.max_abs_err) << '\n';
  }
}

void write_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_csv: cannot open '" + path + "' for writing");
  write_csv(records, os);
  os.flush();
  if (!os) throw std::runtime_error("write_csv: write failed for '" + path + "'");
}

}  // namespace wedgemass
