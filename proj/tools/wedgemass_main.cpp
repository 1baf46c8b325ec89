// Command-line front end: single-element mass matrices, coarseness sweeps,
// coefficient-table export, and the self-verification suite.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wedgemass/node_io.hpp"
#include "wedgemass/quadrature.hpp"
#include "wedgemass/sweep.hpp"
#include "wedgemass/verify.hpp"

namespace {

using namespace wedgemass;

int run_mass(const std::string& nodes_path, const std::string& scheme, double density,
             const std::optional<std::string>& out_path, bool rational) {
  const NodeSet nodes = read_node_file(nodes_path);
  if (rational && scheme != "exact") {
    std::cerr << "error: --rational is only available with --scheme exact\n";
    return 2;
  }

  const auto write = [&](auto writer) {
    if (out_path) {
      writer(*out_path);
    } else {
      writer(std::cout);
    }
  };

  if (rational) {
    const SymRational15 mass = mass_exact_rational(nodes);
    write([&](auto& sink) { write_mass_rational_csv(mass, sink); });
    return 0;
  }

  MassMatrix mass;
  if (scheme == "exact") {
    mass = mass_exact(nodes, density);
  } else if (scheme == "gauss18") {
    mass = apply_mass_rule(gauss18(), nodes, density);
  } else {
    mass = mass_scheme(nodes, scheme_from_name(scheme), density);
  }
  write([&](auto& sink) { write_mass_csv(mass, sink); });
  return 0;
}

int run_sweep_cmd(int family, double delta_max, int steps, const std::vector<std::string>& schemes,
                  double density, const std::optional<std::string>& out_path) {
  SweepConfig config;
  config.family = family_from_int(family);
  config.delta_max = delta_max;
  config.steps = steps;
  config.rho0 = density;
  if (!schemes.empty()) {
    config.methods.clear();
    for (const auto& name : schemes) config.methods.push_back(method_from_name(name));
  }

  const SweepResult result = run_sweep(config);
  if (out_path) {
    write_csv(result.records, *out_path);
  } else {
    write_csv(result.records, std::cout);
  }
  for (const auto& failure : result.failures)
    std::cerr << "warning: family " << static_cast<int>(failure.family) << " delta "
              << failure.delta << " " << method_name(failure.method)
              << " skipped: " << failure.reason << "\n";
  return 0;
}

int run_gen_coeffs(const std::string& scheme, const std::optional<std::string>& out_path) {
  const SchemeKind kind = scheme_from_name(scheme);
  const CoeffMatrices fresh = generate_coeff_matrices(kind);
  const CoeffMatrices& embedded = embedded_coeff_matrices(kind);
  if (!(fresh == embedded)) {
    std::cerr << "error: embedded " << scheme
              << " coefficient tables do not match fresh generation\n";
    return 1;
  }
  const std::string doc = export_coeff_json(fresh);
  if (out_path) {
    std::ofstream os(*out_path);
    if (!os) {
      std::cerr << "error: cannot open '" << *out_path << "' for writing\n";
      return 1;
    }
    os << doc << "\n";
  } else {
    std::cout << doc << "\n";
  }
  std::cerr << scheme << ": embedded tables verified against fresh generation ("
            << fresh.matrices.size() << " matrices)\n";
  return 0;
}

int run_verify() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_verification();
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int failures = 0;
  for (size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << r.name << "\n"
              << "       " << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  std::cout << (failures == 0 ? "verification passed" : "verification FAILED") << " ("
            << results.size() - static_cast<size_t>(failures) << "/" << results.size()
            << " checks, " << seconds << " s)\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consistent mass matrices for the 15-node solid wedge element:\n"
               "exact rational integration, reduced-point metric-interpolation\n"
               "schemes (CM/LM/QM) and the 18-point Gauss baseline."};
  app.require_subcommand(1);

  // mass
  auto* mass = app.add_subcommand("mass", "Compute one element's mass matrix");
  std::string nodes_path, mass_scheme_name = "exact";
  double mass_density = 1.0;
  std::optional<std::string> mass_out;
  bool mass_rational = false;
  mass->add_option("--nodes", nodes_path, "Node file (15 'x y z' rows, or JSON [[x,y,z],...])")
      ->required();
  mass->add_option("--scheme", mass_scheme_name, "cm|lm|qm|gauss18|exact")
      ->check(CLI::IsMember({"cm", "lm", "qm", "gauss18", "exact"}));
  mass->add_option("--density", mass_density, "Mass density rho0")->check(CLI::PositiveNumber);
  mass->add_option("--out", mass_out, "Output file (default: stdout)");
  mass->add_flag("--rational", mass_rational, "Emit exact n/d entries (exact scheme only)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Coarseness sweep with error statistics CSV");
  int sweep_family = 1;
  double sweep_delta_max = 0.5, sweep_density = 1.0;
  int sweep_steps = 26;
  std::vector<std::string> sweep_schemes;
  std::optional<std::string> sweep_out;
  sweep->add_option("--family", sweep_family, "Element family 1|2|3")->required()
      ->check(CLI::Range(1, 3));
  sweep->add_option("--delta-max", sweep_delta_max, "Largest coarseness (default 0.5)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--steps", sweep_steps, "Grid points incl. 0 (default 26)")
      ->check(CLI::Range(2, 1000000));
  sweep->add_option("--schemes", sweep_schemes, "Comma-separated subset of cm,lm,qm,gauss18")
      ->delimiter(',');
  sweep->add_option("--density", sweep_density, "Mass density rho0")->check(CLI::PositiveNumber);
  sweep->add_option("--out", sweep_out, "Output CSV (default: stdout)");

  // gen-coeffs
  auto* gen = app.add_subcommand("gen-coeffs",
                                 "Export a scheme's exact coefficient matrices, verifying the "
                                 "embedded tables against fresh generation");
  std::string gen_scheme;
  std::optional<std::string> gen_out;
  gen->add_option("--scheme", gen_scheme, "cm|lm|qm")->required()
      ->check(CLI::IsMember({"cm", "lm", "qm"}));
  gen->add_option("--out", gen_out, "Output JSON file (default: stdout)");

  // verify
  app.add_subcommand("verify", "Run the full invariant suite (nonzero exit on any failure)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (mass->parsed())
      return run_mass(nodes_path, mass_scheme_name, mass_density, mass_out, mass_rational);
    if (sweep->parsed())
      return run_sweep_cmd(sweep_family, sweep_delta_max, sweep_steps, sweep_schemes,
                           sweep_density, sweep_out);
    if (gen->parsed()) return run_gen_coeffs(gen_scheme, gen_out);
    return run_verify();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
