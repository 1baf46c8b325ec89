#ifndef WEDGEMASS_SWEEP_HPP_
#define WEDGEMASS_SWEEP_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wedgemass/families.hpp"
#include "wedgemass/massmat.hpp"

namespace wedgemass {

/// A mass-matrix method under comparison: the three metric-interpolation
/// schemes plus the 18-point Gauss baseline.
enum class Method { CM, LM, QM, Gauss18 };

std::string_view method_name(Method m);          // "cm"/"lm"/"qm"/"gauss18"
Method method_from_name(std::string_view name);  // throws on unknown

struct SweepConfig {
  FamilyId family = FamilyId::F1;
  double delta_max = 0.5;
  int steps = 26;  // delta grid: 0, delta_max/(steps-1), ..., delta_max
  std::vector<Method> methods = {Method::CM, Method::LM, Method::QM, Method::Gauss18};
  double rho0 = 1.0;
};

/// Error statistics of one (delta, method) grid point against the exact
/// mass matrix.
struct SweepRecord {
  FamilyId family;
  double delta;
  Method method;
  double avg_abs_err;
  double max_abs_err;
};

/// Grid point whose computation failed (inverted element at an evaluation
/// point). The sweep records the reason and continues.
struct SweepFailure {
  FamilyId family;
  double delta;
  Method method;
  std::string reason;
};

struct SweepResult {
  std::vector<SweepRecord> records;    // delta-major, method-minor order
  std::vector<SweepFailure> failures;
};

SweepResult run_sweep(const SweepConfig& config);

/// CSV with header "family,delta,scheme,avg_abs_err,max_abs_err", one row
/// per record, full-precision decimals, stable ordering. Identical input
/// produces byte-identical output.
void write_csv(const std::vector<SweepRecord>& records, std::ostream& os);
void write_csv(const std::vector<SweepRecord>& records, const std::string& path);

}  // namespace wedgemass

#endif  // WEDGEMASS_SWEEP_HPP_
