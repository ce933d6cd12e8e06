#ifndef DFTATOMS_VERIFY_HPP
#define DFTATOMS_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dftatoms/radial_density.hpp"
#include "dftatoms/rng.hpp"

namespace dfta::verify {

enum class Status { pass, fail, observational };

struct CheckResult {
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  Status status = Status::pass;
};

struct Check {
  std::string name;          // <module>.<invariant>
  std::string paper_anchor;  // equation/theorem label
  std::function<CheckResult(std::uint64_t seed)> run;
};

/// Static registry; every entry mirrors one module-invariant bullet.
const std::vector<Check>& registry();

struct Record {
  std::string name;
  std::string paper_anchor;
  Status status;
  double measured;
  double expected;
  double tolerance;
  long runtime_ms;
};

struct Report {
  std::vector<Record> records;  // sorted by name
  bool all_passed() const;
};

/// Runs every check whose name starts with `suite` ("all" for everything).
Report run_suite(const std::string& suite, std::uint64_t seed);

/// Canonical JSON (schema 1, 12 significant digits, sorted by name).
/// Timings are volatile, so they are only emitted on request.
std::string report_json(const Report& report, bool timings);

/// Smooth random trial density (Gaussian shells + exponentials).
RadialDensity random_radial_density(const RadialGrid& grid, Rng& rng,
                                    double mass_scale);
/// Signed variant for Coulomb-form tests.
std::vector<double> random_signed_profile(const RadialGrid& grid, Rng& rng);

}  // namespace dfta::verify

#endif
