#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace ggt {

/// One failed check. Witnesses are elements in external syntax; `replay`
/// is an argument vector for `ggt replay` that recomputes the check.
struct Violation {
  std::string check;
  std::optional<std::size_t> level;
  std::vector<std::string> witnesses;
  std::vector<std::string> replay;
};

/// What a scenario is expected to produce. Negative controls expect
/// violations; `record` runs are informational and never fail a run.
enum class Expectation { pass, fail, record };

std::string to_string(Expectation e);
Expectation expectation_from_string(std::string const& s);

inline constexpr char const* kReportMethod =
    "bounded refutation search over seeded samples; not a proof";

struct Report {
  std::string scenario;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::uint64_t checks_run = 0;
  std::vector<Violation> violations;
  std::uint64_t violations_dropped = 0;  // beyond kMaxStoredViolations
  std::vector<std::string> notes;
  Expectation expectation = Expectation::pass;
  double wall_time = 0.0;

  static constexpr std::size_t kMaxStoredViolations = 32;

  std::uint64_t violation_count() const { return violations.size() + violations_dropped; }

  bool passed() const {
    switch (expectation) {
      case Expectation::pass:
        return violation_count() == 0;
      case Expectation::fail:
        return violation_count() != 0;
      case Expectation::record:
        return true;
    }
    return false;
  }

  void add_violation(Violation v) {
    if (violations.size() < kMaxStoredViolations) {
      violations.push_back(std::move(v));
    } else {
      ++violations_dropped;
    }
  }

  /// Counts one check; on failure records the violation. `make` is either a
  /// Violation or a callable producing one, so witnesses are only formatted
  /// when needed.
  template <class F>
  bool check(bool ok, F&& make) {
    ++checks_run;
    if (!ok) {
      if constexpr (std::is_invocable_v<F>) {
        add_violation(std::forward<F>(make)());
      } else {
        add_violation(Violation(std::forward<F>(make)));
      }
    }
    return ok;
  }

  /// Folds a sub-report in; sub-report violations get `prefix/` on their
  /// check names.
  void absorb(Report const& sub, std::string const& prefix);
};

nlohmann::json to_json(Report const& r, bool include_timing = true);
Report report_from_json(nlohmann::json const& j);

/// Structural validation against the report schema; returns the list of
/// problems (empty means valid). Accepts a single report or a combined
/// run record.
std::vector<std::string> validate_report_json(nlohmann::json const& j);

/// JSON Schema (draft 2020-12) text for a single report.
std::string report_schema();

}  // namespace ggt
