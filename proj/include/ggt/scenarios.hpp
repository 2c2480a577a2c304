#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ggt/report.hpp"

namespace ggt {

/// Overrides accepted by `ggt verify`; unset fields keep each scenario's
/// defaults.
struct ScenarioOptions {
  std::uint64_t seed = 42;
  std::optional<std::size_t> levels;
  std::optional<std::size_t> trials;
  std::optional<std::size_t> bound;
  /// Name of a fault to inject (see fault_names()); empty for none.
  std::string inject_fault;
};

struct Scenario {
  std::string name;
  std::string summary;
  std::function<Report(ScenarioOptions const&)> run;
};

class UnknownScenario : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// All registered scenarios, sorted by name.
std::vector<Scenario> const& scenarios();
std::vector<std::string> fault_names();

/// Runs one scenario and stamps its wall time. Throws UnknownScenario for
/// unknown scenario or fault names.
Report run_scenario(std::string const& name, ScenarioOptions const& opt);

struct RunResult {
  std::vector<Report> reports;  // sorted by scenario name
  bool passed = true;
};

RunResult run_all(ScenarioOptions const& opt);

/// {seed, passed, reports: [...]}.
nlohmann::json run_record(RunResult const& r, std::uint64_t seed, bool include_timing = true);

// --- individual scenarios ----------------------------------------------------

Report scenario_axioms(std::uint32_t rank, std::size_t levels, std::size_t sample,
                       std::uint64_t seed);
/// Negative control: the broken chain must be caught.
Report scenario_axioms_broken_chain(std::size_t levels, std::size_t sample, std::uint64_t seed);

Report scenario_direct_sum(std::uint64_t seed, std::size_t sample = 300);

Report scenario_amalgam(std::size_t bound, std::uint64_t seed);

Report scenario_hnn_lemma(std::size_t n_level, std::size_t trials, std::uint64_t seed);
/// x^k -> y^{2k}; outcome recorded, not judged.
Report scenario_hnn_lemma_broken_phi(std::size_t trials, std::uint64_t seed);
/// H = normal closure of x, which violates the hypothesis; violations expected.
Report scenario_hnn_lemma_normal_x(std::size_t trials, std::uint64_t seed);

Report scenario_conjugation_identities(std::size_t k_max, bool flipped = false);

Report scenario_witness(std::size_t n_max, std::size_t k_max, std::uint64_t seed);

Report scenario_chain_combinators(std::uint32_t rank, std::uint64_t seed,
                                  std::size_t sample = 200);

// --- replay --------------------------------------------------------------------

struct ReplayOutcome {
  bool reproduced = false;
  std::string detail;
};

/// Recomputes the check named by a violation's replay vector. Throws
/// std::invalid_argument for malformed vectors.
ReplayOutcome replay(std::vector<std::string> const& args);

}  // namespace ggt
