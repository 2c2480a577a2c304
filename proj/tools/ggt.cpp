// ggt: command-line front end for words, derived series membership,
// subgroup membership and the verification scenarios.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ggt/fox.hpp"
#include "ggt/scenarios.hpp"
#include "ggt/stallings.hpp"
#include "ggt/word.hpp"

namespace {

constexpr int kUsage = 2;

std::vector<ggt::Word> parse_gens(std::vector<std::string> const& raw) {
  std::vector<ggt::Word> gens;
  for (auto const& chunk : raw) {
    std::stringstream in(chunk);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.find_first_not_of(" \t") != std::string::npos) {
        gens.push_back(ggt::parse_word(item));
      }
    }
  }
  return gens;
}

int write_report(std::string const& path, nlohmann::json const& j) {
  if (path.empty()) {
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write report to " << path << "\n";
    return kUsage;
  }
  out << j.dump(2) << "\n";
  return 0;
}

void print_summary(ggt::Report const& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.scenario << "  checks=" << r.checks_run
            << " violations=" << r.violation_count() << " expectation=" << ggt::to_string(r.expectation)
            << "\n";
  if (!r.passed() || r.expectation != ggt::Expectation::pass) {
    for (auto const& v : r.violations) {
      std::cout << "    " << v.check;
      if (v.level) {
        std::cout << " @" << *v.level;
      }
      for (auto const& w : v.witnesses) {
        std::cout << "  [" << w << "]";
      }
      std::cout << "\n";
      if (&v - r.violations.data() >= 2) {
        break;
      }
    }
  }
}

int replay_one(std::vector<std::string> const& args) {
  auto const outcome = ggt::replay(args);
  std::cout << (outcome.reproduced ? "reproduced: " : "not reproduced: ") << outcome.detail << "\n";
  return outcome.reproduced ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ggt: free groups, derived series and filtration checks"};
  app.require_subcommand(1);

  // words
  auto* words = app.add_subcommand("words", "free reduction and arithmetic on words");
  words->require_subcommand(1);
  std::string word_a;
  std::vector<std::string> word_list;
  std::int64_t exponent = 0;
  auto* w_reduce = words->add_subcommand("reduce", "print the freely reduced word");
  w_reduce->add_option("word", word_a, "word, e.g. \"x1 x2 X1\"")->required();
  auto* w_mul = words->add_subcommand("mul", "product of the given words");
  w_mul->add_option("words", word_list)->required();
  auto* w_inv = words->add_subcommand("inv", "inverse");
  w_inv->add_option("word", word_a)->required();
  auto* w_pow = words->add_subcommand("pow", "power w^k");
  w_pow->add_option("word", word_a)->required();
  w_pow->add_option("k", exponent)->required();

  // derived
  auto* derived = app.add_subcommand("derived", "derived series membership");
  derived->require_subcommand(1);
  std::size_t level = 1;
  auto* d_member = derived->add_subcommand("member", "is w in F^(N)?");
  auto* d_depth = derived->add_subcommand("depth", "largest n <= N with w in F^(n)");
  for (auto* sc : {d_member, d_depth}) {
    sc->add_option("--level", level, "N")->required()->check(CLI::Range(0, 64));
    sc->add_option("word", word_a)->required();
  }

  // subgroup
  auto* subgroup = app.add_subcommand("subgroup", "finitely generated subgroups");
  subgroup->require_subcommand(1);
  std::vector<std::string> gens_raw;
  auto* s_contains = subgroup->add_subcommand("contains", "membership test");
  auto* s_rep = subgroup->add_subcommand("rep", "shortlex-least representative of the coset Hw");
  for (auto* sc : {s_contains, s_rep}) {
    sc->add_option("--gens", gens_raw, "comma-separated generators")->required();
    sc->add_option("word", word_a)->required();
  }

  // verify
  auto* verify = app.add_subcommand("verify", "run a scenario or all of them");
  std::string scenario;
  ggt::ScenarioOptions opt;
  std::size_t levels = 0, trials = 0, bound = 0;
  std::string report_path;
  bool list = false;
  bool no_timing = false;
  verify->add_option("scenario", scenario, "scenario name or 'all'");
  verify->add_option("--seed", opt.seed, "PRNG seed")->default_val(42);
  auto* o_levels = verify->add_option("--levels", levels, "level count override");
  auto* o_trials = verify->add_option("--trials", trials, "trial count override");
  auto* o_bound = verify->add_option("--bound", bound, "sample bound override");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--inject-fault", opt.inject_fault, "inject a named fault");
  verify->add_flag("--list", list, "list scenarios and faults");
  verify->add_flag("--no-timing", no_timing, "omit wall_time from the report file");

  // replay
  auto* replay = app.add_subcommand("replay", "recompute a recorded violation");
  std::vector<std::string> replay_args;
  std::string replay_from;
  replay->add_option("args", replay_args, "replay vector from a report");
  replay->add_option("--from", replay_from, "replay every violation in a report file");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (words->parsed()) {
      if (w_reduce->parsed()) {
        std::cout << ggt::to_string(ggt::parse_word(word_a)) << "\n";
      } else if (w_mul->parsed()) {
        ggt::Word acc;
        for (auto const& s : word_list) {
          acc = ggt::multiply(acc, ggt::parse_word(s));
        }
        std::cout << ggt::to_string(acc) << "\n";
      } else if (w_inv->parsed()) {
        std::cout << ggt::to_string(ggt::invert(ggt::parse_word(word_a))) << "\n";
      } else {
        std::cout << ggt::to_string(ggt::power(ggt::parse_word(word_a), exponent)) << "\n";
      }
      return 0;
    }
    if (derived->parsed()) {
      auto const w = ggt::parse_word(word_a);
      if (d_member->parsed()) {
        std::cout << (ggt::derived_member(w, ggt::DerivedLevel{level}) ? "true" : "false") << "\n";
      } else {
        std::cout << ggt::to_string(ggt::derived_depth(w, level)) << "\n";
      }
      return 0;
    }
    if (subgroup->parsed()) {
      auto const h = ggt::fold(parse_gens(gens_raw));
      auto const w = ggt::parse_word(word_a);
      if (s_contains->parsed()) {
        std::cout << (ggt::contains(h, w) ? "true" : "false") << "\n";
      } else {
        std::cout << ggt::to_string(ggt::coset_rep(h, w)) << "\n";
      }
      return 0;
    }
    if (verify->parsed()) {
      if (list) {
        for (auto const& s : ggt::scenarios()) {
          std::cout << s.name << "  " << s.summary << "\n";
        }
        std::cout << "faults:";
        for (auto const& f : ggt::fault_names()) {
          std::cout << " " << f;
        }
        std::cout << "\n";
        return 0;
      }
      if (scenario.empty()) {
        std::cerr << "verify needs a scenario name or 'all'\n";
        return kUsage;
      }
      if (*o_levels) opt.levels = levels;
      if (*o_trials) opt.trials = trials;
      if (*o_bound) opt.bound = bound;
      if (scenario == "all") {
        auto const result = ggt::run_all(opt);
        for (auto const& r : result.reports) {
          print_summary(r);
        }
        std::cout << (result.passed ? "all scenarios passed" : "some scenarios failed") << "\n";
        if (int rc = write_report(report_path, ggt::run_record(result, opt.seed, !no_timing))) {
          return rc;
        }
        return result.passed ? 0 : 1;
      }
      auto const r = ggt::run_scenario(scenario, opt);
      print_summary(r);
      if (int rc = write_report(report_path, ggt::to_json(r, !no_timing))) {
        return rc;
      }
      return r.passed() ? 0 : 1;
    }
    if (replay->parsed()) {
      if (!replay_from.empty()) {
        std::ifstream in(replay_from);
        if (!in) {
          std::cerr << "cannot read " << replay_from << "\n";
          return kUsage;
        }
        auto const j = nlohmann::json::parse(in);
        std::vector<nlohmann::json> reports;
        if (j.contains("reports")) {
          reports.assign(j["reports"].begin(), j["reports"].end());
        } else {
          reports.push_back(j);
        }
        int rc = 0;
        for (auto const& r : reports) {
          for (auto const& v : r["violations"]) {
            auto args = v["replay"].get<std::vector<std::string>>();
            if (args.empty()) {
              std::cout << r["scenario"].get<std::string>() << "/" << v["check"].get<std::string>()
                        << ": no replay vector\n";
              continue;
            }
            std::cout << r["scenario"].get<std::string>() << "/" << v["check"].get<std::string>()
                      << ": ";
            rc = std::max(rc, replay_one(args));
          }
        }
        return rc;
      }
      if (replay_args.empty()) {
        std::cerr << "replay needs a replay vector or --from\n";
        return kUsage;
      }
      return replay_one(replay_args);
    }
  } catch (ggt::UnknownScenario const& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (ggt::ParseError const& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (std::invalid_argument const& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (nlohmann::json::exception const& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return 0;
}
