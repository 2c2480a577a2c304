#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ggt/fox.hpp"
#include "ggt/scenarios.hpp"
#include "ggt/stallings.hpp"
#include "ggt/word.hpp"

namespace py = pybind11;

namespace {

using ggt::parse_word;
using ggt::to_string;

std::vector<ggt::Word> parse_all(std::vector<std::string> const& gens) {
  std::vector<ggt::Word> out;
  out.reserve(gens.size());
  for (auto const& g : gens) {
    out.push_back(parse_word(g));
  }
  return out;
}

ggt::ScenarioOptions options(std::uint64_t seed, std::optional<std::size_t> levels,
                             std::optional<std::size_t> trials, std::optional<std::size_t> bound,
                             std::string fault) {
  ggt::ScenarioOptions o;
  o.seed = seed;
  o.levels = levels;
  o.trials = trials;
  o.bound = bound;
  o.inject_fault = std::move(fault);
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Free group words, derived series membership, subgroup membership and checks";

  py::register_exception<ggt::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ggt::UnknownScenario>(m, "UnknownScenario", PyExc_KeyError);

  m.def("reduce", [](std::string const& w) { return to_string(parse_word(w)); }, py::arg("word"));
  m.def(
      "multiply",
      [](std::vector<std::string> const& words) {
        ggt::Word acc;
        for (auto const& w : words) {
          acc = ggt::multiply(acc, parse_word(w));
        }
        return to_string(acc);
      },
      py::arg("words"));
  m.def("invert", [](std::string const& w) { return to_string(ggt::invert(parse_word(w))); },
        py::arg("word"));
  m.def(
      "power",
      [](std::string const& w, std::int64_t k) { return to_string(ggt::power(parse_word(w), k)); },
      py::arg("word"), py::arg("k"));
  m.def(
      "commutator",
      [](std::string const& g, std::string const& h) {
        return to_string(ggt::commutator(parse_word(g), parse_word(h)));
      },
      py::arg("g"), py::arg("h"));
  m.def(
      "conjugate",
      [](std::string const& g, std::string const& h) {
        return to_string(ggt::conjugate(parse_word(g), parse_word(h)));
      },
      py::arg("g"), py::arg("h"));

  m.def(
      "derived_member",
      [](std::string const& w, std::size_t level) {
        py::gil_scoped_release release;
        return ggt::derived_member(parse_word(w), ggt::DerivedLevel{level});
      },
      py::arg("word"), py::arg("level"));
  m.def(
      "derived_depth",
      [](std::string const& w, std::size_t cap) {
        auto const d = ggt::derived_depth(parse_word(w), cap);
        return py::make_tuple(d.depth, d.at_least);
      },
      py::arg("word"), py::arg("cap") = 3,
      "(depth, at_least): at_least is True when the word lies at least `cap` deep.");
  m.def(
      "fox_derivative",
      [](std::string const& w, std::uint32_t generator) {
        return to_string(ggt::fox_derivative(parse_word(w), ggt::Generator{generator}));
      },
      py::arg("word"), py::arg("generator"));

  m.def(
      "subgroup_contains",
      [](std::vector<std::string> const& gens, std::string const& w) {
        return ggt::contains(ggt::fold(parse_all(gens)), parse_word(w));
      },
      py::arg("gens"), py::arg("word"));
  m.def(
      "coset_rep",
      [](std::vector<std::string> const& gens, std::string const& w) {
        return to_string(ggt::coset_rep(ggt::fold(parse_all(gens)), parse_word(w)));
      },
      py::arg("gens"), py::arg("word"));
  m.def(
      "is_free_basis", [](std::vector<std::string> const& gens) { return ggt::is_free_basis(parse_all(gens)); },
      py::arg("gens"));

  m.def("scenario_names", [] {
    std::vector<std::string> out;
    for (auto const& s : ggt::scenarios()) {
      out.push_back(s.name);
    }
    return out;
  });
  m.def("fault_names", &ggt::fault_names);
  m.def(
      "run_scenario",
      [](std::string const& name, std::uint64_t seed, std::optional<std::size_t> levels,
         std::optional<std::size_t> trials, std::optional<std::size_t> bound, std::string fault) {
        auto const opt = options(seed, levels, trials, bound, std::move(fault));
        ggt::Report r;
        {
          py::gil_scoped_release release;
          r = ggt::run_scenario(name, opt);
        }
        return ggt::to_json(r).dump();
      },
      py::arg("name"), py::arg("seed") = 42, py::arg("levels") = py::none(),
      py::arg("trials") = py::none(), py::arg("bound") = py::none(), py::arg("inject_fault") = "",
      "Runs one scenario and returns its report as a JSON string.");
  m.def(
      "run_all",
      [](std::uint64_t seed, std::optional<std::size_t> levels, std::optional<std::size_t> trials,
         std::optional<std::size_t> bound, std::string fault) {
        auto const opt = options(seed, levels, trials, bound, std::move(fault));
        ggt::RunResult res;
        {
          py::gil_scoped_release release;
          res = ggt::run_all(opt);
        }
        return ggt::run_record(res, seed).dump();
      },
      py::arg("seed") = 42, py::arg("levels") = py::none(), py::arg("trials") = py::none(),
      py::arg("bound") = py::none(), py::arg("inject_fault") = "",
      "Runs every scenario and returns the combined record as a JSON string.");
  m.def(
      "replay",
      [](std::vector<std::string> const& args) {
        auto const out = ggt::replay(args);
        return py::make_tuple(out.reproduced, out.detail);
      },
      py::arg("args"), "(reproduced, detail) for a violation's replay vector.");
  m.def("report_schema", &ggt::report_schema);
}
