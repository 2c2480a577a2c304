#include "ggt/report.hpp"

#include <stdexcept>

namespace ggt {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::pass:
      return "pass";
    case Expectation::fail:
      return "fail";
    case Expectation::record:
      return "record";
  }
  return "pass";
}

Expectation expectation_from_string(std::string const& s) {
  if (s == "pass") {
    return Expectation::pass;
  }
  if (s == "fail") {
    return Expectation::fail;
  }
  if (s == "record") {
    return Expectation::record;
  }
  throw std::invalid_argument("unknown expectation '" + s + "'");
}

void Report::absorb(Report const& sub, std::string const& prefix) {
  checks_run += sub.checks_run;
  for (auto v : sub.violations) {
    v.check = prefix + "/" + v.check;
    add_violation(std::move(v));
  }
  violations_dropped += sub.violations_dropped;
  for (auto const& n : sub.notes) {
    notes.push_back(prefix + ": " + n);
  }
}

nlohmann::json to_json(Report const& r, bool include_timing) {
  nlohmann::json j;
  j["scenario"] = r.scenario;
  j["parameters"] = r.parameters;
  j["seed"] = r.seed;
  j["checks_run"] = r.checks_run;
  j["method"] = kReportMethod;
  j["expectation"] = to_string(r.expectation);
  j["passed"] = r.passed();
  auto vs = nlohmann::json::array();
  for (auto const& v : r.violations) {
    nlohmann::json jv;
    jv["check"] = v.check;
    jv["level"] = v.level ? nlohmann::json(*v.level) : nlohmann::json(nullptr);
    jv["witnesses"] = v.witnesses;
    jv["replay"] = v.replay;
    vs.push_back(std::move(jv));
  }
  j["violations"] = std::move(vs);
  j["violations_dropped"] = r.violations_dropped;
  j["notes"] = r.notes;
  j["wall_time"] = include_timing ? r.wall_time : 0.0;
  return j;
}

Report report_from_json(nlohmann::json const& j) {
  Report r;
  r.scenario = j.at("scenario").get<std::string>();
  r.parameters = j.at("parameters").get<std::map<std::string, std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.checks_run = j.at("checks_run").get<std::uint64_t>();
  r.expectation = expectation_from_string(j.at("expectation").get<std::string>());
  for (auto const& jv : j.at("violations")) {
    Violation v;
    v.check = jv.at("check").get<std::string>();
    if (!jv.at("level").is_null()) {
      v.level = jv.at("level").get<std::size_t>();
    }
    v.witnesses = jv.at("witnesses").get<std::vector<std::string>>();
    v.replay = jv.at("replay").get<std::vector<std::string>>();
    r.violations.push_back(std::move(v));
  }
  r.violations_dropped = j.value("violations_dropped", std::uint64_t{0});
  r.notes = j.value("notes", std::vector<std::string>{});
  r.wall_time = j.at("wall_time").get<double>();
  return r;
}

namespace {

void expect(std::vector<std::string>& errors, nlohmann::json const& j, std::string const& path,
            char const* key, bool (nlohmann::json::*pred)() const noexcept, char const* type) {
  if (!j.contains(key)) {
    errors.push_back(path + key + ": missing");
  } else if (!(j.at(key).*pred)()) {
    errors.push_back(path + key + ": expected " + type);
  }
}

void validate_single(nlohmann::json const& j, std::string const& path,
                     std::vector<std::string>& errors) {
  if (!j.is_object()) {
    errors.push_back(path + ": expected object");
    return;
  }
  using J = nlohmann::json;
  expect(errors, j, path, "scenario", &J::is_string, "string");
  expect(errors, j, path, "parameters", &J::is_object, "object");
  expect(errors, j, path, "seed", &J::is_number_unsigned, "unsigned integer");
  expect(errors, j, path, "checks_run", &J::is_number_unsigned, "unsigned integer");
  expect(errors, j, path, "violations", &J::is_array, "array");
  expect(errors, j, path, "wall_time", &J::is_number, "number");
  expect(errors, j, path, "expectation", &J::is_string, "string");
  expect(errors, j, path, "passed", &J::is_boolean, "boolean");
  expect(errors, j, path, "method", &J::is_string, "string");
  if (j.contains("parameters") && j["parameters"].is_object()) {
    for (auto const& [k, v] : j["parameters"].items()) {
      if (!v.is_string()) {
        errors.push_back(path + "parameters." + k + ": expected string");
      }
    }
  }
  if (j.contains("expectation") && j["expectation"].is_string()) {
    auto const e = j["expectation"].get<std::string>();
    if (e != "pass" && e != "fail" && e != "record") {
      errors.push_back(path + "expectation: unknown value '" + e + "'");
    }
  }
  if (j.contains("violations") && j["violations"].is_array()) {
    std::size_t i = 0;
    for (auto const& v : j["violations"]) {
      std::string const vp = path + "violations[" + std::to_string(i++) + "].";
      if (!v.is_object()) {
        errors.push_back(vp + ": expected object");
        continue;
      }
      expect(errors, v, vp, "check", &J::is_string, "string");
      if (!v.contains("level") || !(v["level"].is_null() || v["level"].is_number_unsigned())) {
        errors.push_back(vp + "level: expected unsigned integer or null");
      }
      expect(errors, v, vp, "witnesses", &J::is_array, "array");
      expect(errors, v, vp, "replay", &J::is_array, "array");
      for (char const* key : {"witnesses", "replay"}) {
        if (v.contains(key) && v[key].is_array()) {
          for (auto const& w : v[key]) {
            if (!w.is_string()) {
              errors.push_back(vp + key + ": expected array of strings");
              break;
            }
          }
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> validate_report_json(nlohmann::json const& j) {
  std::vector<std::string> errors;
  if (j.is_object() && j.contains("reports")) {
    using J = nlohmann::json;
    expect(errors, j, "", "seed", &J::is_number_unsigned, "unsigned integer");
    expect(errors, j, "", "passed", &J::is_boolean, "boolean");
    expect(errors, j, "", "reports", &J::is_array, "array");
    if (j["reports"].is_array()) {
      std::size_t i = 0;
      for (auto const& r : j["reports"]) {
        validate_single(r, "reports[" + std::to_string(i++) + "].", errors);
      }
    }
    return errors;
  }
  validate_single(j, "", errors);
  return errors;
}

std::string report_schema() {
  return R"json({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "$id": "ggt-report",
  "type": "object",
  "required": ["scenario", "parameters", "seed", "checks_run", "violations",
               "wall_time", "expectation", "passed", "method"],
  "properties": {
    "scenario": {"type": "string"},
    "parameters": {"type": "object", "additionalProperties": {"type": "string"}},
    "seed": {"type": "integer", "minimum": 0},
    "checks_run": {"type": "integer", "minimum": 0},
    "method": {"type": "string"},
    "expectation": {"enum": ["pass", "fail", "record"]},
    "passed": {"type": "boolean"},
    "violations": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["check", "level", "witnesses", "replay"],
        "properties": {
          "check": {"type": "string"},
          "level": {"type": ["integer", "null"], "minimum": 0},
          "witnesses": {"type": "array", "items": {"type": "string"}},
          "replay": {"type": "array", "items": {"type": "string"}}
        }
      }
    },
    "violations_dropped": {"type": "integer", "minimum": 0},
    "notes": {"type": "array", "items": {"type": "string"}},
    "wall_time": {"type": "number", "minimum": 0}
  }
})json";
}

}  // namespace ggt
