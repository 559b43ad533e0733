#include "gliaison/scenario/report.hpp"

#include <sstream>

namespace gliaison {

namespace {

std::string indent(const std::string& text, const std::string& pad) {
  std::istringstream lines(text);
  std::string out;
  for (std::string l; std::getline(lines, l);) out += (out.empty() ? "" : "\n") + pad + l;
  return out;
}

}  // namespace

bool Step::passed() const {
  for (auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool Step::check(std::string name, bool ok, std::string detail) {
  checks.push_back(StepCheck{std::move(name), ok, std::move(detail)});
  return ok;
}

Step& ScenarioReport::step(std::string operation) {
  steps.push_back(Step{std::move(operation)});
  return steps.back();
}

bool ScenarioReport::passed() const {
  for (auto& s : steps)
    if (!s.passed()) return false;
  return !steps.empty();
}

Json betti_json(const BettiTable& b) {
  Json entries = Json::array();
  for (auto& [k, v] : b.entries()) entries.push_back({k.first, k.second, v});
  return {{"totals", b.totals()}, {"entries", entries}, {"display", b.to_string()}};
}

Json hilbert_json(const HilbertTable& h) {
  Json out = Json::object();
  for (auto& [d, v] : h) out[std::to_string(d)] = v;
  return out;
}

Json certificate_json(const LinkageCertificate& c) {
  return {{"kind", c.kind_name()},
          {"valid", c.valid},
          {"failure", c.failure},
          {"C", c.c.to_string()},
          {"Y", c.y.to_string()},
          {"residual", c.residual.to_string()},
          {"checks",
           {{"containment", c.containment},
            {"codimensions_agree", c.codimensions_agree},
            {"y_symmetric_betti", c.y_symmetric_betti},
            {"y_last_betti_one", c.y_last_betti_one},
            {"c_unmixed", c.c_unmixed},
            {"quotient_saturated", c.quotient_saturated},
            {"bidual", c.bidual},
            {"intersection_equal", c.intersection_equal},
            {"degree_additive", c.degree_additive}}}};
}

void ScenarioReport::add_betti(const std::string& name, const BettiTable& b) {
  betti[name] = betti_json(b);
  betti_display_order.push_back(name);
}

void ScenarioReport::add_hilbert(const std::string& name, const HilbertTable& h) { hilbert[name] = hilbert_json(h); }

void ScenarioReport::add_certificate(const std::string& name, const LinkageCertificate& c) {
  Json j = certificate_json(c);
  j["name"] = name;
  certificates.push_back(j);
}

Json ScenarioReport::to_json() const {
  Json s = Json::array();
  for (auto& st : steps) {
    Json checks = Json::array();
    for (auto& c : st.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    s.push_back({{"operation", st.operation},
                 {"inputs", st.inputs},
                 {"outputs", st.outputs},
                 {"checks", checks},
                 {"passed", st.passed()}});
  }
  return {{"schema", kSchema},
          {"scenario", scenario},
          {"seed", seed},
          {"steps", s},
          {"verdict", passed() ? "pass" : "fail"},
          {"notes", notes},
          {"tables", {{"betti", betti}, {"hilbert", hilbert}, {"certificates", certificates}}}};
}

std::string ScenarioReport::to_text() const {
  std::ostringstream os;
  os << "scenario " << scenario << " (seed " << seed << "): " << (passed() ? "PASS" : "FAIL") << '\n';
  for (auto& st : steps) {
    os << "  [" << (st.passed() ? "ok" : "FAILED") << "] " << st.operation << '\n';
    for (auto& [k, v] : st.outputs.items())
      os << "      " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    for (auto& c : st.checks) {
      os << "      " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
      // multi-line details (Betti displays) only when the check failed
      if (c.detail.find('\n') != std::string::npos) {
        if (!c.passed) os << '\n' << indent(c.detail, "          ");
      } else if (!c.detail.empty()) {
        os << " (" << c.detail << ")";
      }
      os << '\n';
    }
  }
  for (auto& name : betti_display_order) {
    os << "  betti " << name << ":\n";
    os << indent(betti[name]["display"].get<std::string>(), "    ") << '\n';
  }
  for (auto& [name, h] : hilbert.items()) os << "  hilbert " << name << " = " << h.dump() << '\n';
  for (auto& n : notes) os << "  note: " << n << '\n';
  return os.str();
}

}  // namespace gliaison
