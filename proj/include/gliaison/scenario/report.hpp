#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gliaison/homology/resolution.hpp"
#include "gliaison/liaison/linkage.hpp"
#include "gliaison/liaison/rao.hpp"

namespace gliaison {

using Json = nlohmann::ordered_json;

struct StepCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Step {
  std::string operation;
  Json inputs = Json::object();
  Json outputs = Json::object();
  std::vector<StepCheck> checks = {};

  bool passed() const;
  // Records a check and returns its outcome.
  bool check(std::string name, bool passed, std::string detail = "");
};

struct ScenarioReport {
  static constexpr int kSchema = 1;

  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<Step> steps;
  // Tables by name: Betti tables, Hilbert tables, certificates.
  Json betti = Json::object();
  Json hilbert = Json::object();
  Json certificates = Json::array();
  std::vector<std::string> betti_display_order;
  std::vector<std::string> notes;

  Step& step(std::string operation);
  bool passed() const;

  void add_betti(const std::string& name, const BettiTable& b);
  void add_hilbert(const std::string& name, const HilbertTable& h);
  void add_certificate(const std::string& name, const LinkageCertificate& c);

  Json to_json() const;
  std::string to_text() const;
};

Json betti_json(const BettiTable& b);
Json hilbert_json(const HilbertTable& h);
Json certificate_json(const LinkageCertificate& c);

}  // namespace gliaison
