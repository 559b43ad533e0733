#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gliaison/scenario/input.hpp"
#include "gliaison/scenario/report.hpp"

namespace gliaison {

struct ScenarioOptions {
  std::uint64_t seed = 1;
  int max_degree = 10;  // Hilbert tables cover [0, max_degree], exactness [-max_degree, max_degree]
  int retries = 16;
  std::optional<InputDocument> input;  // named ideals here replace the built-in data
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
  bool experimental = false;
};

const std::vector<ScenarioInfo>& scenario_list();

// Throws UsageError for an unknown name. Mathematical failures, including an
// exhausted retry budget, are recorded as failed checks in the report.
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& options);

// Invariants of every ideal, matrix and module in a document.
ScenarioReport analyze_document(const InputDocument& doc, const ScenarioOptions& options);

}  // namespace gliaison
