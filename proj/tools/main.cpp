#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gliaison/errors.hpp"
#include "gliaison/scenario/scenarios.hpp"

using namespace gliaison;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::vector<ScenarioReport>& reports, bool json, const std::string& report_dir) {
  if (json) {
    if (reports.size() == 1) {
      std::cout << reports[0].to_json().dump(2) << '\n';
    } else {
      Json all = Json::array();
      for (auto& r : reports) all.push_back(r.to_json());
      std::cout << all.dump(2) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << reports[i].to_text();
  }
  if (report_dir.empty()) return;
  std::filesystem::create_directories(report_dir);
  for (auto& r : reports) {
    std::ofstream out(std::filesystem::path(report_dir) / (r.scenario + ".json"));
    if (!out) throw UsageError("cannot write to " + report_dir);
    out << r.to_json().dump(2) << '\n';
  }
}

int verdict(const std::vector<ScenarioReport>& reports) {
  for (auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein liaison and ACM sheaf scenarios over GF(p)"};
  app.require_subcommand(1);

  ScenarioOptions opts;
  bool json = false, parallel = false;
  std::string report_dir, input_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", opts.seed, "seed for every randomized construction");
    sub->add_flag("--json", json, "print the JSON report");
    sub->add_option("--max-degree", opts.max_degree, "Hilbert function window")->check(CLI::Range(0, 200));
    sub->add_option("--retries", opts.retries, "reseed budget for generic choices")->check(CLI::Range(1, 1000));
    sub->add_option("--report-dir", report_dir, "also write <scenario>.json files here");
  };

  CLI::App* list = app.add_subcommand("list", "list the built-in scenarios");

  std::vector<std::string> names;
  CLI::App* run = app.add_subcommand("run", "run scenarios by name, or all");
  run->add_option("names", names, "scenario names or 'all'")->required();
  run->add_flag("--parallel", parallel, "run scenarios concurrently");
  run->add_option("--input", input_path, "input file whose named ideals replace the built-in data");
  common(run);

  std::string doc_path;
  CLI::App* analyze = app.add_subcommand("analyze", "report invariants of every block of an input file");
  analyze->add_option("file", doc_path, "input file")->required();
  common(analyze);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*list) {
      for (auto& s : scenario_list())
        std::cout << s.name << (s.experimental ? " (experimental)" : "") << "  " << s.summary << '\n';
      return 0;
    }
    if (*analyze) {
      InputDocument doc = parse_input(read_file(doc_path));
      std::vector<ScenarioReport> reports{analyze_document(doc, opts)};
      emit(reports, json, report_dir);
      return verdict(reports);
    }
    if (!input_path.empty()) opts.input = parse_input(read_file(input_path));
    std::vector<std::string> selected;
    for (auto& n : names) {
      if (n == "all") {
        for (auto& s : scenario_list()) selected.push_back(s.name);
        continue;
      }
      bool known = false;
      for (auto& s : scenario_list()) known = known || s.name == n;
      if (!known) throw UsageError("unknown scenario '" + n + "'");
      selected.push_back(n);
    }
    std::vector<ScenarioReport> reports;
    if (parallel) {
      std::vector<std::future<ScenarioReport>> jobs;
      for (auto& n : selected) jobs.push_back(std::async(std::launch::async, [&opts, n] { return run_scenario(n, opts); }));
      for (auto& j : jobs) reports.push_back(j.get());
    } else {
      for (auto& n : selected) reports.push_back(run_scenario(n, opts));
    }
    emit(reports, json, report_dir);
    return verdict(reports);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
