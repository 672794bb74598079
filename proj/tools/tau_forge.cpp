#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tauforge/checks.hpp"
#include "tauforge/error.hpp"

using namespace tauforge;

namespace {

constexpr int exit_usage = 2;

int default_jobs() {
  if (const char* env = std::getenv("TAU_FORGE_JOBS")) {
    try {
      const int jobs = std::stoi(env);
      if (jobs >= 1) return jobs;
    } catch (const std::exception&) {
    }
    throw PreconditionError(std::string("TAU_FORGE_JOBS must be a positive integer, got '") + env + "'");
  }
  return 1;
}

void print_list(bool json) {
  if (!json) {
    for (const auto& c : check_registry()) {
      std::cout << c.id << "  [" << c.module << "]  " << c.anchor;
      for (const auto& [k, v] : c.parameters) std::cout << "  " << k << "=" << v;
      std::cout << "\n";
    }
    return;
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& c : check_registry()) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.parameters) params[k] = v;
    out.push_back({{"id", c.id}, {"module", c.module}, {"anchor", c.anchor}, {"params", params}});
  }
  std::cout << out.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-forge: exact verification of bilinear identities for tau functions"};
  app.require_subcommand(1);

  bool list_json = false;
  auto* list = app.add_subcommand("list", "List the registered checks");
  list->add_flag("--json", list_json, "Machine-readable output");

  std::string selector;
  bool json = false;
  std::optional<int> degree, window, jobs;
  std::optional<std::string> j, jprime;
  std::uint32_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run the checks matching a selector (id or glob)");
  verify->add_option("selector", selector, "Check id or glob such as kp.*")->required();
  verify->add_flag("--json", json, "Machine-readable output");
  verify->add_option("--degree", degree, "Truncation degree");
  verify->add_option("--window", window, "Fock window M (modes -M..M-1)");
  verify->add_option("--j", j, "Spin j, e.g. 1/2 or 1");
  verify->add_option("--jprime", jprime, "Spin j'");
  verify->add_option("--seed", seed, "Seed for randomized checks");
  verify->add_option("--jobs", jobs, "Checks run concurrently (default TAU_FORGE_JOBS or 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  if (list->parsed()) {
    print_list(list_json);
    return 0;
  }

  std::vector<VerificationReport> reports;
  try {
    CheckOptions options;
    options.degree = degree;
    options.window = window;
    options.seed = seed;
    if (j) options.two_j = parse_spin(*j);
    if (jprime) options.two_jp = parse_spin(*jprime);
    validate_options(options);
    const int job_count = jobs ? *jobs : default_jobs();
    if (job_count < 1) throw PreconditionError("--jobs must be positive");
    reports = run_checks(select_checks(selector), options, job_count);
  } catch (const PreconditionError& e) {
    std::cerr << "tau-forge: " << e.what() << "\n";
    return exit_usage;
  }

  std::cout << (json ? render_json(reports) : render_text(reports));
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}
