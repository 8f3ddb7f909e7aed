// Command-line driver for the claim registry.
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fano3/field.hpp"
#include "fano3/report.hpp"

namespace {

fano3::ReportFormat parse_format(const std::string& s) {
  if (s == "text") return fano3::ReportFormat::text;
  if (s == "json") return fano3::ReportFormat::json;
  if (s == "markdown") return fano3::ReportFormat::markdown;
  throw CLI::ValidationError("--format", "must be text, json or markdown");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fano3 - exact verification of the catalog claims"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list registered claims");
  bool list_slow_only = false;
  list->add_flag("--slow-only", list_slow_only, "only list slow claims");

  auto* verify = app.add_subcommand("verify", "run claims and report");
  std::vector<std::string> claim_ids;
  std::string format_name = "text";
  fano3::RunConfig config;
  bool seed_given = false;
  bool omit_timings = false;
  verify->add_option("--claim", claim_ids,
                     "claim id to run (repeatable; default: all)");
  verify->add_option("--prime", config.prime, "first working prime")
      ->capture_default_str();
  verify->add_option("--second-prime", config.second_prime,
                     "cross-check prime")
      ->capture_default_str();
  verify
      ->add_option_function<std::uint64_t>(
          "--seed",
          [&](std::uint64_t v) {
            config.seed = v;
            seed_given = true;
          },
          "base random seed")
      ->default_str("0");
  verify->add_option("--trials", config.trials, "trials per zero-dim count")
      ->capture_default_str();
  verify->add_flag("--include-slow", config.include_slow,
                   "run claims marked slow");
  verify->add_option("--format", format_name, "text | json | markdown")
      ->capture_default_str();
  verify->add_flag("--omit-timings", omit_timings,
                   "report elapsed_ms as 0 for byte-stable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto& registry = fano3::ClaimRegistry::instance();

  if (*list) {
    for (const auto& c : registry.claims()) {
      if (list_slow_only && c.cost != fano3::ClaimCost::slow) continue;
      std::cout << c.id << "  [" << fano3::to_string(c.kind)
                << (c.cost == fano3::ClaimCost::slow ? ", slow" : "") << "]  "
                << c.description << "\n";
    }
    return 0;
  }

  fano3::ReportFormat format;
  try {
    format = parse_format(format_name);
  } catch (const CLI::Error&) {
    std::cerr << "error: --format must be text, json or markdown\n";
    return 2;
  }
  if (!fano3::is_prime(config.prime) || !fano3::is_prime(config.second_prime)) {
    std::cerr << "error: --prime and --second-prime must be prime numbers\n";
    return 2;
  }
  if (config.trials < 1) {
    std::cerr << "error: --trials must be positive\n";
    return 2;
  }
  if (!seed_given) {
    if (const char* env = std::getenv("FANO3_SEED")) {
      try {
        config.seed = std::stoull(env);
      } catch (const std::exception&) {
        std::cerr << "error: FANO3_SEED must be an unsigned integer\n";
        return 2;
      }
    }
  }

  std::vector<fano3::ClaimResult> results;
  if (claim_ids.empty()) {
    results = registry.run_all(config);
  } else {
    for (const auto& id : claim_ids) {
      if (registry.find(id) == nullptr) {
        std::cerr << "error: unknown claim id: " << id << "\n";
        return 2;
      }
    }
    for (const auto& id : claim_ids)
      results.push_back(registry.run_claim(id, config));
  }

  std::cout << fano3::emit_report(results, format, omit_timings);
  return fano3::report_exit_code(results);
}
