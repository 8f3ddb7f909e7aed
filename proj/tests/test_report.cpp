#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "fano3/report.hpp"

using namespace fano3;

namespace {
ClaimResult make(const std::string& id, ClaimStatus status, long ms) {
  ClaimResult r;
  r.claim_id = id;
  r.description = "desc " + id;
  r.paper_ref = "ref " + id;
  r.status = status;
  r.expected = "e";
  r.computed = "c";
  r.elapsed_ms = ms;
  r.seed = 7;
  r.prime = 32003;
  return r;
}
}  // namespace

TEST_CASE("empty result set renders an empty JSON array") {
  CHECK(emit_report({}, ReportFormat::json) == "[]\n");
}

TEST_CASE("JSON objects carry exactly the declared keys") {
  auto out = emit_report({make("a", ClaimStatus::pass, 3)}, ReportFormat::json);
  auto j = nlohmann::json::parse(out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  const std::set<std::string> expected_keys = {
      "claim_id", "description", "paper_ref", "status", "expected",
      "computed", "elapsed_ms", "seed",      "prime"};
  std::set<std::string> keys;
  for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.insert(it.key());
  CHECK(keys == expected_keys);
  CHECK(j[0]["status"] == "pass");
  CHECK(j[0]["seed"] == 7);
  CHECK(j[0]["prime"] == 32003);
}

TEST_CASE("results are sorted by claim id regardless of input order") {
  std::vector<ClaimResult> rs = {make("z.last", ClaimStatus::pass, 1),
                                 make("a.first", ClaimStatus::fail, 2),
                                 make("m.mid", ClaimStatus::skipped, 3)};
  auto j = nlohmann::json::parse(emit_report(rs, ReportFormat::json));
  CHECK(j[0]["claim_id"] == "a.first");
  CHECK(j[1]["claim_id"] == "m.mid");
  CHECK(j[2]["claim_id"] == "z.last");
  // same contract in the text rendering
  auto text = emit_report(rs, ReportFormat::text);
  CHECK(text.find("a.first") < text.find("m.mid"));
  CHECK(text.find("m.mid") < text.find("z.last"));
}

TEST_CASE("omit_timings gives byte-identical output across timing jitter") {
  auto run_a = emit_report({make("x", ClaimStatus::pass, 17)},
                           ReportFormat::json, true);
  auto run_b = emit_report({make("x", ClaimStatus::pass, 90210)},
                           ReportFormat::json, true);
  CHECK(run_a == run_b);
  CHECK(nlohmann::json::parse(run_a)[0]["elapsed_ms"] == 0);
  // without the flag the timings are preserved
  auto kept = emit_report({make("x", ClaimStatus::pass, 17)},
                          ReportFormat::json, false);
  CHECK(nlohmann::json::parse(kept)[0]["elapsed_ms"] == 17);
}

TEST_CASE("identical inputs give identical bytes in every format") {
  std::vector<ClaimResult> rs = {make("b", ClaimStatus::unstable, 4),
                                 make("a", ClaimStatus::pass, 5)};
  for (auto f : {ReportFormat::text, ReportFormat::json,
                 ReportFormat::markdown}) {
    CHECK(emit_report(rs, f) == emit_report(rs, f));
  }
}

TEST_CASE("markdown escapes pipes and stays tabular") {
  ClaimResult r = make("tab", ClaimStatus::pass, 0);
  r.computed = "a|b";
  auto md = emit_report({r}, ReportFormat::markdown);
  CHECK(md.find("a\\|b") != std::string::npos);
  CHECK(md.rfind("| claim |", 0) == 0);
}

TEST_CASE("exit code contract") {
  CHECK(report_exit_code({}) == 0);
  CHECK(report_exit_code({make("a", ClaimStatus::pass, 0)}) == 0);
  CHECK(report_exit_code({make("a", ClaimStatus::skipped, 0)}) == 0);
  CHECK(report_exit_code({make("a", ClaimStatus::pass, 0),
                          make("b", ClaimStatus::fail, 0)}) == 1);
  CHECK(report_exit_code({make("a", ClaimStatus::unstable, 0)}) == 1);
  // synthetic sweep: any fail/unstable anywhere flips the code
  for (auto bad : {ClaimStatus::fail, ClaimStatus::unstable}) {
    std::vector<ClaimResult> rs;
    for (int i = 0; i < 5; ++i) rs.push_back(make(std::to_string(i),
                                                  ClaimStatus::pass, 0));
    rs[3].status = bad;
    CHECK(report_exit_code(rs) == 1);
  }
}

TEST_CASE("status and kind names") {
  CHECK(to_string(ClaimStatus::pass) == "pass");
  CHECK(to_string(ClaimStatus::fail) == "fail");
  CHECK(to_string(ClaimStatus::skipped) == "skipped");
  CHECK(to_string(ClaimStatus::unstable) == "unstable");
  CHECK(to_string(ClaimKind::zerodim) == "zerodim");
}
