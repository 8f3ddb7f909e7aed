#include "fano3/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fano3 {

namespace {

const char* status_mark(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::skipped: return "SKIP";
    case ClaimStatus::unstable: return "UNSTABLE";
  }
  return "?";
}

std::string render_text(const std::vector<ClaimResult>& rs) {
  std::ostringstream out;
  for (const auto& r : rs) {
    out << status_mark(r.status) << "  " << r.claim_id << "  expected=["
        << r.expected << "]  computed=[" << r.computed << "]  " << r.elapsed_ms
        << "ms\n";
  }
  std::size_t passed = std::count_if(rs.begin(), rs.end(), [](const auto& r) {
    return r.status == ClaimStatus::pass;
  });
  std::size_t skipped = std::count_if(rs.begin(), rs.end(), [](const auto& r) {
    return r.status == ClaimStatus::skipped;
  });
  out << passed << "/" << rs.size() - skipped << " claims passed";
  if (skipped != 0) out << " (" << skipped << " skipped)";
  out << "\n";
  return out.str();
}

std::string render_json(const std::vector<ClaimResult>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) {
    arr.push_back({{"claim_id", r.claim_id},
                   {"description", r.description},
                   {"paper_ref", r.paper_ref},
                   {"status", to_string(r.status)},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"elapsed_ms", r.elapsed_ms},
                   {"seed", r.seed},
                   {"prime", r.prime}});
  }
  return arr.dump(2) + "\n";
}

std::string escape_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string render_markdown(const std::vector<ClaimResult>& rs) {
  std::ostringstream out;
  out << "| claim | status | expected | computed | ms |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& r : rs) {
    out << "| " << escape_cell(r.claim_id) << " | " << status_mark(r.status)
        << " | " << escape_cell(r.expected) << " | " << escape_cell(r.computed)
        << " | " << r.elapsed_ms << " |\n";
  }
  return out.str();
}

}  // namespace

std::string emit_report(std::vector<ClaimResult> results, ReportFormat format,
                        bool omit_timings) {
  std::sort(results.begin(), results.end(),
            [](const ClaimResult& a, const ClaimResult& b) {
              return a.claim_id < b.claim_id;
            });
  if (omit_timings)
    for (auto& r : results) r.elapsed_ms = 0;
  switch (format) {
    case ReportFormat::text: return render_text(results);
    case ReportFormat::json: return render_json(results);
    case ReportFormat::markdown: return render_markdown(results);
  }
  return {};
}

int report_exit_code(const std::vector<ClaimResult>& results) {
  for (const auto& r : results)
    if (r.status == ClaimStatus::fail || r.status == ClaimStatus::unstable)
      return 1;
  return 0;
}

}  // namespace fano3
