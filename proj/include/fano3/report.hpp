#pragma once

#include <string>
#include <vector>

#include "fano3/catalog.hpp"

namespace fano3 {

enum class ReportFormat { text, json, markdown };

/// Renders results sorted by claim id. With omit_timings, elapsed_ms is
/// reported as 0, so identical runs produce byte-identical output.
std::string emit_report(std::vector<ClaimResult> results, ReportFormat format,
                        bool omit_timings = false);

/// 0 when every result passed (skipped counts as passing), 1 otherwise.
int report_exit_code(const std::vector<ClaimResult>& results);

}  // namespace fano3
