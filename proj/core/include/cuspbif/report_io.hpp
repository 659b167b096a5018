#pragma once

#include <string>
#include <string_view>

#include "cuspbif/cusp_pipeline.hpp"

namespace cuspbif {

inline constexpr int kReportSchemaVersion = 1;

/// One JSON object with a top-level "schema" field and one key per report
/// field. Infinite dimensions are written as the string "INFINITE".
std::string report_to_json(const BifurcationReport& report, int indent = 2);

/// Inverse of report_to_json. Throws Error(InvalidArgument) on malformed input
/// or an unknown schema version.
BifurcationReport report_from_json(std::string_view text);

/// Human-readable labeled table.
std::string report_to_text(const BifurcationReport& report);

}  // namespace cuspbif
