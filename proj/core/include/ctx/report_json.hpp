#pragma once

#include <string>

#include "ctx/criteria.hpp"
#include "ctx/oracle.hpp"

namespace ctx {

inline constexpr int kReportVersion = 1;

// Stable JSON renderings (two-space indent, trailing newline). Rationals are
// strings in lowest terms, e.g. "14/5" or "2".

/// With `full_witness` the report lists every nonzero witness entry;
/// otherwise only the witness kind, support size, and verification flag.
std::string to_json(const AnalysisReport& report, bool full_witness);
std::string to_json(const ChshReport& report);
std::string to_json(const CrossCheckReport& report);

}  // namespace ctx
