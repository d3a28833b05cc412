#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cotan/ci_analysis.hpp"

namespace cotan {

inline constexpr const char* kToolName = "cotan";
inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

std::string fnv1a64_hex(const std::string& bytes);

// Rationals and big integers render as decimal strings to stay exact; structural
// integers (dims, indices, bounds) render as JSON numbers.
Json ring_json(const RingSpec& ring);
Json ideal_json(const IdealPresentation& ideal);
Json bounds_json(const ClassifyOptions& opts);  // jobs omitted: results never depend on it
Json series_json(const TruncSeries& s);
Json rat_list_json(const std::vector<Rat>& v);
Json int_list_json(const std::vector<Int>& v);
Json bigraded_json(const std::map<std::pair<int, int>, int>& dims);  // [{i, t, dim}]
Json degree_map_json(const std::map<int, int>& dims);                // [{t, dim}]
Json check_report_json(const CheckReport& report);
Json zero_pattern_json(const ZeroPatternReport& report);
Json ci_report_json(const CIReport& report);

// Top-level document: tool block, source path + content hash, optional ring/ideal
// blocks, bounds echo. Callers attach "tables" and "reports" members.
Json document_shell(const std::string& source_path, const std::string& source_bytes,
                    const IdealPresentation* ideal, const ClassifyOptions& opts);

std::string zero_pattern_verdict_name(ZeroPatternVerdict v);

// Markdown rendering: a bigraded dim grid (rows i, columns t) and the full report.
std::string bigraded_markdown(const std::map<std::pair<int, int>, int>& dims, int i_min, int i_max,
                              int t_max, const std::string& corner);
std::string ci_report_markdown(const CIReport& report);

}  // namespace cotan
