#pragma once

#include <string>
#include <vector>

#include "cotan/groebner.hpp"

namespace cotan {

// Ideal file format. Statements end with ';' (the last one may omit it), '#' starts a
// comment running to end of line:
//   ring x y z;        declares the variables, required before gens
//   weights 1 1 2;     optional, one integer >= 1 per variable, default all 1
//   gens x^2, x*y;     comma-separated polynomial expressions
//   flag name true;    optional boolean flag (true/false)
// Expressions: sums of terms with '+'/'-', terms are '*'-products of factors, factors
// are integers, rationals a/b, or variables with optional '^' integer powers.
// Parse errors throw invalid_argument carrying line and column.
IdealPresentation parse_ideal_text(const std::string& text);
IdealPresentation parse_ideal_file(const std::string& path);

// Plain-text sequence: one rational per line (integer or a/b), '#' comments and blank
// lines skipped.
std::vector<Rat> parse_sequence_text(const std::string& text);
std::vector<Rat> parse_sequence_file(const std::string& path);

// Whole file as bytes; throws invalid_argument when unreadable.
std::string read_file_bytes(const std::string& path);

}  // namespace cotan
