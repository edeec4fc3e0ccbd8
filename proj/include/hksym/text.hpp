#pragma once

#include <string>
#include <vector>

namespace hksym {

/// Maps the Unicode spellings used in the literature (U+2212 minus, circled
/// plus, angle brackets) onto their ASCII equivalents.
std::string normalize_math_text(const std::string& s);
std::string strip_spaces(const std::string& s);
/// Splits on `sep` occurring outside any parentheses or angle brackets.
std::vector<std::string> split_top_level(const std::string& s, char sep);

}  // namespace hksym
