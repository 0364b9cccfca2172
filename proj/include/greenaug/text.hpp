#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace greenaug {

// Number of Unicode scalar values in a UTF-8 string. Ill-formed sequences
// count one per maximal invalid subsequence.
std::size_t count_code_points(std::string_view utf8);

// Strips leading and trailing Unicode whitespace.
std::string trim(std::string_view utf8);

// Lowercases, splits on Unicode whitespace, strips leading/trailing
// punctuation (general category P*) from each token, and drops empty tokens.
std::vector<std::string> tokenize(std::string_view utf8);

}  // namespace greenaug
