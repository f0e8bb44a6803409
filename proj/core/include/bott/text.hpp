#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bott {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_lines(std::string_view s);
std::vector<std::string_view> split_words(std::string_view s);
// Exactly n 1-based indices in 1..3, whitespace separated.
std::vector<int> parse_indices(std::string_view s, std::size_t n);

}  // namespace bott
