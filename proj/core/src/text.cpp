#include "bott/text.hpp"

#include "bott/parse.hpp"

namespace bott {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto p = s.find(sep, start);
    out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start < s.size()) {
    auto p = s.find('\n', start);
    if (p == std::string_view::npos) p = s.size();
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<int> parse_indices(std::string_view s, std::size_t n) {
  auto words = split_words(trim(s));
  if (words.size() != n) throw ParseError("expected " + std::to_string(n) + " indices, got '" + std::string(s) + "'");
  std::vector<int> out;
  for (auto w : words) {
    if (w.size() != 1 || w[0] < '1' || w[0] > '3') throw ParseError("index must be 1, 2 or 3: '" + std::string(w) + "'");
    out.push_back(w[0] - '0');
  }
  return out;
}

}  // namespace bott
