#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bott/ratfun.hpp"

namespace bott {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Expressions over the parameter alphabet with + - * / ^, integer literals and
// parentheses. "eta" is accepted only when a value is supplied and is replaced
// by it on the spot.
RatFun parse_ratfun(std::string_view text, std::optional<int> eta = std::nullopt);

// As parse_ratfun, but the result must be a polynomial.
Poly parse_poly(std::string_view text, std::optional<int> eta = std::nullopt);

bool mentions_eta(std::string_view text);

}  // namespace bott
