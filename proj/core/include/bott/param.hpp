#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace bott {

// The closed parameter alphabet. Declaration order is the variable order of
// the monomial ordering: alpha is the largest variable.
enum class Param : std::uint8_t { alpha, beta, gamma, delta, a0, mu, mu1, mu2, mu3 };

inline constexpr std::size_t kParamCount = 9;

inline constexpr std::array<Param, kParamCount> kAllParams = {
    Param::alpha, Param::beta, Param::gamma, Param::delta, Param::a0,
    Param::mu,    Param::mu1,  Param::mu2,   Param::mu3};

// The soliton unknowns, in elimination order.
inline constexpr std::array<Param, 4> kUnknowns = {Param::mu1, Param::mu2, Param::mu3, Param::mu};

constexpr std::size_t index(Param p) { return static_cast<std::size_t>(p); }

std::string_view name(Param p);
std::optional<Param> param_from_name(std::string_view s);

bool is_unknown(Param p);

}  // namespace bott
