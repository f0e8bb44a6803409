#include "bott/param.hpp"

namespace bott {

namespace {
constexpr std::array<std::string_view, kParamCount> kNames = {
    "alpha", "beta", "gamma", "delta", "a0", "mu", "mu1", "mu2", "mu3"};
}

std::string_view name(Param p) { return kNames[index(p)]; }

std::optional<Param> param_from_name(std::string_view s) {
  for (Param p : kAllParams)
    if (kNames[index(p)] == s) return p;
  return std::nullopt;
}

bool is_unknown(Param p) {
  return p == Param::mu || p == Param::mu1 || p == Param::mu2 || p == Param::mu3;
}

}  // namespace bott
