#pragma once

// Straight-line numeric recomputation of the symmetrized Ricci form and the
// Lie-derivative form at one rational parameter point. Shares nothing with
// the library beyond GMP: brackets are entered from the group definitions,
// the connection comes from the Koszul formula, and every tensor is a plain
// array of rationals.

#include <array>
#include <optional>
#include <random>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using V = std::array<Q, 3>;
using Form = std::array<std::array<Q, 3>, 3>;

struct Params {
  Q alpha, beta, gamma, delta;
  int eta = 1;
  Q a0;
  V mu;  // components of the soliton field
};

struct Result {
  Form sym_ricci;
  Form lie;
};

// group 1..7; normal is the 0-based index of the direction normal to the plane,
// or nullopt for the Levi-Civita connection.
Result evaluate(int group, std::optional<int> normal, bool perturbed, const Params& p);

// Random admissible parameters for the group.
Params draw(int group, int eta, std::mt19937_64& gen);

}  // namespace oracle
