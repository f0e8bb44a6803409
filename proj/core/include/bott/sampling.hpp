#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "bott/poly.hpp"

namespace bott {

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Portable rational draws: the raw mt19937_64 output is reduced with modulo,
// so the sequence does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t next() { return gen_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
  // numerator in [-9, 9], denominator in [1, 9]
  mpq_class rational();
  mpq_class nonzero_rational();

 private:
  std::mt19937_64 gen_;
};

// Stable per-item seed so results do not depend on evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

struct Constraints {
  std::vector<Poly> equal;
  std::vector<Poly> nonzero;
};

bool admissible(const Constraints& c, const Point& point);

// Random point over params satisfying the constraints: every parameter is
// drawn, then each equality is solved for a randomly chosen parameter in
// which it is linear. Returns false after max_attempts failures.
bool random_admissible_point(Rng& rng, const std::vector<Param>& params, const Constraints& c, Point& out,
                             int max_attempts = 1000);

struct SamplePlan {
  std::vector<Point> points;
  std::size_t grid = 0;
  std::size_t random = 0;
};

// Grid {-2, -1, -1/2, 1/2, 1, 2}^k filtered by the constraints, then seeded
// random admissible points: at least min_random, and enough to reach min_total.
SamplePlan sample_plan(const std::vector<Param>& params, const Constraints& c, std::uint64_t seed,
                       std::size_t min_total = 100, std::size_t min_random = 50);

}  // namespace bott
