#include "bott/sampling.hpp"

#include <algorithm>

namespace bott {

mpq_class Rng::rational() {
  long n = static_cast<long>(gen_() % 19) - 9;
  long d = static_cast<long>(gen_() % 9) + 1;
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

mpq_class Rng::nonzero_rational() {
  for (;;) {
    mpq_class q = rational();
    if (q != 0) return q;
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

bool admissible(const Constraints& c, const Point& point) {
  for (auto& e : c.equal)
    if (e.eval(point) != 0) return false;
  for (auto& n : c.nonzero)
    if (n.eval(point) == 0) return false;
  return true;
}

bool random_admissible_point(Rng& rng, const std::vector<Param>& params, const Constraints& c, Point& out,
                             int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Point p;
    for (Param q : params) p[q] = rng.rational();
    bool ok = true;
    for (auto& e : c.equal) {
      if (e.eval(p) == 0) continue;
      std::vector<std::pair<Param, Poly>> linear;
      for (Param q : e.params()) {
        if (e.degree(q) != 1) continue;
        auto cs = e.coefficients_in(q);
        Point rest = p;
        rest.erase(q);
        if (cs[1].eval(rest) != 0) linear.emplace_back(q, cs[0]);
      }
      if (linear.empty()) {
        ok = false;
        break;
      }
      auto& [q, c0] = linear[rng.below(linear.size())];
      Point rest = p;
      rest.erase(q);
      p[q] = -c0.eval(rest) / e.coefficients_in(q)[1].eval(rest);
    }
    if (ok && admissible(c, p)) {
      out = std::move(p);
      return true;
    }
  }
  return false;
}

SamplePlan sample_plan(const std::vector<Param>& params, const Constraints& c, std::uint64_t seed,
                       std::size_t min_total, std::size_t min_random) {
  static const std::array<mpq_class, 6> grid = {mpq_class(-2), mpq_class(-1), mpq_class(-1, 2),
                                                mpq_class(1, 2), mpq_class(1),  mpq_class(2)};
  SamplePlan plan;
  std::vector<std::size_t> idx(params.size(), 0);
  for (;;) {
    Point p;
    for (std::size_t i = 0; i < params.size(); ++i) p[params[i]] = grid[idx[i]];
    if (admissible(c, p)) plan.points.push_back(std::move(p));
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == grid.size()) idx[i++] = 0;
    if (i == idx.size()) break;
  }
  plan.grid = plan.points.size();
  std::size_t want = std::max(min_random, min_total > plan.grid ? min_total - plan.grid : 0);
  Rng rng(seed);
  for (std::size_t k = 0; k < want; ++k) {
    Point p;
    if (!random_admissible_point(rng, params, c, p)) break;
    plan.points.push_back(std::move(p));
    ++plan.random;
  }
  return plan;
}

}  // namespace bott
