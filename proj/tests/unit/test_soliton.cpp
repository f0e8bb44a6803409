#include <doctest.h>

#include "bott/parse.hpp"
#include "bott/pipeline.hpp"
#include "bott/verify.hpp"

using namespace bott;

namespace {

const Poly a = Poly::var(Param::alpha);
const Poly b = Poly::var(Param::beta);
const Poly g = Poly::var(Param::gamma);
const Poly d = Poly::var(Param::delta);
const Poly mu = Poly::var(Param::mu);
const Poly mu1 = Poly::var(Param::mu1);
const Poly mu2 = Poly::var(Param::mu2);

SolitonSystem system_of(GroupId id, DistId dist, bool perturbed = false) {
  return compute(catalog(id), dist, perturbed).system;
}

bool contains_up_to_scale(const SolitonSystem& s, const Poly& p) {
  for (auto& e : s.equations)
    if (same_up_to_scale(e, p)) return true;
  return false;
}

SolutionFamily zeros(std::initializer_list<Param> ps) {
  SolutionFamily f;
  for (Param p : ps) f.bindings[p] = RatFun(0);
  return f;
}

}  // namespace

TEST_CASE("G1 Bott system on D") {
  auto s = system_of(GroupId::G1, DistId::D);
  CHECK(s.equations.size() == 6);
  CHECK(contains_up_to_scale(s, mu2 * a - a * a - b * b + mu));
  CHECK(contains_up_to_scale(s, mu));
}

TEST_CASE("G5 Bott system on D has three equations") {
  auto s = system_of(GroupId::G5, DistId::D);
  REQUIRE(s.equations.size() == 3);
  CHECK(contains_up_to_scale(s, mu));
  CHECK(contains_up_to_scale(s, mu1 * a + mu2 * g));
  CHECK(contains_up_to_scale(s, mu1 * b + mu2 * d));
}

TEST_CASE("equations are primitive and pairwise distinct up to scale") {
  for (auto id : kAllGroups)
    for (auto dist : kAllDistributions)
      for (bool pert : {false, true}) {
        auto s = system_of(id, dist, pert);
        for (std::size_t i = 0; i < s.equations.size(); ++i) {
          CHECK(s.equations[i].content() == 1);
          for (std::size_t j = i + 1; j < s.equations.size(); ++j)
            CHECK_FALSE(same_up_to_scale(s.equations[i], s.equations[j]));
        }
      }
}

TEST_CASE("check_family") {
  CHECK(check_family(system_of(GroupId::G3, DistId::D), zeros({Param::mu, Param::alpha, Param::beta})).kind ==
        FamilyVerdict::Kind::Satisfied);
  CHECK(check_family(system_of(GroupId::G5, DistId::D), zeros({Param::mu, Param::mu1, Param::mu2})).kind ==
        FamilyVerdict::Kind::Satisfied);

  auto s = system_of(GroupId::G1, DistId::D);
  auto v = check_family(s, zeros({Param::mu, Param::mu1, Param::mu2, Param::mu3}));
  REQUIRE(v.kind == FamilyVerdict::Kind::Violated);
  CHECK(v.equation < s.equations.size());
  CHECK(v.residual.is_poly());
  CHECK(same_up_to_scale(v.residual.num(), a * a + b * b));
}

TEST_CASE("check_family branches on products") {
  // mu2*gamma = 0 splits into mu2 = 0 or gamma = 0
  auto s = system_of(GroupId::G3, DistId::D2);
  SolutionFamily f = zeros({Param::mu, Param::beta});
  f.side_equal.push_back(mu2 * g);
  auto v = check_family(s, f);
  CHECK(v.branches.size() == 2);
}

TEST_CASE("check_family reports contradictory side conditions") {
  auto s = system_of(GroupId::G1, DistId::D);
  SolutionFamily f = zeros({Param::alpha});
  CHECK(check_family(s, f).kind == FamilyVerdict::Kind::Inconsistent);
  SolutionFamily cyc;
  cyc.bindings[Param::mu1] = RatFun(mu2);
  cyc.bindings[Param::mu2] = RatFun(mu1);
  CHECK_THROWS_AS(check_family(s, cyc), FamilyError);
}

TEST_CASE("decide_at_point") {
  auto g1 = system_of(GroupId::G1, DistId::D);
  CHECK_FALSE(decide_at_point(g1, {{Param::alpha, 1}, {Param::beta, 0}}).solvable);
  CHECK_THROWS_AS(decide_at_point(g1, {{Param::alpha, 0}, {Param::beta, 1}}), ConstraintViolated);

  auto g5 = system_of(GroupId::G5, DistId::D);
  auto v = decide_at_point(g5, {{Param::alpha, 1}, {Param::beta, 0}, {Param::gamma, 0}, {Param::delta, 1}});
  REQUIRE(v.solvable);
  CHECK(v.dimension == 1);
  CHECK(v.witness.at(Param::mu) == 0);
  CHECK(v.witness.at(Param::mu1) == 0);
  CHECK(v.witness.at(Param::mu2) == 0);

  auto g3 = system_of(GroupId::G3, DistId::D);
  auto w = decide_at_point(g3, {{Param::alpha, 0}, {Param::beta, 0}, {Param::gamma, 5}});
  REQUIRE(w.solvable);
  CHECK(w.dimension == 3);
  CHECK(w.witness.at(Param::mu) == 0);
}

TEST_CASE("witnesses solve the system exactly") {
  auto s = system_of(GroupId::G5, DistId::D1, true);
  auto c = s.constraints;
  c.nonzero.push_back(Poly::var(Param::a0));
  auto plan = sample_plan(s.params, c, kDefaultSeed, 40, 40);
  for (auto& p : plan.points) {
    auto v = decide_at_point(s, p);
    if (!v.solvable) continue;
    Point full = p;
    for (auto& [k, x] : v.witness) full[k] = x;
    for (auto& e : s.equations) CHECK(e.eval(full) == 0);
  }
}

TEST_CASE("sampling respects constraints and is reproducible") {
  auto s = catalog(GroupId::G6);
  auto p1 = sample_plan(s.params, s.constraints(), 7, 100, 50);
  auto p2 = sample_plan(s.params, s.constraints(), 7, 100, 50);
  CHECK(p1.points == p2.points);
  CHECK(p1.points.size() >= 100);
  CHECK(p1.random >= 50);
  for (auto& p : p1.points) CHECK(admissible(s.constraints(), p));
  CHECK(derive_seed(1, "x") != derive_seed(1, "y"));
  CHECK(derive_seed(1, "x") == derive_seed(1, "x"));
}

TEST_CASE("a false non-existence claim is refuted with a witness") {
  TheoremRecord rec;
  rec.id = "x";
  rec.group = GroupId::G5;
  rec.dist = DistId::D;
  rec.claim = Claim::NotSoliton;
  PipelineCache cache;
  auto r = verify_theorem(rec, cache, {});
  CHECK(r.status == TheoremStatus::Refuted);
  REQUIRE(r.sampling.size() == 1);
  CHECK(r.sampling[0].witness_point);
  REQUIRE(r.sampling[0].witness);
  CHECK(r.sampling[0].witness->solvable);
}

TEST_CASE("a wrong family is reported with its residual") {
  auto rec = parse_theorems("theorem t1 G1 D plain soliton\n  family 1: mu = 0; mu1 = 0; mu2 = 0; mu3 = 0\nend\n");
  REQUIRE(rec.size() == 1);
  PipelineCache cache;
  auto r = verify_theorem(rec[0], cache, {});
  CHECK(r.status == TheoremStatus::Discrepancy);
  REQUIRE(r.families.size() == 1);
  CHECK_FALSE(r.families[0].confirmed);
  CHECK_FALSE(r.families[0].residual.empty());
}
