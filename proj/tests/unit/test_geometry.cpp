#include <doctest.h>

#include "bott/pipeline.hpp"

using namespace bott;

namespace {

std::vector<LieAlgebraSpec> catalog_specs() {
  std::vector<LieAlgebraSpec> out;
  for (auto g : kAllGroups)
    for (int eta : eta_values(g)) out.push_back(catalog(g, eta));
  return out;
}

Vec3 component(const Vec3& v, int k) {
  Vec3 r = zero_vec();
  r[k] = v[k];
  return r;
}

}  // namespace

TEST_CASE("catalog algebras satisfy Jacobi symbolically") {
  for (auto& s : catalog_specs()) {
    CAPTURE(s.label);
    CHECK(is_antisymmetric(s.c));
    CHECK(jacobi_holds(s));
  }
}

TEST_CASE("Jacobi defect of small custom brackets") {
  // [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e3 looks arbitrary but is a Lie algebra
  auto lie = parse_custom_algebra("1 2: 1 | 0 | 0\n1 3: 0 | 1 | 0\n2 3: 0 | 0 | 1\n");
  CHECK(jacobi_holds(lie));
  // [e1,e2]=e3, [e2,e3]=e2: J(e1,e2,e3) = [e3,e3] + [e2,e1] + [0,e2] = -e3
  auto broken = parse_custom_algebra("label: broken\n1 2: 0 | 0 | 1\n2 3: 0 | 1 | 0\n");
  auto def = jacobi_defect(broken);
  CHECK(def[0][1][2] == zero_vec() - basis(2));
  CHECK_FALSE(jacobi_holds(broken));
  CHECK_FALSE(jacobi_holds_sampled(broken, kDefaultSeed, 10));
}

TEST_CASE("custom algebra input") {
  auto spec = parse_custom_algebra(
      "# heisenberg\nlabel: H\n1 2: 0 | 0 | alpha  # [e1,e2] = alpha e3\nnonzero: alpha\n");
  CHECK(spec.label == "H");
  CHECK(spec.c[0][1][2] == Poly::var(Param::alpha));
  CHECK(spec.c[1][0][2] == -Poly::var(Param::alpha));
  CHECK(jacobi_holds(spec));
  CHECK_THROWS(parse_custom_algebra("1 2: mu1 | 0 | 0\n"));
  CHECK_THROWS(parse_custom_algebra("1 1: 1 | 0 | 0\n"));
}

TEST_CASE("Levi-Civita connections are torsion-free and metric") {
  for (auto& s : catalog_specs()) {
    CAPTURE(s.label);
    auto lc = levi_civita(s);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec3 t = lc.gamma[i][j] - lc.gamma[j][i] - bracket(s, basis(i), basis(j));
        CHECK(is_zero(t));
        for (int k = 0; k < 3; ++k)
          CHECK((metric_pair(lc.gamma[i][j], basis(k)) + metric_pair(basis(j), lc.gamma[i][k])).is_zero());
      }
  }
}

TEST_CASE("Bott connections follow the casewise projection") {
  for (auto& s : catalog_specs())
    for (auto d : kAllDistributions) {
      CAPTURE(s.label);
      auto dist = distribution(d);
      auto lc = levi_civita(s);
      auto b = bott::bott(s, lc, dist);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          bool pi = dist.in_plane(i), pj = dist.in_plane(j);
          Vec3 src = pi != pj ? bracket(s, basis(i), basis(j)) : lc.gamma[i][j];
          Vec3 want = zero_vec();
          if (pj) {
            want = component(src, dist.plane[0]) + component(src, dist.plane[1]);
          } else {
            want = component(src, dist.normal);
          }
          CHECK(b.gamma[i][j] == want);
        }
    }
}

TEST_CASE("the perturbation changes only the normal-normal entry") {
  auto s = catalog(GroupId::G6);
  for (auto d : kAllDistributions) {
    auto dist = distribution(d);
    auto b = bott::bott(s, levi_civita(s), dist);
    auto p = perturb(b);
    CHECK(p.kind == ConnectionKind::PerturbedBott);
    int n = dist.normal;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Vec3 diff = p.gamma[i][j] - b.gamma[i][j];
        if (i == n && j == n) {
          CHECK(diff == Poly::var(Param::a0) * basis(n));
        } else {
          CHECK(is_zero(diff));
        }
      }
  }
  CHECK_THROWS_AS(perturb(levi_civita(s)), KindMismatch);
}

TEST_CASE("curvature is antisymmetric in its first pair for all 42 connections") {
  for (auto& s : catalog_specs())
    for (auto d : kAllDistributions)
      for (bool pert : {false, true}) {
        auto c = compute(s, d, pert);
        CAPTURE(c.system.label);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int p = 0; p < 3; ++p) CHECK(c.curvature.r[i][j][p] == zero_vec() - c.curvature.r[j][i][p]);
        CHECK(c.sym_ricci.is_symmetric());
        CHECK(c.lie.is_symmetric());
        CHECK(is_affine_in_unknowns(c.system));
      }
}

TEST_CASE("Levi-Civita Ricci is symmetric") {
  for (auto& s : catalog_specs()) {
    auto c = compute(s, std::nullopt, false);
    CHECK(c.ricci.is_symmetric());
  }
}

TEST_CASE("Bott table of G1 on D") {
  auto c = compute(catalog(GroupId::G1), DistId::D, false);
  Poly a = Poly::var(Param::alpha), b = Poly::var(Param::beta);
  CHECK(c.conn.gamma[2][0] == a * basis(0) + b * basis(1));
  CHECK(c.conn.gamma[0][0] == (-a) * basis(1));
  CHECK(is_zero(c.conn.gamma[1][1]));
}

TEST_CASE("abelian algebra gives a single equation") {
  auto spec = parse_custom_algebra("label: abelian\n");
  for (auto d : kAllDistributions) {
    auto c = compute(spec, d, false);
    REQUIRE(c.system.equations.size() == 1);
    CHECK(c.system.equations[0] == Poly::var(Param::mu));
  }
}
