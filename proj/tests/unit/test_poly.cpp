#include <doctest.h>

#include "bott/parse.hpp"
#include "bott/ratfun.hpp"
#include "bott/sampling.hpp"

using namespace bott;

namespace {

Poly random_poly(Rng& rng) {
  constexpr Param vars[] = {Param::alpha, Param::beta, Param::gamma, Param::mu1};
  Poly p;
  std::size_t terms = rng.below(4);
  for (std::size_t t = 0; t <= terms; ++t) {
    Exponents e{};
    for (Param v : vars) e[index(v)] = static_cast<std::uint8_t>(rng.below(3));
    p += Poly::monomial(e, rng.rational());
  }
  return p;
}

Point random_point(Rng& rng) {
  Point pt;
  for (Param p : kAllParams) pt[p] = rng.nonzero_rational();
  return pt;
}

const Poly a = Poly::var(Param::alpha);
const Poly b = Poly::var(Param::beta);
const Poly g = Poly::var(Param::gamma);

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(derive_seed(kDefaultSeed, "ring"));
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Poly());
    CHECK(p * Poly(1) == p);
    CHECK((p * Poly()).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(derive_seed(kDefaultSeed, "eval"));
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng), q = random_poly(rng);
    Point pt = random_point(rng);
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
  }
}

TEST_CASE("substitution composes with evaluation") {
  Rng rng(derive_seed(kDefaultSeed, "subst"));
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng);
    Poly q = random_poly(rng);
    Poly d = random_poly(rng);
    Point pt = random_point(rng);
    if (d.eval(pt) == 0 || d.is_zero()) continue;
    RatFun v(q, d);
    RatFun s = substitute(p, {{Param::alpha, v}});
    Point inner = pt;
    inner[Param::alpha] = v.eval(pt);
    CHECK(s.eval(pt) == p.eval(inner));
  }
}

TEST_CASE("canonical printing") {
  CHECK((a * b).scaled(mpq_class(1, 2)).str() == "alpha*beta/2");
  CHECK(a.scaled(mpq_class(3, 2)).str() == "3*alpha/2");
  CHECK((-b).scaled(mpq_class(1, 2)).str() == "-beta/2");
  CHECK((a * a + b * b - Poly::var(Param::mu)).str() == "alpha^2 + beta^2 - mu");
  CHECK(Poly().str() == "0");
}

TEST_CASE("content, primitive part and exact division") {
  Poly p = (a * b).scaled(4) - b.scaled(6);
  CHECK(p.content() == 2);
  CHECK(p.primitive() == (a * b).scaled(2) - b.scaled(3));
  CHECK((-p).primitive() == -p.primitive());
  auto q = ((a + b) * (a - g)).divide_exact(a - g);
  REQUIRE(q);
  CHECK(*q == a + b);
  CHECK_FALSE((a * a + b).divide_exact(a + Poly(1)));
  Exponents m = (a * a * b + a * b * g).monomial_gcd();
  CHECK(m[index(Param::alpha)] == 1);
  CHECK(m[index(Param::beta)] == 1);
  CHECK(m[index(Param::gamma)] == 0);
}

TEST_CASE("pseudo-remainder by a constraint") {
  Poly h = a * a - b;
  CHECK((a * a * a - a * b).pseudo_remainder(h, Param::alpha).is_zero());
  CHECK(!(a * a * a).pseudo_remainder(h, Param::alpha).is_zero());
}

TEST_CASE("rational functions normalize") {
  RatFun r((a * a - b * b), (a - b));
  CHECK(r.is_poly());
  CHECK(r.as_poly() == a + b);
  RatFun s(b.scaled(2), a.scaled(4));
  CHECK(s.den() == a);
  CHECK(s.num() == b.scaled(mpq_class(1, 2)));
  CHECK(RatFun(Poly(1), a) + RatFun(Poly(-1), a) == RatFun(0));
  CHECK_THROWS_AS(RatFun(Poly(1), a).eval({{Param::alpha, 0}}), DenominatorZero);
  CHECK_THROWS_AS(a.eval({}), UnboundParam);
}

TEST_CASE("parser") {
  CHECK(parse_poly("alpha*beta/2") == (a * b).scaled(mpq_class(1, 2)));
  CHECK(parse_poly("-(alpha^2 + beta^2)") == -(a * a + b * b));
  CHECK(parse_poly("2*eta - beta", 1) == Poly(2) - b);
  CHECK(parse_poly("2*eta - beta", -1) == Poly(-2) - b);
  CHECK(parse_poly("mu1 - 3*mu2 + mu3") ==
        Poly::var(Param::mu1) - Poly::var(Param::mu2).scaled(3) + Poly::var(Param::mu3));
  CHECK(parse_ratfun("(mu - beta^2)/alpha") == RatFun(Poly::var(Param::mu) - b * b, a));
  CHECK(mentions_eta("beta - eta"));
  CHECK_FALSE(mentions_eta("beta - delta"));
  CHECK_THROWS_AS(parse_poly("2*eta"), ParseError);
  CHECK_THROWS_AS(parse_poly("alpha +"), ParseError);
  CHECK_THROWS_AS(parse_poly("omega"), ParseError);
  CHECK_THROWS_AS(parse_poly("1/alpha"), ParseError);
  CHECK_THROWS_AS(parse_ratfun("alpha/0"), ParseError);
}
