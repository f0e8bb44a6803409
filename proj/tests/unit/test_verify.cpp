#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bott/data.hpp"
#include "bott/report.hpp"
#include "bott/verify.hpp"

using namespace bott;

namespace {

// Frozen: changing the registry must change this list too.
const char* const kFixtureIds =
    "2.9 2.10 2.11 2.12 2.13 2.14 2.15 2.16 2.17 2.18 2.19 2.20 2.21 2.22 2.23 2.24 2.25 2.26 2.28 2.29 "
    "2.30 2.31 2.32 2.33 2.34 2.35 2.37 2.38 2.39 2.40 2.41 2.42 3.1 3.2 3.3 3.4 3.5 3.6 3.7 3.8 3.9 "
    "3.10 3.11 3.12 3.13 3.14 3.15 3.16 3.17 3.18 3.19 3.20 3.21 3.22 3.23 3.24 4.2 4.4 4.6 4.7 4.8 4.9 "
    "4.10 4.11 4.12 4.13 4.14 4.15 4.16 4.17 4.18 4.19 4.20 4.21 4.22 4.23 4.24 4.25 4.26 5.2 5.3 5.4 "
    "5.5 5.6 5.7 5.8 5.9 5.10 5.11 5.12 5.13 5.14 5.15 5.16 5.17 5.18 5.19 5.20 5.21 5.22 5.23 5.24 5.25 "
    "5.26 5.27 5.28 5.29 5.30 5.31 5.32 5.33 5.34 5.35 5.36 5.37 5.38 5.39 5.40 5.41 5.42 5.43 6.2 6.4 "
    "6.6 6.7 6.8 6.9 6.10 6.11 6.12 6.13 6.14 6.15 6.16 6.17 6.18 6.19 6.20 6.21 6.22 6.23 6.24 6.25 "
    "6.26 7.2 7.3 7.4 7.5 7.6 7.7 7.8 7.9 7.10 7.11 7.12 7.13 7.14 7.15 7.16 7.17 7.18 7.19 7.21 7.22 "
    "7.23 7.24 7.25 7.26 7.27 7.28 7.29 7.30 7.31 7.32 7.33 7.34 7.35 7.36 7.37 7.38 7.39 7.40 7.41 7.42 "
    "7.43 7.44 8.2 8.4 8.6 8.7 8.8 8.9 8.10 8.11 8.12 8.13 8.14 8.15 8.16 8.17 8.18 8.19 8.20 8.21 8.22 "
    "8.23 8.24 8.25 8.26";

Fixture copy_of(const std::string& id) {
  auto* f = builtin_registry().fixture(id);
  REQUIRE(f);
  return *f;
}

FixtureRow& row_at(Fixture& f, std::vector<int> key) {
  auto it = std::find_if(f.rows.begin(), f.rows.end(), [&](auto& r) { return r.key == key; });
  REQUIRE(it != f.rows.end());
  return *it;
}

}  // namespace

TEST_CASE("registry covers exactly the frozen fixture ids") {
  std::set<std::string> frozen;
  std::istringstream in(kFixtureIds);
  for (std::string s; in >> s;) frozen.insert(s);
  std::set<std::string> actual;
  for (auto& f : builtin_registry().fixtures) actual.insert(f.id);
  CHECK(frozen.size() == 209);
  CHECK(actual == frozen);
  CHECK(builtin_registry().fixtures.size() == 209);
}

TEST_CASE("every erratum and theorem parses and resolves") {
  auto& reg = builtin_registry();
  for (auto& [id, e] : reg.errata) {
    auto* f = reg.fixture(id);
    REQUIRE(f);
    CHECK_NOTHROW(apply_erratum(*f, e));
  }
  CHECK(reg.theorems.size() > 50);
}

TEST_CASE("verify_fixture on clean tables") {
  PipelineCache cache;
  auto r = verify_fixture(copy_of("2.11"), nullptr, cache);
  CHECK(r.status == FixtureStatus::Match);
  auto z = verify_fixture(copy_of("3.4"), nullptr, cache);
  CHECK(z.status == FixtureStatus::Match);
}

TEST_CASE("a flipped sign is a mismatch at its entry") {
  auto f = copy_of("2.11");
  row_at(f, {3, 1}).values = {"-alpha", "beta", "0"};
  PipelineCache cache;
  auto r = verify_fixture(f, nullptr, cache);
  CHECK(r.status == FixtureStatus::Mismatch);
  REQUIRE(r.remaining.size() == 1);
  CHECK(r.remaining[0].where == "(3,1)");
  CHECK(r.remaining[0].expected == "-alpha*e_1 + beta*e_2");
  CHECK(r.remaining[0].computed == "alpha*e_1 + beta*e_2");
}

TEST_CASE("missing and extra entries are caught") {
  PipelineCache cache;
  auto f = copy_of("2.11");
  f.rows.pop_back();
  CHECK(verify_fixture(f, nullptr, cache).status == FixtureStatus::Mismatch);
  auto s = copy_of("3.8");
  s.rows.push_back({{}, {"mu1 + mu2"}, 0});
  CHECK(verify_fixture(s, nullptr, cache).status == FixtureStatus::Mismatch);
  auto t = copy_of("3.8");
  t.rows.pop_back();
  CHECK(verify_fixture(t, nullptr, cache).status == FixtureStatus::Mismatch);
}

TEST_CASE("systems compare up to scale and order") {
  PipelineCache cache;
  auto s = copy_of("3.8");
  std::reverse(s.rows.begin(), s.rows.end());
  s.rows[0].values[0] = "-3*(" + s.rows[0].values[0] + ")";
  CHECK(verify_fixture(s, nullptr, cache).status == FixtureStatus::Match);
}

TEST_CASE("errata turn a typo into a discrepancy, and a stale erratum into a mismatch") {
  auto& reg = builtin_registry();
  PipelineCache cache;
  auto* e = reg.erratum("2.20");
  REQUIRE(e);
  auto r = verify_fixture(*reg.fixture("2.20"), e, cache);
  CHECK(r.status == FixtureStatus::Discrepancy);
  CHECK_FALSE(r.printed.empty());
  CHECK(r.remaining.empty());

  auto clean = verify_fixture(copy_of("2.11"), e, cache);
  CHECK(clean.status == FixtureStatus::Mismatch);
}

TEST_CASE("all fixtures are matched or explained by an erratum") {
  auto& reg = builtin_registry();
  PipelineCache cache;
  for (auto& f : reg.fixtures) {
    CAPTURE(f.id);
    auto r = verify_fixture(f, reg.erratum(f.id), cache);
    CHECK(r.status != FixtureStatus::Mismatch);
    CHECK((r.status == FixtureStatus::Discrepancy) == (reg.erratum(f.id) != nullptr));
  }
}

TEST_CASE("verification is deterministic and independent of thread count") {
  auto& reg = builtin_registry();
  VerifyOptions one;
  one.jobs = 1;
  VerifyOptions many = one;
  many.jobs = 4;
  auto a = verify_all(reg, one);
  auto b = verify_all(reg, many);
  CHECK(report_json(a.fixtures, a.theorems, {}) == report_json(b.fixtures, b.theorems, {}));
  CHECK(summary_text(a.fixtures, a.theorems) == summary_text(b.fixtures, b.theorems));
  CHECK(exit_code(a.fixtures, a.theorems) == 2);
}

TEST_CASE("exit codes") {
  CHECK(exit_code({}, {}) == 0);
  FixtureReport d;
  d.status = FixtureStatus::Discrepancy;
  FixtureReport m;
  m.status = FixtureStatus::Mismatch;
  CHECK(exit_code({d}, {}) == 2);
  CHECK(exit_code({d, m}, {}) == 1);
  TheoremReport t;
  t.status = TheoremStatus::Refuted;
  CHECK(exit_code({d}, {t}) == 1);
}
