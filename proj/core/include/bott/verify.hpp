#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bott/data.hpp"
#include "bott/pipeline.hpp"

namespace bott {

struct Disagreement {
  std::string where;
  std::string expected;  // as printed, or "-" when the table has no entry
  std::string computed;  // "-" when the pipeline produces nothing there
};

enum class FixtureStatus { Match, Discrepancy, Mismatch };
std::string status_name(FixtureStatus s);

struct FixtureReport {
  std::string id;
  FixtureKind kind = FixtureKind::Bott;
  std::string context;
  FixtureStatus status = FixtureStatus::Match;
  std::vector<Disagreement> printed;    // against the table as printed
  std::vector<Disagreement> remaining;  // what is left unexplained; empty unless Mismatch
  std::optional<std::string> erratum;   // the erratum note, when one is on file
  std::vector<std::string> notes;
  double seconds = 0;
};

// Every disagreement between a table and the pipeline. Tables of the plain
// kinds must be complete; perturbed tables list changed entries and every
// unlisted entry must equal the unperturbed one. Systems compare as sets of
// equations up to nonzero rational scale.
std::vector<Disagreement> compare_fixture(const Fixture& f, PipelineCache& cache,
                                          std::vector<std::string>* notes = nullptr);

// Match when the printed table agrees; Discrepancy when it disagrees and the
// erratum on file accounts for every disagreement; Mismatch otherwise,
// including an erratum that no longer applies.
FixtureReport verify_fixture(const Fixture& f, const Erratum* erratum, PipelineCache& cache);

struct VerifyOptions {
  std::size_t samples = 100;     // minimum points per negative claim
  std::size_t min_random = 50;   // random points on top of the grid
  std::size_t spot_checks = 25;  // random instances per family branch
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
};

struct FamilyReport {
  std::string label;
  std::optional<int> eta;
  bool confirmed = false;
  FamilyVerdict::Kind verdict = FamilyVerdict::Kind::Satisfied;
  std::size_t branches = 0;
  std::optional<std::size_t> equation;  // 0-based, when Violated
  std::string equation_text;
  std::string residual;
  std::string branch;
  SpotCheck spot;
  std::string error;
};

struct SamplingReport {
  std::optional<int> eta;
  std::size_t points = 0;
  std::size_t grid = 0;
  std::size_t random = 0;
  std::size_t inconsistent = 0;
  std::optional<Point> witness_point;
  std::optional<PointVerdict> witness;
};

enum class TheoremStatus { Confirmed, Refuted, Discrepancy };
std::string status_name(TheoremStatus s);

struct TheoremReport {
  std::string id;
  GroupId group = GroupId::G1;
  DistId dist = DistId::D;
  bool perturbed = false;
  Claim claim = Claim::Soliton;
  TheoremStatus status = TheoremStatus::Confirmed;
  std::vector<FamilyReport> families;
  std::vector<SamplingReport> sampling;
  double seconds = 0;
};

// Positive claims: every family passes check_family and its spot checks.
// Negative claims: decide_at_point is Inconsistent at every planned point.
TheoremReport verify_theorem(const TheoremRecord& rec, PipelineCache& cache, const VerifyOptions& opt);

struct VerifyAllReport {
  std::vector<FixtureReport> fixtures;
  std::vector<TheoremReport> theorems;
};

VerifyAllReport verify_all(const Registry& reg, const VerifyOptions& opt);

// 0 all pass, 1 mismatch or refutation, 2 discrepancies only.
int exit_code(const std::vector<FixtureReport>& fixtures, const std::vector<TheoremReport>& theorems);

}  // namespace bott
