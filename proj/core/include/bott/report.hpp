#pragma once

#include <string>

#include "bott/verify.hpp"

namespace bott {

// Nine rows "∇_{e_i} e_j = <vector>".
std::string connection_text(const Connection& conn);
// Twenty-seven rows "R(e_i,e_j)e_p = <vector>".
std::string curvature_text(const CurvatureTensor& curv);
// Three rows "[a, b, c]".
std::string form_text(const BilinearForm& f);
std::string system_text(const SolitonSystem& sys);

std::string connection_json(const Connection& conn);
std::string curvature_json(const CurvatureTensor& curv);
std::string form_json(const BilinearForm& f);
std::string system_json(const SolitonSystem& sys);

struct ReportOptions {
  bool timing = false;  // off by default so identical runs print identical bytes
  std::uint64_t seed = kDefaultSeed;
};

std::string fixture_text(const FixtureReport& r, bool timing = false);
std::string theorem_text(const TheoremReport& r, bool timing = false);
std::string summary_text(const std::vector<FixtureReport>& fixtures, const std::vector<TheoremReport>& theorems);

// One document with "fixtures", "theorems" and "summary".
std::string report_json(const std::vector<FixtureReport>& fixtures, const std::vector<TheoremReport>& theorems,
                        const ReportOptions& opt);

}  // namespace bott
