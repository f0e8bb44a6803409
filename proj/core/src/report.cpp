#include "bott/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace bott {

using nlohmann::ordered_json;

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

ordered_json vec_json(const Vec3& v) { return ordered_json::array({v[0].str(), v[1].str(), v[2].str()}); }

ordered_json point_json(const Point& p) {
  ordered_json j = ordered_json::object();
  for (auto& [q, v] : p) j[std::string(name(q))] = v.get_str();
  return j;
}

std::string seconds_str(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s << "s";
  return o.str();
}

std::string eta_tag(const std::optional<int>& eta) {
  if (!eta) return "";
  return *eta > 0 ? " [eta=+1]" : " [eta=-1]";
}

}  // namespace

std::string connection_text(const Connection& conn) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += "∇_{e_" + idx(i) + "} e_" + idx(j) + " = " + vec_str(conn.gamma[i][j]) + "\n";
  return s;
}

std::string curvature_text(const CurvatureTensor& curv) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        s += "R(e_" + idx(i) + ",e_" + idx(j) + ")e_" + idx(p) + " = " + vec_str(curv.r[i][j][p]) + "\n";
  return s;
}

std::string form_text(const BilinearForm& f) {
  std::string s;
  for (int i = 0; i < 3; ++i)
    s += "[" + f.m[i][0].str() + ", " + f.m[i][1].str() + ", " + f.m[i][2].str() + "]\n";
  return s;
}

std::string system_text(const SolitonSystem& sys) {
  std::string s;
  for (auto& e : sys.equations) s += e.str() + " = 0\n";
  return s;
}

std::string connection_json(const Connection& conn) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows.push_back({{"i", i + 1}, {"j", j + 1}, {"value", vec_json(conn.gamma[i][j])}});
  return ordered_json{{"connection", connection_name(conn)}, {"entries", rows}}.dump(2);
}

std::string curvature_json(const CurvatureTensor& curv) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        rows.push_back({{"i", i + 1}, {"j", j + 1}, {"p", p + 1}, {"value", vec_json(curv.r[i][j][p])}});
  return ordered_json{{"curvature", rows}}.dump(2);
}

namespace {
ordered_json form_j(const BilinearForm& f) {
  ordered_json m = ordered_json::array();
  for (int i = 0; i < 3; ++i) m.push_back({f.m[i][0].str(), f.m[i][1].str(), f.m[i][2].str()});
  return m;
}
}  // namespace

std::string form_json(const BilinearForm& f) { return form_j(f).dump(2); }

std::string system_json(const SolitonSystem& sys) {
  ordered_json eqs = ordered_json::array();
  for (auto& e : sys.equations) eqs.push_back(e.str());
  ordered_json unknowns = ordered_json::array();
  for (Param u : kUnknowns) unknowns.push_back(std::string(name(u)));
  ordered_json equal = ordered_json::array(), nonzero = ordered_json::array();
  for (auto& e : sys.constraints.equal) equal.push_back(e.str());
  for (auto& e : sys.constraints.nonzero) nonzero.push_back(e.str());
  if (sys.perturbed) nonzero.push_back("a0");
  return ordered_json{{"system", sys.label},
                      {"unknowns", unknowns},
                      {"equations", eqs},
                      {"constraints", {{"equal", equal}, {"nonzero", nonzero}}}}
      .dump(2);
}

std::string fixture_text(const FixtureReport& r, bool timing) {
  std::string s = "fixture " + r.id + " " + kind_name(r.kind) + " " + r.context + ": " + status_name(r.status);
  if (timing) s += " (" + seconds_str(r.seconds) + ")";
  s += "\n";
  for (auto& d : r.printed) s += "  " + d.where + ": printed " + d.expected + ", computed " + d.computed + "\n";
  if (r.erratum) s += "  erratum: " + *r.erratum + "\n";
  if (r.status == FixtureStatus::Mismatch && r.erratum)
    for (auto& d : r.remaining)
      s += "  unexplained " + d.where + ": expected " + d.expected + ", computed " + d.computed + "\n";
  for (auto& n : r.notes) s += "  note: " + n + "\n";
  return s;
}

std::string theorem_text(const TheoremReport& r, bool timing) {
  std::string s = "theorem " + r.id + " " + group_name(r.group) + " " + dist_name(r.dist) +
                  (r.perturbed ? " perturbed " : " ") + claim_name(r.claim) + ": " + status_name(r.status);
  if (timing) s += " (" + seconds_str(r.seconds) + ")";
  s += "\n";
  for (auto& f : r.families) {
    s += "  family " + f.label + eta_tag(f.eta) + ": ";
    if (!f.error.empty()) {
      s += "error: " + f.error + "\n";
      continue;
    }
    switch (f.verdict) {
      case FamilyVerdict::Kind::Satisfied:
        s += "satisfied, " + std::to_string(f.branches) + " case(s), " + std::to_string(f.spot.checked) + "/" +
             std::to_string(f.spot.requested) + " spot checks";
        if (f.spot.skipped_branches) s += ", " + std::to_string(f.spot.skipped_branches) + " implicit case(s) not sampled";
        if (f.spot.failure) s += "; FAILED at " + point_str(*f.spot.failure) + ": " + f.spot.failure_reason;
        break;
      case FamilyVerdict::Kind::Violated:
        s += "violated in case {" + f.branch + "}: equation " + f.equation_text + " = 0 leaves residual " +
             f.residual;
        break;
      case FamilyVerdict::Kind::Inconsistent: s += "inconsistent: every case contradicts a side condition"; break;
    }
    s += "\n";
  }
  for (auto& p : r.sampling) {
    s += "  sampled" + eta_tag(p.eta) + ": inconsistent at " + std::to_string(p.inconsistent) + "/" +
         std::to_string(p.points) + " points (" + std::to_string(p.grid) + " grid, " + std::to_string(p.random) +
         " random)\n";
    if (p.witness) {
      s += "  solvable at " + point_str(*p.witness_point) + " with " + point_str(p.witness->witness) +
           ", solution dimension " + std::to_string(p.witness->dimension) + "\n";
    }
  }
  return s;
}

std::string summary_text(const std::vector<FixtureReport>& fixtures, const std::vector<TheoremReport>& theorems) {
  std::size_t fm = 0, fd = 0, fx = 0, tc = 0, td = 0, tr = 0;
  for (auto& f : fixtures)
    (f.status == FixtureStatus::Match ? fm : f.status == FixtureStatus::Discrepancy ? fd : fx)++;
  for (auto& t : theorems)
    (t.status == TheoremStatus::Confirmed ? tc : t.status == TheoremStatus::Discrepancy ? td : tr)++;
  std::string s;
  if (!fixtures.empty())
    s += "fixtures: " + std::to_string(fixtures.size()) + " (" + std::to_string(fm) + " match, " +
         std::to_string(fd) + " discrepancy, " + std::to_string(fx) + " mismatch)\n";
  if (!theorems.empty())
    s += "theorems: " + std::to_string(theorems.size()) + " (" + std::to_string(tc) + " confirmed, " +
         std::to_string(td) + " discrepancy, " + std::to_string(tr) + " refuted)\n";
  return s;
}

std::string report_json(const std::vector<FixtureReport>& fixtures, const std::vector<TheoremReport>& theorems,
                        const ReportOptions& opt) {
  ordered_json fx = ordered_json::array();
  for (auto& r : fixtures) {
    auto dis = [](const std::vector<Disagreement>& v) {
      ordered_json a = ordered_json::array();
      for (auto& d : v) a.push_back({{"where", d.where}, {"expected", d.expected}, {"computed", d.computed}});
      return a;
    };
    ordered_json j = {{"id", r.id},
                      {"kind", kind_name(r.kind)},
                      {"context", r.context},
                      {"status", status_name(r.status)},
                      {"disagreements", dis(r.printed)},
                      {"unexplained", dis(r.remaining)},
                      {"erratum", r.erratum ? ordered_json(*r.erratum) : ordered_json(nullptr)},
                      {"notes", r.notes}};
    if (opt.timing) j["seconds"] = r.seconds;
    fx.push_back(std::move(j));
  }
  ordered_json th = ordered_json::array();
  for (auto& r : theorems) {
    ordered_json fams = ordered_json::array();
    for (auto& f : r.families) {
      ordered_json j = {{"label", f.label},
                        {"eta", f.eta ? ordered_json(*f.eta) : ordered_json(nullptr)},
                        {"confirmed", f.confirmed}};
      if (!f.error.empty()) {
        j["error"] = f.error;
      } else {
        const char* verdict = f.verdict == FamilyVerdict::Kind::Satisfied  ? "satisfied"
                              : f.verdict == FamilyVerdict::Kind::Violated ? "violated"
                                                                           : "inconsistent";
        j["verdict"] = verdict;
        j["cases"] = f.branches;
        if (f.equation) {
          j["equation_index"] = *f.equation;
          j["equation"] = f.equation_text;
          j["residual"] = f.residual;
          j["case"] = f.branch;
        }
        j["spot_checks"] = {{"requested", f.spot.requested},
                            {"checked", f.spot.checked},
                            {"implicit_cases_skipped", f.spot.skipped_branches},
                            {"failure", f.spot.failure ? point_json(*f.spot.failure) : ordered_json(nullptr)}};
      }
      fams.push_back(std::move(j));
    }
    ordered_json samp = ordered_json::array();
    for (auto& p : r.sampling) {
      ordered_json j = {{"eta", p.eta ? ordered_json(*p.eta) : ordered_json(nullptr)},
                        {"points", p.points},
                        {"grid", p.grid},
                        {"random", p.random},
                        {"inconsistent", p.inconsistent}};
      if (p.witness)
        j["witness"] = {{"point", point_json(*p.witness_point)},
                        {"solution", point_json(p.witness->witness)},
                        {"dimension", p.witness->dimension}};
      samp.push_back(std::move(j));
    }
    ordered_json j = {{"id", r.id},
                      {"group", group_name(r.group)},
                      {"distribution", dist_name(r.dist)},
                      {"perturbed", r.perturbed},
                      {"claim", claim_name(r.claim)},
                      {"status", status_name(r.status)},
                      {"families", fams},
                      {"sampling", samp}};
    if (opt.timing) j["seconds"] = r.seconds;
    th.push_back(std::move(j));
  }
  std::size_t counts[6] = {};
  for (auto& f : fixtures) counts[static_cast<int>(f.status)]++;
  for (auto& t : theorems) counts[3 + static_cast<int>(t.status)]++;
  ordered_json summary = {
      {"seed", opt.seed},
      {"fixtures", {{"total", fixtures.size()}, {"match", counts[0]}, {"discrepancy", counts[1]}, {"mismatch", counts[2]}}},
      {"theorems",
       {{"total", theorems.size()}, {"confirmed", counts[3]}, {"refuted", counts[4]}, {"discrepancy", counts[5]}}},
      {"exit_code", exit_code(fixtures, theorems)}};
  return ordered_json{{"fixtures", fx}, {"theorems", th}, {"summary", summary}}.dump(2) + "\n";
}

}  // namespace bott
