#include "bott/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

#include "bott/parse.hpp"

namespace bott {

std::string status_name(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::Match: return "match";
    case FixtureStatus::Discrepancy: return "discrepancy";
    case FixtureStatus::Mismatch: return "mismatch";
  }
  return "?";
}

std::string status_name(TheoremStatus s) {
  switch (s) {
    case TheoremStatus::Confirmed: return "confirmed";
    case TheoremStatus::Refuted: return "refuted";
    case TheoremStatus::Discrepancy: return "discrepancy";
  }
  return "?";
}

namespace {

using Key = std::vector<int>;  // 1-based

std::string key_str(const Key& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + std::to_string(k[i]);
  return s + ")";
}

bool symmetric_kind(FixtureKind k) {
  return k == FixtureKind::SymRicci || k == FixtureKind::LieDerivative || k == FixtureKind::PerturbedSymRicci ||
         k == FixtureKind::PerturbedLieDerivative;
}

Key canonical(FixtureKind kind, Key k) {
  if (symmetric_kind(kind) && k[0] > k[1]) std::swap(k[0], k[1]);
  return k;
}

// The keys a complete table of this kind lists.
std::vector<Key> universe(FixtureKind kind) {
  std::vector<Key> out;
  switch (kind) {
    case FixtureKind::Bracket:
      return {{1, 2}, {1, 3}, {2, 3}};
    case FixtureKind::Curvature:
    case FixtureKind::PerturbedCurvature:
      for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}})
        for (int p = 1; p <= 3; ++p) out.push_back({i, j, p});
      return out;
    default:
      break;
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = symmetric_kind(kind) ? i : 1; j <= 3; ++j) out.push_back({i, j});
  return out;
}

std::vector<Poly> lookup(FixtureKind kind, const Computed& c, const Key& k) {
  int i = k[0] - 1, j = k[1] - 1;
  switch (kind) {
    case FixtureKind::Bracket: return {c.spec.c[i][j].begin(), c.spec.c[i][j].end()};
    case FixtureKind::LeviCivita: return {c.lc.gamma[i][j].begin(), c.lc.gamma[i][j].end()};
    case FixtureKind::Bott:
    case FixtureKind::PerturbedConnection: return {c.conn.gamma[i][j].begin(), c.conn.gamma[i][j].end()};
    case FixtureKind::Curvature:
    case FixtureKind::PerturbedCurvature: {
      auto& v = c.curvature.r[i][j][k[2] - 1];
      return {v.begin(), v.end()};
    }
    case FixtureKind::Ricci: return {c.ricci.m[i][j]};
    case FixtureKind::SymRicci:
    case FixtureKind::PerturbedSymRicci: return {c.sym_ricci.m[i][j]};
    case FixtureKind::LieDerivative:
    case FixtureKind::PerturbedLieDerivative: return {c.lie.m[i][j]};
    case FixtureKind::System: break;
  }
  throw std::logic_error("no entries for this kind");
}

std::string values_str(const std::vector<Poly>& v) {
  if (v.size() == 3) return vec_str({v[0], v[1], v[2]});
  return v[0].str();
}

std::string printed_str(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " | " : "") + v[i];
  return s;
}

void compare_system(const Fixture& f, const Computed& c, std::optional<int> eta, const std::string& prefix,
                    std::vector<Disagreement>& out, std::vector<std::string>* notes) {
  const auto& computed = c.system.equations;
  std::vector<bool> hit(computed.size(), false);
  std::vector<Poly> seen;
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    std::string where = prefix + "equation " + std::to_string(r + 1);
    Poly e;
    try {
      e = parse_poly(f.rows[r].values[0], eta);
    } catch (const ParseError& err) {
      out.push_back({where, f.rows[r].values[0], std::string("unparsable: ") + err.what()});
      continue;
    }
    if (e.is_zero()) {
      out.push_back({where, f.rows[r].values[0], "printed equation is identically zero"});
      continue;
    }
    auto prev = std::find_if(seen.begin(), seen.end(), [&](const Poly& p) { return same_up_to_scale(p, e); });
    if (prev != seen.end()) {
      if (notes)
        notes->push_back(where + " repeats an earlier printed equation up to scale");
      continue;
    }
    seen.push_back(e);
    bool found = false;
    for (std::size_t k = 0; k < computed.size(); ++k)
      if (same_up_to_scale(computed[k], e)) {
        hit[k] = true;
        found = true;
      }
    if (!found) out.push_back({where, f.rows[r].values[0], "-"});
  }
  for (std::size_t k = 0; k < computed.size(); ++k)
    if (!hit[k]) out.push_back({prefix + "unprinted equation", "-", computed[k].str()});
}

void compare_constraints(const std::vector<std::string>& printed, const std::vector<Poly>& actual,
                         const std::string& what, std::optional<int> eta, const std::string& prefix,
                         std::vector<Disagreement>& out) {
  std::vector<bool> hit(actual.size(), false);
  for (auto& s : printed) {
    Poly p = parse_poly(s, eta);
    bool found = false;
    for (std::size_t k = 0; k < actual.size(); ++k)
      if (same_up_to_scale(actual[k], p)) hit[k] = found = true;
    if (!found) out.push_back({prefix + what, s, "-"});
  }
  for (std::size_t k = 0; k < actual.size(); ++k)
    if (!hit[k]) out.push_back({prefix + what, "-", actual[k].str()});
}

void compare_instance(const Fixture& f, PipelineCache& cache, const Instance& inst, const std::string& prefix,
                      std::vector<Disagreement>& out, std::vector<std::string>* notes) {
  const Computed& c = cache.get(inst);
  std::optional<int> eta = inst.eta;
  if (f.kind == FixtureKind::System) {
    compare_system(f, c, eta, prefix, out, notes);
    return;
  }
  std::set<Key> listed;
  for (auto& row : f.rows) {
    Key k = canonical(f.kind, row.key);
    std::string where = prefix + key_str(k);
    if (f.kind == FixtureKind::Bracket && k[0] == k[1]) {
      out.push_back({where, printed_str(row.values), "bracket of a vector with itself"});
      continue;
    }
    if (!listed.insert(k).second) {
      out.push_back({where, printed_str(row.values), "duplicate entry"});
      continue;
    }
    std::vector<Poly> expected;
    try {
      for (auto& v : row.values) expected.push_back(parse_poly(v, eta));
    } catch (const ParseError& err) {
      out.push_back({where, printed_str(row.values), std::string("unparsable: ") + err.what()});
      continue;
    }
    auto actual = lookup(f.kind, c, k);
    if (actual != expected) out.push_back({where, values_str(expected), values_str(actual)});
  }
  if (is_perturbed_delta(f.kind)) {
    Instance base_inst = inst;
    base_inst.perturbed = false;
    const Computed& base = cache.get(base_inst);
    for (auto& k : universe(f.kind)) {
      if (listed.count(k)) continue;
      auto now = lookup(f.kind, c, k), before = lookup(f.kind, base, k);
      if (now != before)
        out.push_back({prefix + key_str(k) + " unlisted but changed", values_str(before), values_str(now)});
    }
  } else {
    for (auto& k : universe(f.kind))
      if (!listed.count(k)) out.push_back({prefix + key_str(k) + " missing", "-", values_str(lookup(f.kind, c, k))});
  }
  if (f.kind == FixtureKind::Bracket) {
    try {
      compare_constraints(f.equal, c.spec.equal, "equality constraint", eta, prefix, out);
      compare_constraints(f.nonzero, c.spec.nonzero, "nonzero constraint", eta, prefix, out);
    } catch (const ParseError& err) {
      out.push_back({prefix + "constraints", "-", std::string("unparsable: ") + err.what()});
    }
  }
}

std::vector<Instance> instances(const Fixture& f) {
  std::vector<Instance> out;
  std::vector<GroupId> groups = f.group ? std::vector<GroupId>{*f.group}
                                        : std::vector<GroupId>(kAllGroups.begin(), kAllGroups.end());
  bool structural = f.kind == FixtureKind::Bracket || f.kind == FixtureKind::LeviCivita;
  for (GroupId g : groups)
    for (int eta : eta_values(g)) out.push_back({g, eta, structural ? std::nullopt : f.dist, f.perturbed});
  return out;
}

std::string context_str(const Fixture& f) {
  std::string s = f.group ? group_name(*f.group) : "all groups";
  if (f.dist) s += " " + dist_name(*f.dist);
  s += f.perturbed ? " perturbed" : "";
  return s;
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<Disagreement> compare_fixture(const Fixture& f, PipelineCache& cache, std::vector<std::string>* notes) {
  std::vector<Disagreement> out;
  auto insts = instances(f);
  for (auto& inst : insts) {
    std::string prefix;
    if (insts.size() > 1) {
      prefix = group_name(inst.group);
      if (inst.group == GroupId::G4) prefix += inst.eta > 0 ? " eta=+1" : " eta=-1";
      prefix += " ";
    }
    compare_instance(f, cache, inst, prefix, out, notes);
  }
  return out;
}

FixtureReport verify_fixture(const Fixture& f, const Erratum* erratum, PipelineCache& cache) {
  auto t0 = std::chrono::steady_clock::now();
  FixtureReport r;
  r.id = f.id;
  r.kind = f.kind;
  r.context = context_str(f);
  r.printed = compare_fixture(f, cache, &r.notes);
  if (erratum) r.erratum = erratum->note;
  if (r.printed.empty()) {
    r.status = erratum ? FixtureStatus::Mismatch : FixtureStatus::Match;
    if (erratum) r.remaining.push_back({"erratum", "a disagreement to correct", "none: the erratum is stale"});
  } else if (!erratum) {
    r.status = FixtureStatus::Mismatch;
    r.remaining = r.printed;
  } else {
    try {
      r.remaining = compare_fixture(apply_erratum(f, *erratum), cache);
    } catch (const ParseError& err) {
      r.remaining.push_back({"erratum", "applicable corrections", err.what()});
    }
    r.status = r.remaining.empty() ? FixtureStatus::Discrepancy : FixtureStatus::Mismatch;
  }
  r.seconds = since(t0);
  return r;
}

namespace {

void verify_negative(const TheoremRecord& rec, const SolitonSystem& sys, std::optional<int> eta,
                     const VerifyOptions& opt, TheoremReport& r) {
  SamplingReport s;
  s.eta = eta;
  Constraints cons = sys.constraints;
  if (sys.perturbed) cons.nonzero.push_back(Poly::var(Param::a0));
  std::string tag = rec.id + (eta ? (*eta > 0 ? " +" : " -") : "");
  SamplePlan plan = sample_plan(sys.params, cons, derive_seed(opt.seed, tag), opt.samples, opt.min_random);
  s.points = plan.points.size();
  s.grid = plan.grid;
  s.random = plan.random;
  for (auto& p : plan.points) {
    PointVerdict v = decide_at_point(sys, p, is_einstein(rec.claim));
    if (!v.solvable) {
      ++s.inconsistent;
    } else if (!s.witness) {
      s.witness_point = p;
      s.witness = v;
    }
  }
  if (s.inconsistent != s.points || s.points < opt.samples) r.status = TheoremStatus::Refuted;
  r.sampling.push_back(std::move(s));
}

void verify_positive(const TheoremRecord& rec, const SolitonSystem& sys, std::optional<int> eta,
                     const VerifyOptions& opt, TheoremReport& r) {
  bool einstein = is_einstein(rec.claim);
  for (auto& text : rec.families) {
    FamilyReport fr;
    fr.label = text.label;
    fr.eta = eta;
    try {
      SolutionFamily fam = build_family(text, eta);
      FamilyVerdict v = check_family(sys, fam, einstein);
      fr.verdict = v.kind;
      fr.branches = v.branches.size();
      if (v.kind == FamilyVerdict::Kind::Violated) {
        fr.equation = v.equation;
        fr.equation_text = sys.equations[v.equation].str();
        fr.residual = v.residual.str();
        fr.branch = v.branch;
      }
      if (v.kind == FamilyVerdict::Kind::Satisfied) {
        std::string tag = rec.id + " " + text.label + (eta ? (*eta > 0 ? " +" : " -") : "");
        fr.spot = spot_check(sys, v, derive_seed(opt.seed, tag), opt.spot_checks, einstein);
        fr.confirmed = !fr.spot.failure;
      }
    } catch (const std::exception& e) {
      fr.error = e.what();
    }
    if (!fr.error.empty() || fr.spot.failure)
      r.status = TheoremStatus::Refuted;
    else if (!fr.confirmed && r.status == TheoremStatus::Confirmed)
      r.status = TheoremStatus::Discrepancy;
    r.families.push_back(std::move(fr));
  }
}

}  // namespace

TheoremReport verify_theorem(const TheoremRecord& rec, PipelineCache& cache, const VerifyOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremReport r;
  r.id = rec.id;
  r.group = rec.group;
  r.dist = rec.dist;
  r.perturbed = rec.perturbed;
  r.claim = rec.claim;
  for (int eta : eta_values(rec.group)) {
    const Computed& c = cache.get({rec.group, eta, rec.dist, rec.perturbed});
    std::optional<int> e = rec.group == GroupId::G4 ? std::optional<int>(eta) : std::nullopt;
    if (is_negative(rec.claim))
      verify_negative(rec, c.system, e, opt, r);
    else
      verify_positive(rec, c.system, e, opt, r);
  }
  if (r.status == TheoremStatus::Discrepancy &&
      std::any_of(r.families.begin(), r.families.end(), [](const FamilyReport& f) { return !f.error.empty(); }))
    r.status = TheoremStatus::Refuted;
  r.seconds = since(t0);
  return r;
}

namespace {

template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

VerifyAllReport verify_all(const Registry& reg, const VerifyOptions& opt) {
  PipelineCache cache;
  VerifyAllReport out;
  out.fixtures.resize(reg.fixtures.size());
  out.theorems.resize(reg.theorems.size());
  parallel_for(reg.fixtures.size(), opt.jobs, [&](std::size_t i) {
    const Fixture& f = reg.fixtures[i];
    out.fixtures[i] = verify_fixture(f, reg.erratum(f.id), cache);
  });
  parallel_for(reg.theorems.size(), opt.jobs,
               [&](std::size_t i) { out.theorems[i] = verify_theorem(reg.theorems[i], cache, opt); });
  return out;
}

int exit_code(const std::vector<FixtureReport>& fixtures, const std::vector<TheoremReport>& theorems) {
  bool fail = false, disc = false;
  for (auto& f : fixtures) {
    fail = fail || f.status == FixtureStatus::Mismatch;
    disc = disc || f.status == FixtureStatus::Discrepancy;
  }
  for (auto& t : theorems) {
    fail = fail || t.status == TheoremStatus::Refuted;
    disc = disc || t.status == TheoremStatus::Discrepancy;
  }
  return fail ? 1 : disc ? 2 : 0;
}

}  // namespace bott
