#include "bott/soliton.hpp"

#include <algorithm>
#include <set>

namespace bott {

Vec3 soliton_field() { return {Poly::var(Param::mu1), Poly::var(Param::mu2), Poly::var(Param::mu3)}; }

BilinearForm lie_derivative_form(const Connection& conn, const Vec3& v) {
  std::array<Vec3, 3> dv;
  for (int i = 0; i < 3; ++i) dv[i] = apply(conn, basis(i), v);
  BilinearForm f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) f.m[i][j] = metric_pair(dv[i], basis(j)) + metric_pair(basis(i), dv[j]);
  return f;
}

bool same_up_to_scale(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  return a == b.scaled(a.leading().coeff / b.leading().coeff);
}

SolitonSystem build_system(const LieAlgebraSpec& spec, const Connection& conn) {
  BilinearForm rho = symmetrize(ricci(riemann(spec, conn)));
  BilinearForm lie = lie_derivative_form(conn, soliton_field());
  BilinearForm g = metric_form();
  Poly mu = Poly::var(Param::mu);
  SolitonSystem sys;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Poly e = lie.m[i][j] + rho.m[i][j].scaled(2) + (g.m[i][j] * mu).scaled(2);
      if (e.is_zero()) continue;
      e = e.primitive();
      bool dup = std::any_of(sys.equations.begin(), sys.equations.end(),
                             [&](const Poly& x) { return same_up_to_scale(x, e); });
      if (!dup) sys.equations.push_back(std::move(e));
    }
  sys.label = spec.label + " " + connection_name(conn);
  sys.constraints = spec.constraints();
  sys.params = spec.params;
  sys.perturbed = conn.kind == ConnectionKind::PerturbedBott;
  if (sys.perturbed) sys.params.push_back(Param::a0);
  sys.eta = spec.eta;
  return sys;
}

bool is_affine_in_unknowns(const SolitonSystem& sys) {
  for (auto& e : sys.equations)
    for (auto& t : e.terms()) {
      int d = 0;
      for (Param u : kUnknowns) d += t.exp[index(u)];
      if (d > 1) return false;
    }
  return true;
}

namespace {

bool mentions_bound(const RatFun& v, const Bindings& b) {
  return std::any_of(b.begin(), b.end(), [&](const auto& kv) { return v.depends_on(kv.first); });
}

Bindings close_bindings(Bindings b) {
  for (int round = 0; round <= static_cast<int>(kParamCount); ++round) {
    bool changed = false;
    Bindings next = b;
    for (auto& [p, v] : next)
      if (mentions_bound(v, b)) {
        v = substitute(v, b);
        changed = true;
      }
    if (!changed) return b;
    b = std::move(next);
  }
  throw FamilyError("family bindings refer to each other cyclically");
}

void bind_param(Bindings& b, Param x, const RatFun& v) {
  Bindings one{{x, v}};
  for (auto& [p, val] : b)
    if (val.depends_on(x)) val = substitute(val, one);
  b[x] = v;
}

struct Work {
  Bindings b;
  std::vector<Poly> pending;
  std::vector<Poly> nonzero;
  std::vector<Poly> implicit;
  std::string desc;
};

void resolve(Work w, std::vector<FamilyBranch>& out) {
  while (!w.pending.empty()) {
    Poly r = substitute(w.pending.front(), w.b).num();
    w.pending.erase(w.pending.begin());
    if (r.is_zero()) continue;
    if (r.is_constant()) return;
    r = r.primitive();
    Exponents m = r.monomial_gcd();
    if (total_degree(m) > 0) {
      // p1^k1 * ... * rest = 0 splits into one case per factor.
      Poly rest = r.divide_monomial(m);
      for (Param p : kAllParams) {
        if (!m[index(p)]) continue;
        Work v = w;
        bind_param(v.b, p, RatFun(0));
        v.desc += (v.desc.empty() ? "" : ", ") + std::string(name(p)) + " = 0";
        resolve(std::move(v), out);
      }
      if (!rest.is_constant()) {
        Work v = w;
        v.pending.insert(v.pending.begin(), rest);
        v.desc += (v.desc.empty() ? "" : ", ") + rest.str() + " = 0";
        resolve(std::move(v), out);
      }
      return;
    }
    std::optional<Param> x;
    for (Param p : kAllParams)
      if (r.degree(p) == 1) {
        x = p;
        break;
      }
    if (!x) {
      w.implicit.push_back(r);
      continue;
    }
    auto cs = r.coefficients_in(*x);
    if (!cs[1].is_constant()) w.nonzero.push_back(cs[1]);
    bind_param(w.b, *x, RatFun(-cs[0], cs[1]));
  }
  for (auto& nz : w.nonzero)
    if (substitute(nz, w.b).is_zero()) return;
  std::vector<Poly> implicit;
  for (auto& h : w.implicit) {
    Poly r = substitute(h, w.b).num();
    if (r.is_zero()) continue;
    if (r.is_constant()) return;
    implicit.push_back(r.primitive());
  }
  FamilyBranch br;
  br.bindings = std::move(w.b);
  br.nonzero = std::move(w.nonzero);
  br.implicit = std::move(implicit);
  br.description = w.desc.empty() ? "single case" : w.desc;
  out.push_back(std::move(br));
}

Poly reduce_by(Poly r, const std::vector<Poly>& implicit) {
  for (auto& h : implicit) {
    if (r.is_zero()) break;
    std::optional<Param> x;
    int best = 0;
    for (Param p : kAllParams) {
      int d = h.degree(p);
      if (d > 0 && (!x || d < best)) {
        x = p;
        best = d;
      }
    }
    if (x) r = r.pseudo_remainder(h, *x);
  }
  return r;
}

}  // namespace

FamilyVerdict check_family(const SolitonSystem& sys, const SolutionFamily& fam, bool einstein) {
  for (auto& [p, v] : fam.bindings)
    if (v.depends_on(p)) throw FamilyError("binding of " + std::string(name(p)) + " refers to itself");
  Work w;
  w.b = close_bindings(fam.bindings);
  if (einstein)
    for (Param u : {Param::mu1, Param::mu2, Param::mu3}) w.pending.push_back(Poly::var(u));
  for (auto& e : fam.side_equal) w.pending.push_back(e);
  for (auto& e : sys.constraints.equal) w.pending.push_back(e);
  w.nonzero = fam.side_nonzero;
  for (auto& n : sys.constraints.nonzero) w.nonzero.push_back(n);
  if (sys.perturbed) w.nonzero.push_back(Poly::var(Param::a0));

  FamilyVerdict v;
  resolve(std::move(w), v.branches);
  if (v.branches.empty()) {
    v.kind = FamilyVerdict::Kind::Inconsistent;
    return v;
  }
  for (auto& br : v.branches)
    for (std::size_t k = 0; k < sys.equations.size(); ++k) {
      RatFun res = substitute(sys.equations[k], br.bindings);
      if (res.is_zero() || reduce_by(res.num(), br.implicit).is_zero()) continue;
      v.kind = FamilyVerdict::Kind::Violated;
      v.equation = k;
      v.residual = res;
      v.branch = br.description;
      return v;
    }
  return v;
}

PointVerdict decide_at_point(const SolitonSystem& sys, const Point& point, bool einstein) {
  Point fixed;
  for (Param p : sys.params) {
    auto it = point.find(p);
    if (it == point.end()) throw ConstraintViolated("no value for " + std::string(name(p)));
    fixed[p] = it->second;
  }
  for (auto& e : sys.constraints.equal)
    if (e.eval(fixed) != 0) throw ConstraintViolated("point violates " + e.str() + " = 0");
  for (auto& n : sys.constraints.nonzero)
    if (n.eval(fixed) == 0) throw ConstraintViolated("point violates " + n.str() + " != 0");
  if (sys.perturbed && fixed[Param::a0] == 0) throw ConstraintViolated("point violates a0 != 0");

  std::vector<Param> unknowns;
  if (einstein) {
    for (Param u : {Param::mu1, Param::mu2, Param::mu3}) fixed[u] = 0;
    unknowns = {Param::mu};
  } else {
    unknowns.assign(kUnknowns.begin(), kUnknowns.end());
  }
  const std::size_t n = unknowns.size();

  // Augmented rows [a_1 .. a_n | b] for a.x = b, tagged with the source equation.
  std::vector<std::vector<mpq_class>> rows;
  std::vector<std::size_t> source;
  for (std::size_t k = 0; k < sys.equations.size(); ++k) {
    Poly q = sys.equations[k].partial_eval(fixed);
    std::vector<mpq_class> row(n + 1, 0);
    for (auto& t : q.terms()) {
      int deg = total_degree(t.exp);
      if (deg == 0) {
        row[n] = -t.coeff;
        continue;
      }
      auto it = std::find_if(unknowns.begin(), unknowns.end(), [&](Param u) { return t.exp[index(u)] == 1; });
      if (deg != 1 || it == unknowns.end())
        throw std::logic_error("equation is not affine in the unknowns after fixing parameters: " + q.str());
      row[it - unknowns.begin()] = t.coeff;
    }
    rows.push_back(std::move(row));
    source.push_back(k);
  }

  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    std::swap(source[r], source[piv]);
    mpq_class inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      mpq_class f = rows[i][c];
      for (std::size_t j = c; j <= n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }

  PointVerdict v;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][n] != 0) {
      v.solvable = false;
      v.conflict = source[i];
      return v;
    }
  v.solvable = true;
  v.dimension = static_cast<int>(n - r);
  for (Param u : kUnknowns) v.witness[u] = 0;
  for (std::size_t i = 0; i < r; ++i) v.witness[unknowns[pivot_col[i]]] = rows[i][n];
  return v;
}

SpotCheck spot_check(const SolitonSystem& sys, const FamilyVerdict& verdict, std::uint64_t seed,
                     std::size_t per_branch, bool einstein) {
  SpotCheck sc;
  for (std::size_t bi = 0; bi < verdict.branches.size(); ++bi) {
    const FamilyBranch& br = verdict.branches[bi];
    if (!br.implicit.empty()) {
      ++sc.skipped_branches;
      continue;
    }
    sc.requested += per_branch;
    std::set<Param> free(sys.params.begin(), sys.params.end());
    free.insert(kUnknowns.begin(), kUnknowns.end());
    for (auto& [p, v] : br.bindings)
      for (Param q : kAllParams)
        if (v.depends_on(q)) free.insert(q);
    for (auto& nz : br.nonzero)
      for (Param q : nz.params()) free.insert(q);
    for (auto& [p, v] : br.bindings) free.erase(p);

    Rng rng(derive_seed(seed, "branch " + std::to_string(bi)));
    std::size_t got = 0;
    for (std::size_t attempt = 0; got < per_branch && attempt < per_branch * 200; ++attempt) {
      Point p;
      for (Param q : free) p[q] = rng.rational();
      try {
        Point full = p;
        for (auto& [x, v] : br.bindings) full[x] = v.eval(p);
        p = std::move(full);
      } catch (const DenominatorZero&) {
        continue;
      }
      if (!admissible(sys.constraints, p)) continue;
      if (sys.perturbed && p[Param::a0] == 0) continue;
      if (std::any_of(br.nonzero.begin(), br.nonzero.end(), [&](const Poly& n) { return n.eval(p) == 0; }))
        continue;
      for (std::size_t k = 0; k < sys.equations.size(); ++k)
        if (sys.equations[k].eval(p) != 0) {
          sc.failure = p;
          sc.failure_reason = "equation " + std::to_string(k + 1) + " is " + sys.equations[k].eval(p).get_str();
          return sc;
        }
      PointVerdict pv = decide_at_point(sys, p, einstein);
      if (!pv.solvable) {
        sc.failure = p;
        sc.failure_reason = "system inconsistent at the family's parameter values";
        return sc;
      }
      ++got;
    }
    sc.checked += got;
  }
  return sc;
}

std::string point_str(const Point& p) {
  std::string s = "{";
  for (auto& [q, v] : p) {
    if (s.size() > 1) s += ", ";
    s += std::string(name(q)) + ": " + v.get_str();
  }
  return s + "}";
}

}  // namespace bott
