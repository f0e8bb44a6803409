#include "bott/algebra.hpp"

#include <set>
#include <sstream>

#include "bott/parse.hpp"
#include "bott/text.hpp"

namespace bott {

std::string group_name(GroupId g) { return "G" + std::to_string(static_cast<int>(g) + 1); }

std::optional<GroupId> group_from_name(std::string_view s) {
  for (GroupId g : kAllGroups)
    if (group_name(g) == s) return g;
  return std::nullopt;
}

namespace {

Poly P(const char* s, int eta) { return parse_poly(s, eta); }

void set_bracket(StructureConstants& c, int i, int j, const Vec3& v) {
  for (int k = 0; k < 3; ++k) {
    c[i][j][k] = v[k];
    c[j][i][k] = -v[k];
  }
}

struct Entry {
  const char* b12[3];
  const char* b13[3];
  const char* b23[3];
  std::vector<const char*> equal;
  std::vector<const char*> nonzero;
  std::vector<Param> params;
  bool unimodular;
};

const Entry& entry(GroupId id) {
  using enum Param;
  static const std::array<Entry, 7> table = {{
      {{"alpha", "0", "-beta"}, {"-alpha", "-beta", "0"}, {"beta", "alpha", "alpha"}, {}, {"alpha"},
       {alpha, beta}, true},
      {{"0", "gamma", "-beta"}, {"0", "-beta", "-gamma"}, {"alpha", "0", "0"}, {}, {"gamma"},
       {alpha, beta, gamma}, true},
      {{"0", "0", "-gamma"}, {"0", "-beta", "0"}, {"alpha", "0", "0"}, {}, {}, {alpha, beta, gamma}, true},
      {{"0", "-1", "-beta + 2*eta"}, {"0", "-beta", "1"}, {"alpha", "0", "0"}, {}, {}, {alpha, beta}, true},
      {{"0", "0", "0"}, {"alpha", "beta", "0"}, {"gamma", "delta", "0"}, {"alpha*gamma + beta*delta"},
       {"alpha + delta"}, {alpha, beta, gamma, delta}, false},
      {{"0", "alpha", "beta"}, {"0", "gamma", "delta"}, {"0", "0", "0"}, {"alpha*gamma - beta*delta"},
       {"alpha + delta"}, {alpha, beta, gamma, delta}, false},
      {{"-alpha", "-beta", "-beta"}, {"alpha", "beta", "beta"}, {"gamma", "delta", "delta"}, {"alpha*gamma"},
       {"alpha + delta"}, {alpha, beta, gamma, delta}, false},
  }};
  return table[static_cast<std::size_t>(id)];
}

}  // namespace

LieAlgebraSpec catalog(GroupId id, int eta) {
  if (static_cast<int>(id) < 0 || static_cast<int>(id) > 6) throw UnknownId("unknown group id");
  if (id == GroupId::G4 && eta != 1 && eta != -1) throw std::invalid_argument("eta must be +1 or -1");
  const Entry& e = entry(id);
  LieAlgebraSpec s;
  s.label = group_name(id);
  for (int k = 0; k < 3; ++k) {
    s.c[0][1][k] = P(e.b12[k], eta);
    s.c[0][2][k] = P(e.b13[k], eta);
    s.c[1][2][k] = P(e.b23[k], eta);
  }
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) set_bracket(s.c, i, j, s.c[i][j]);
  for (auto* q : e.equal) s.equal.push_back(P(q, eta));
  for (auto* q : e.nonzero) s.nonzero.push_back(P(q, eta));
  s.params = e.params;
  if (id == GroupId::G4) s.eta = eta;
  s.unimodular = e.unimodular;
  return s;
}

std::vector<int> eta_values(GroupId id) {
  if (id == GroupId::G4) return {1, -1};
  return {1};
}

Vec3 basis(int i) {
  Vec3 v{};
  v[i] = Poly(1);
  return v;
}

Vec3 zero_vec() { return Vec3{}; }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 operator*(const Poly& s, const Vec3& v) { return {s * v[0], s * v[1], s * v[2]}; }

bool is_zero(const Vec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

Vec3 bracket(const LieAlgebraSpec& spec, const Vec3& x, const Vec3& y) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (y[j].is_zero() || i == j) continue;
      Poly xy = x[i] * y[j];
      for (int k = 0; k < 3; ++k)
        if (!spec.c[i][j][k].is_zero()) out[k] += xy * spec.c[i][j][k];
    }
  }
  return out;
}

JacobiDefect jacobi_defect(const LieAlgebraSpec& spec) {
  JacobiDefect d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Vec3 a = basis(i), b = basis(j), c = basis(k);
        d[i][j][k] = bracket(spec, bracket(spec, a, b), c) + bracket(spec, bracket(spec, b, c), a) +
                     bracket(spec, bracket(spec, c, a), b);
      }
  return d;
}

bool jacobi_holds(const LieAlgebraSpec& spec) {
  auto d = jacobi_defect(spec);
  for (auto& a : d)
    for (auto& b : a)
      for (auto& v : b)
        if (!is_zero(v)) return false;
  return true;
}

bool jacobi_holds_sampled(const LieAlgebraSpec& spec, std::uint64_t seed, int points) {
  Rng rng(seed);
  for (int n = 0; n < points; ++n) {
    Point p;
    for (Param q : kAllParams) p[q] = rng.rational();
    LieAlgebraSpec s = spec;
    for (auto& a : s.c)
      for (auto& b : a)
        for (auto& x : b) x = Poly(x.eval(p));
    if (!jacobi_holds(s)) return false;
  }
  return true;
}

bool is_antisymmetric(const StructureConstants& c) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (c[i][j][k] != -c[j][i][k]) return false;
  return true;
}

Poly metric_pair(const Vec3& x, const Vec3& y) {
  Poly s;
  for (int i = 0; i < 3; ++i) s += (x[i] * y[i]).scaled(kSigns[i]);
  return s;
}

std::string vec_str(const Vec3& v) {
  std::string s;
  for (int k = 0; k < 3; ++k) {
    const Poly& c = v[k];
    if (c.is_zero()) continue;
    bool neg = c.leading().coeff < 0;
    Poly a = neg ? -c : c;
    std::string coeff;
    if (a == Poly(1))
      coeff = "";
    else if (a.size() == 1)
      coeff = a.str() + "*";
    else
      coeff = "(" + a.str() + ")*";
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    s += coeff + "e_" + std::to_string(k + 1);
  }
  return s.empty() ? "0" : s;
}

LieAlgebraSpec parse_custom_algebra(std::string_view text) {
  LieAlgebraSpec s;
  s.label = "custom";
  std::set<std::pair<int, int>> seen;
  int lineno = 0;
  for (auto line : split_lines(text)) {
    ++lineno;
    std::string_view l = trim(line.substr(0, line.find('#')));
    if (l.empty()) continue;
    auto colon = l.find(':');
    if (colon == std::string_view::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected '<key>: <value>'");
    std::string_view key = trim(l.substr(0, colon)), value = trim(l.substr(colon + 1));
    try {
      if (key == "label") {
        s.label = std::string(value);
      } else if (key == "equal") {
        s.equal.push_back(parse_poly(value));
      } else if (key == "nonzero") {
        s.nonzero.push_back(parse_poly(value));
      } else {
        auto idx = parse_indices(key, 2);
        int i = idx[0] - 1, j = idx[1] - 1;
        if (i == j) throw ParseError("bracket of a basis vector with itself");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second) throw ParseError("bracket given twice");
        auto parts = split(value, '|');
        if (parts.size() != 3) throw ParseError("expected three components separated by '|'");
        Vec3 v;
        for (int k = 0; k < 3; ++k) v[k] = parse_poly(parts[k]);
        set_bracket(s.c, i, j, v);
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  std::set<Param> used;
  for (auto& a : s.c)
    for (auto& b : a)
      for (auto& x : b)
        for (Param p : x.params()) used.insert(p);
  for (auto* list : {&s.equal, &s.nonzero})
    for (auto& x : *list)
      for (Param p : x.params()) used.insert(p);
  for (Param p : used) {
    if (is_unknown(p)) throw ParseError("brackets may not use the soliton unknowns");
    s.params.push_back(p);
  }
  return s;
}

}  // namespace bott
