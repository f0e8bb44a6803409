#include "bott/poly.hpp"

#include <algorithm>

namespace bott {

int total_degree(const Exponents& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool grlex_greater(const Exponents& a, const Exponents& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

UnboundParam::UnboundParam(Param p)
    : std::runtime_error("parameter " + std::string(name(p)) + " has no value"), param(p) {}

namespace {

struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return grlex_greater(a, b); }
};

}  // namespace

Poly::Poly(long c) {
  if (c != 0) terms_.push_back({Exponents{}, mpq_class(c)});
}

Poly::Poly(const mpq_class& c) {
  if (c != 0) terms_.push_back({Exponents{}, c});
}

Poly Poly::var(Param p) {
  Exponents e{};
  e[index(p)] = 1;
  return monomial(e);
}

Poly Poly::monomial(const Exponents& e, const mpq_class& c) {
  Poly r;
  if (c != 0) r.terms_.push_back({e, c});
  return r;
}

void Poly::canonicalize() {
  std::map<Exponents, mpq_class, GrlexLess> acc;
  for (auto& t : terms_) acc[t.exp] += t.coeff;
  terms_.clear();
  for (auto& [e, c] : acc)
    if (c != 0) terms_.push_back({e, c});
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && bott::total_degree(terms_[0].exp) == 0);
}

mpq_class Poly::constant_term() const {
  if (!terms_.empty() && bott::total_degree(terms_.back().exp) == 0) return terms_.back().coeff;
  return 0;
}

int Poly::degree(Param p) const {
  int d = 0;
  for (auto& t : terms_) d = std::max<int>(d, t.exp[index(p)]);
  return d;
}

int Poly::total_degree() const {
  return terms_.empty() ? 0 : bott::total_degree(terms_.front().exp);
}

std::vector<Param> Poly::params() const {
  std::vector<Param> out;
  for (Param p : kAllParams)
    if (depends_on(p)) out.push_back(p);
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && grlex_greater(a->exp, b->exp))) {
      out.push_back(std::move(*a++));
    } else if (a == ae || grlex_greater(b->exp, a->exp)) {
      out.push_back(*b++);
    } else {
      mpq_class c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->exp, c});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (auto& x : a.terms_)
    for (auto& y : b.terms_) {
      Exponents e;
      for (std::size_t i = 0; i < kParamCount; ++i) e[i] = x.exp[i] + y.exp[i];
      r.terms_.push_back({e, x.coeff * y.coeff});
    }
  r.canonicalize();
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Poly Poly::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

mpq_class Poly::content() const {
  if (terms_.empty()) return 1;
  mpz_class g = 0, l = 1;
  for (auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  mpq_class c(g, l);
  c.canonicalize();
  return c;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return {};
  return scaled(1 / content());
}

Exponents Poly::monomial_gcd() const {
  Exponents g{};
  if (terms_.empty()) return g;
  g = terms_.front().exp;
  for (auto& t : terms_)
    for (std::size_t i = 0; i < kParamCount; ++i) g[i] = std::min(g[i], t.exp[i]);
  return g;
}

Poly Poly::divide_monomial(const Exponents& e) const {
  Poly r = *this;
  for (auto& t : r.terms_)
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (t.exp[i] < e[i]) throw std::invalid_argument("monomial does not divide polynomial");
      t.exp[i] -= e[i];
    }
  return r;  // dividing every term by one monomial keeps the order
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  Poly r = *this, q;
  const Term& ld = d.leading();
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exponents e;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (lr.exp[i] < ld.exp[i]) return std::nullopt;
      e[i] = lr.exp[i] - ld.exp[i];
    }
    Poly t = monomial(e, lr.coeff / ld.coeff);
    r -= t * d;
    q += t;
  }
  return q;
}

std::vector<Poly> Poly::coefficients_in(Param x) const {
  std::vector<Poly> out(degree(x) + 1);
  for (auto& t : terms_) {
    Exponents e = t.exp;
    int k = e[index(x)];
    e[index(x)] = 0;
    out[k].terms_.push_back({e, t.coeff});
  }
  for (auto& p : out) p.canonicalize();
  return out;
}

Poly Poly::from_coefficients(Param x, const std::vector<Poly>& cs) {
  Poly r, xp(1), v = var(x);
  for (auto& c : cs) {
    r += c * xp;
    xp *= v;
  }
  return r;
}

Poly Poly::pseudo_remainder(const Poly& h, Param x) const {
  int n = h.degree(x);
  if (n == 0) return {};
  Poly lc = h.coefficients_in(x)[n];
  Poly r = *this;
  while (!r.is_zero()) {
    int m = r.degree(x);
    if (m < n) break;
    Poly lead = r.coefficients_in(x)[m];
    r = r * lc - lead * var(x).pow(m - n) * h;
  }
  return r;
}

mpq_class Poly::eval(const Point& point) const {
  std::array<const mpq_class*, kParamCount> vals{};
  for (Param p : kAllParams) {
    auto it = point.find(p);
    if (it != point.end()) vals[index(p)] = &it->second;
  }
  mpq_class sum = 0;
  for (auto& t : terms_) {
    mpq_class v = t.coeff;
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (!t.exp[i]) continue;
      if (!vals[i]) throw UnboundParam(kAllParams[i]);
      mpq_class f;
      mpz_pow_ui(f.get_num_mpz_t(), vals[i]->get_num_mpz_t(), t.exp[i]);
      mpz_pow_ui(f.get_den_mpz_t(), vals[i]->get_den_mpz_t(), t.exp[i]);
      v *= f;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::partial_eval(const Point& point) const {
  Poly r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    Term u = t;
    for (auto& [p, val] : point) {
      auto k = u.exp[index(p)];
      if (!k) continue;
      mpq_class f;
      mpz_pow_ui(f.get_num_mpz_t(), val.get_num_mpz_t(), k);
      mpz_pow_ui(f.get_den_mpz_t(), val.get_den_mpz_t(), k);
      u.coeff *= f;
      u.exp[index(p)] = 0;
    }
    r.terms_.push_back(std::move(u));
  }
  r.canonicalize();
  return r;
}

std::string rational_str(const mpq_class& q) { return q.get_str(); }

std::string monomial_str(const Exponents& e) {
  std::string s;
  for (Param p : kAllParams) {
    auto k = e[index(p)];
    if (!k) continue;
    if (!s.empty()) s += '*';
    s += name(p);
    if (k > 1) s += '^' + std::to_string(k);
  }
  return s;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms_) {
    bool neg = t.coeff < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    mpq_class a = abs(t.coeff);
    std::string mono = monomial_str(t.exp);
    if (mono.empty()) {
      s += rational_str(a);
      continue;
    }
    if (a.get_num() != 1) s += a.get_num().get_str() + "*";
    s += mono;
    if (a.get_den() != 1) s += "/" + a.get_den().get_str();
  }
  return s;
}

}  // namespace bott
