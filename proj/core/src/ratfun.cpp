#include "bott/ratfun.hpp"

namespace bott {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Exponents gn = num_.monomial_gcd(), gd = den_.monomial_gcd();
  Exponents g;
  bool common = false;
  for (std::size_t i = 0; i < kParamCount; ++i) {
    g[i] = std::min(gn[i], gd[i]);
    common = common || g[i];
  }
  if (common) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  if (!den_.is_constant()) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = Poly(1);
    } else if (auto q2 = den_.divide_exact(num_)) {
      num_ = Poly(1);
      den_ = std::move(*q2);
    }
  }
  mpq_class lc = den_.leading().coeff;
  if (lc != 1) {
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
  }
}

Poly RatFun::as_poly() const {
  if (!is_poly()) throw std::domain_error("not a polynomial: " + str());
  return num_.scaled(1 / den_.leading().coeff);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun RatFun::pow(int n) const {
  if (n >= 0) return RatFun(num_.pow(n), den_.pow(n));
  if (is_zero()) throw std::domain_error("negative power of zero");
  return RatFun(den_.pow(-n), num_.pow(-n));
}

mpq_class RatFun::eval(const Point& point) const {
  mpq_class d = den_.eval(point);
  if (d == 0) throw DenominatorZero();
  return num_.eval(point) / d;
}

std::string RatFun::str() const {
  if (den_ == Poly(1)) return num_.str();
  auto wrap = [](const Poly& p) {
    std::string s = p.str();
    return p.size() > 1 || (p.is_monomial() && !p.is_constant() && p.leading().coeff != 1)
               ? "(" + s + ")"
               : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

RatFun substitute(const Poly& p, const Bindings& b) {
  // Put every term over the common denominator prod d_k^maxdeg_k and
  // normalize once at the end.
  std::array<int, kParamCount> maxdeg{};
  std::array<const RatFun*, kParamCount> val{};
  for (auto& [q, r] : b) {
    val[index(q)] = &r;
    maxdeg[index(q)] = p.degree(q);
  }
  std::array<std::vector<Poly>, kParamCount> num_pow, den_pow;
  Poly common(1);
  for (std::size_t i = 0; i < kParamCount; ++i) {
    if (!val[i] || maxdeg[i] == 0) continue;
    num_pow[i].push_back(Poly(1));
    den_pow[i].push_back(Poly(1));
    for (int k = 1; k <= maxdeg[i]; ++k) {
      num_pow[i].push_back(num_pow[i].back() * val[i]->num());
      den_pow[i].push_back(den_pow[i].back() * val[i]->den());
    }
    common *= den_pow[i][maxdeg[i]];
  }
  Poly total;
  for (auto& t : p.terms()) {
    Exponents free = t.exp;
    Poly term = Poly::monomial(Exponents{}, t.coeff);
    for (std::size_t i = 0; i < kParamCount; ++i) {
      if (!val[i] || maxdeg[i] == 0) continue;
      int k = t.exp[i];
      free[i] = 0;
      term *= num_pow[i][k] * den_pow[i][maxdeg[i] - k];
    }
    total += term * Poly::monomial(free);
  }
  return RatFun(total, common);
}

RatFun substitute(const RatFun& r, const Bindings& b) {
  return substitute(r.num(), b) / substitute(r.den(), b);
}

}  // namespace bott
