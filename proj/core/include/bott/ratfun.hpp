#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "bott/poly.hpp"

namespace bott {

struct DenominatorZero : std::domain_error {
  DenominatorZero() : std::domain_error("denominator vanishes at this point") {}
};

// Quotient of polynomials. Normalization cancels common monomial factors,
// cancels the denominator (or numerator) when one divides the other, and
// scales so the denominator's leading coefficient is 1. It is not a full gcd.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(const mpq_class& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  Poly as_poly() const;  // throws when the denominator is not constant

  bool depends_on(Param p) const { return num_.depends_on(p) || den_.depends_on(p); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  // Equality of normal forms; sound for zero tests, may miss equal values
  // whose common factor normalization cannot see.
  friend bool operator==(const RatFun& a, const RatFun& b);
  RatFun pow(int n) const;

  mpq_class eval(const Point& point) const;
  std::string str() const;

 private:
  Poly num_, den_;
  void normalize();
};

using Bindings = std::map<Param, RatFun>;

// Simultaneous substitution; unbound parameters pass through.
RatFun substitute(const Poly& p, const Bindings& b);
RatFun substitute(const RatFun& r, const Bindings& b);

}  // namespace bott
