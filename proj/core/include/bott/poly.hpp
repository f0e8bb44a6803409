#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bott/param.hpp"

namespace bott {

using Exponents = std::array<std::uint8_t, kParamCount>;

// Exact rational values for some of the parameters.
using Point = std::map<Param, mpq_class>;

int total_degree(const Exponents& e);

// Graded lexicographic comparison: true when a sorts before b in printed output.
bool grlex_greater(const Exponents& a, const Exponents& b);

struct UnboundParam : std::runtime_error {
  explicit UnboundParam(Param p);
  Param param;
};

// Sparse polynomial over Q in the fixed parameter alphabet. Terms are kept in
// descending graded lex order with no zero coefficients, so structural
// equality is polynomial equality.
class Poly {
 public:
  struct Term {
    Exponents exp{};
    mpq_class coeff;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static Poly var(Param p);
  static Poly monomial(const Exponents& e, const mpq_class& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  mpq_class constant_term() const;
  const Term& leading() const { return terms_.front(); }

  int degree(Param p) const;
  int total_degree() const;
  bool depends_on(Param p) const { return degree(p) > 0; }
  std::vector<Param> params() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const mpq_class& c) const;
  Poly pow(unsigned n) const;

  // Positive rational c such that p / c has coprime integer coefficients.
  mpq_class content() const;
  Poly primitive() const;

  Exponents monomial_gcd() const;
  Poly divide_monomial(const Exponents& e) const;

  // Quotient when d divides this exactly, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;

  // Coefficients as a polynomial in x: result[k] multiplies x^k.
  std::vector<Poly> coefficients_in(Param x) const;
  static Poly from_coefficients(Param x, const std::vector<Poly>& cs);

  // Pseudo-remainder of this by h with respect to x.
  Poly pseudo_remainder(const Poly& h, Param x) const;

  mpq_class eval(const Point& point) const;
  Poly partial_eval(const Point& point) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
  void canonicalize();
};

std::string monomial_str(const Exponents& e);
std::string rational_str(const mpq_class& q);

}  // namespace bott
