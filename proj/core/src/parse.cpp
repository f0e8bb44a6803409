#include "bott/parse.hpp"

#include <cctype>

namespace bott {

namespace {

class Parser {
 public:
  Parser(std::string_view s, std::optional<int> eta) : s_(s), eta_(eta) {}

  RatFun parse() {
    RatFun r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::optional<int> eta_;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun r = term();
    for (;;) {
      if (eat('+'))
        r = r + term();
      else if (eat('-'))
        r = r - term();
      else
        return r;
    }
  }

  RatFun term() {
    RatFun r = unary();
    for (;;) {
      if (eat('*')) {
        r = r * unary();
      } else if (eat('/')) {
        RatFun d = unary();
        if (d.is_zero()) fail("division by zero");
        r = r / d;
      } else {
        return r;
      }
    }
  }

  RatFun unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RatFun power() {
    RatFun base = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int n = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (n > 64) fail("exponent too large");
      if (neg && base.is_zero()) fail("negative power of zero");
      return base.pow(neg ? -n : n);
    }
    return base;
  }

  RatFun atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFun(mpq_class(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view id = s_.substr(start, pos_ - start);
      if (id == "eta") {
        if (!eta_) fail("eta needs a sign");
        return RatFun(static_cast<long>(*eta_));
      }
      if (auto p = param_from_name(id)) return RatFun(Poly::var(*p));
      pos_ = start;
      fail("unknown symbol '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

RatFun parse_ratfun(std::string_view text, std::optional<int> eta) {
  return Parser(text, eta).parse();
}

Poly parse_poly(std::string_view text, std::optional<int> eta) {
  RatFun r = parse_ratfun(text, eta);
  if (!r.is_poly()) throw ParseError("expected a polynomial, got '" + std::string(text) + "'");
  return r.as_poly();
}

bool mentions_eta(std::string_view text) {
  for (std::size_t i = text.find("eta"); i != std::string_view::npos; i = text.find("eta", i + 1)) {
    bool left = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    bool right = i + 3 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 3]));
    // "beta" contains "eta"; require a word boundary on both sides.
    if (left && right) return true;
  }
  return false;
}

}  // namespace bott
