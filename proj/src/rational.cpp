#include "emk/rational.hpp"

#include <cctype>

namespace emk {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// Base-10 integer; mpz string constructors would otherwise read a leading
// zero as octal, and reject a leading '+'.
mpz_class parse_integer(std::string s) {
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw UsageError("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
      throw UsageError("malformed rational literal: " + text);
    const mpz_class n = parse_integer(num);
    const mpz_class d = parse_integer(den);
    if (d == 0) throw UsageError("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
  }
  const auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "+" || digits == "-" || !is_integer_token(digits))
      throw UsageError("malformed decimal literal: " + text);
    mpz_class den(1);
    for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
    Rational q(parse_integer(digits), den);
    q.canonicalize();
    return q;
  }
  if (!is_integer_token(text)) throw UsageError("malformed rational literal: " + text);
  return Rational(parse_integer(text));
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
  }
  return std::nullopt;
}

Rational sqrt_approx(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt_approx of negative rational");
  if (auto r = exact_sqrt(q)) return *r;
  // floor(sqrt(num*den * 4^bits)) / (den * 2^bits) has relative error < 2^-bits.
  mpz_class scaled = q.get_num() * q.get_den();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den = q.get_den();
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  Rational r(root, den);
  r.canonicalize();
  return r;
}

}  // namespace emk
