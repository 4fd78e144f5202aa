#pragma once

// Exact scalars. Integers and rationals are GMP values; mpq_class keeps every
// result in lowest terms with a positive denominator, and 0 is stored as 0/1.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace fibra {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n", "n/d" and surrounding whitespace; signs on either part.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty rational");
  auto parse_int = [](std::string_view s) {
    std::string str(s);
    if (!str.empty() && str.front() == '+') str.erase(0, 1);
    Integer z;
    if (str.empty() || z.set_str(str, 10) != 0) throw Error(ErrorCode::Parse, "malformed integer '" + std::string(s) + "'");
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer num = parse_int(trim(text.substr(0, slash)));
  const Integer den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

// Always "num/den", the interchange form.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_square(const Integer& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

inline bool is_square(const Rational& r) { return is_square(r.get_num()) && is_square(r.get_den()); }

inline Integer isqrt(const Integer& z) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

// Square root of a rational square; caller checks is_square first.
inline Rational exact_sqrt(const Rational& r) { return make_rational(isqrt(r.get_num()), isqrt(r.get_den())); }

inline Rational rational_pow(const Rational& base, unsigned exponent) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  return Rational(num, den);
}

inline Integer integer_pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Residue of r modulo a prime p not dividing the denominator.
inline std::uint64_t reduce_mod(const Rational& r, std::uint64_t p) {
  const Integer m(static_cast<unsigned long>(p));
  Integer den = mod_floor(r.get_den(), m);
  if (den == 0) throw Error(ErrorCode::BadReduction, "denominator divisible by p");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
  Integer v = mod_floor(Integer(r.get_num() * inv), m);
  return v.get_ui();
}

// Naive height max(|num|, den), used for deterministic search ordering.
inline Integer naive_height(const Rational& r) {
  Integer a = abs(r.get_num());
  return a > r.get_den() ? a : Integer(r.get_den());
}

}  // namespace fibra
