#pragma once

// Arithmetic modulo a word-size prime. The modulus travels with each value so
// the generic curve and division-polynomial templates work unchanged over F_p.

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace fibra {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n);

class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp inverse() const {
    if (v_ == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_p");
    return {pow_mod(v_, p_ - 2, p_), p_};
  }

  friend Fp operator+(Fp a, Fp b) { return {a.v_ + b.v_ >= a.p_ ? a.v_ + b.v_ - a.p_ : a.v_ + b.v_, a.p_}; }
  friend Fp operator-(Fp a, Fp b) { return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_}; }
  friend Fp operator-(Fp a) { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }
  friend Fp operator*(Fp a, Fp b) { return {mul_mod(a.v_, b.v_, a.p_), a.p_}; }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 2;
};

// Dense univariate polynomial over F_p, ascending coefficients, trimmed.
class PolyModP {
 public:
  explicit PolyModP(std::uint64_t p) : p_(p) {}
  PolyModP(std::vector<std::uint64_t> coeffs, std::uint64_t p);

  static PolyModP constant(std::uint64_t c, std::uint64_t p) { return PolyModP({c}, p); }
  static PolyModP x(std::uint64_t p) { return PolyModP({0, 1}, p); }

  std::uint64_t modulus() const noexcept { return p_; }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::uint64_t operator()(std::uint64_t x) const;

  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);

 private:
  void trim();
  std::vector<std::uint64_t> c_;
  std::uint64_t p_;
};

}  // namespace fibra
