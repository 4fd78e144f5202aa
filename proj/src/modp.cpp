#include "modp.hpp"

namespace fibra {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PolyModP::PolyModP(std::vector<std::uint64_t> coeffs, std::uint64_t p) : c_(std::move(coeffs)), p_(p) {
  for (auto& v : c_) v %= p_;
  trim();
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyModP::operator()(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mul_mod(acc, x, p_) + *it) % p_;
  return acc;
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] = a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] = (out[k] + b.c_[k]) % a.p_;
  return PolyModP(std::move(out), a.p_);
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  std::vector<std::uint64_t> out(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] = a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] = (out[k] + a.p_ - b.c_[k]) % a.p_;
  return PolyModP(std::move(out), a.p_);
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p_);
  std::vector<std::uint64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = (out[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
  }
  return PolyModP(std::move(out), a.p_);
}

}  // namespace fibra
