#include "torsion_bounds.hpp"

#include <string>

namespace fibra {

namespace {

void check_degree(unsigned degree, unsigned max_degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  if (degree > max_degree) {
    throw Error(ErrorCode::Resource, "degree " + std::to_string(degree) + " exceeds the configured limit " +
                                         std::to_string(max_degree));
  }
}

Integer pow3(unsigned e) { return integer_pow(Integer(3), e); }

// Product tree keeps the big multiplications balanced.
Integer product(const std::vector<Integer>& factors, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return Integer(1);
  if (hi - lo == 1) return factors[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product(factors, lo, mid) * product(factors, mid, hi);
}

}  // namespace

bool within_oesterle_bound(std::uint64_t p, unsigned degree) {
  const Integer pz(static_cast<unsigned long>(p));
  if (degree % 2 == 0) {
    const Integer root = 1 + pow3(degree / 2);
    return pz <= root * root;
  }
  const Integer t = pow3(degree);
  const Integer diff = pz - 1 - t;
  if (diff <= 0) return true;
  return diff * diff <= 4 * t;
}

std::vector<std::uint64_t> oesterle_primes(unsigned degree, unsigned max_degree) {
  check_degree(degree, max_degree);
  // isqrt(3^d) + 1 exceeds 3^(d/2), so this limit covers the bound.
  const Integer root = isqrt(pow3(degree)) + 2;
  const Integer limit_z = root * root;
  const std::uint64_t limit = limit_z.get_ui();
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (composite[n]) continue;
    if (!within_oesterle_bound(n, degree)) break;
    primes.push_back(n);
    for (std::uint64_t m = n * n; m <= limit; m += n) composite[m] = true;
  }
  return primes;
}

Integer parent_cap(std::uint64_t p, unsigned degree) {
  if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be at least 1");
  const Integer d(degree);
  if (p == 2) return 129 * (pow3(degree) - 1) * integer_pow(3 * d, 6);
  if (p == 3) return 65 * (integer_pow(Integer(5), degree) - 1) * integer_pow(2 * d, 6);
  return 65 * (pow3(degree) - 1) * integer_pow(2 * d, 6);
}

unsigned max_exponent(std::uint64_t p, unsigned degree) {
  const Integer cap = parent_cap(p, degree);
  const Integer pz(static_cast<unsigned long>(p));
  Integer power = 1;
  unsigned n = 0;
  while (power * pz <= cap) {
    power *= pz;
    ++n;
  }
  return n;
}

Integer max_prime_power(std::uint64_t p, unsigned degree) {
  return integer_pow(Integer(static_cast<unsigned long>(p)), max_exponent(p, degree));
}

BoundTable global_bound(unsigned degree, unsigned max_degree) {
  BoundTable table;
  table.degree = degree;
  std::vector<Integer> factors;
  for (const auto p : oesterle_primes(degree, max_degree)) {
    const unsigned n = max_exponent(p, degree);
    table.caps.push_back({p, n});
    factors.push_back(integer_pow(Integer(static_cast<unsigned long>(p)), n));
  }
  table.bound = product(factors, 0, factors.size());
  return table;
}

BoundTable mazur_bound() {
  BoundTable table;
  table.degree = 1;
  table.mazur = true;
  table.caps = {{2, 3}, {3, 2}, {5, 1}, {7, 1}};
  table.bound = 2520;
  return table;
}

}  // namespace fibra
