#pragma once

// Uniform torsion bound over number fields of degree d: every prime dividing
// a torsion order satisfies p <= (1 + 3^(d/2))^2, and the p-part is capped by
// the prime-power inequalities below. B(d) is the product of the caps.

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace fibra {

inline constexpr unsigned kDefaultMaxDegree = 16;

struct PrimeCap {
  std::uint64_t p;
  unsigned exponent;
};

struct BoundTable {
  unsigned degree = 0;
  std::vector<PrimeCap> caps;
  Integer bound;
  bool mazur = false;
};

// Exact test p <= (1 + 3^(d/2))^2; for odd d via the squared inequality.
bool within_oesterle_bound(std::uint64_t p, unsigned degree);

std::vector<std::uint64_t> oesterle_primes(unsigned degree, unsigned max_degree = kDefaultMaxDegree);

Integer parent_cap(std::uint64_t p, unsigned degree);

// Largest n with p^n <= parent_cap(p, d).
unsigned max_exponent(std::uint64_t p, unsigned degree);
Integer max_prime_power(std::uint64_t p, unsigned degree);

BoundTable global_bound(unsigned degree, unsigned max_degree = kDefaultMaxDegree);

// d = 1 only: torsion of E(Q) embeds in Z/2520 x Z/2520.
BoundTable mazur_bound();

}  // namespace fibra
