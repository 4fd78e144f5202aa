#pragma once

// Short Weierstrass curves y^2 = x^3 + A x + B over Q and over F_p.
//
// Division polynomials follow one convention throughout: f_r = psi_r for odd
// r and f_r = psi_r / (2y) for even r, so every f_r is a polynomial in x.
// For an affine point P = (x0, y0), [r]P = O exactly when
// torsion_polynomial(r) = f_r * (x^3 + A x + B)^(r even) vanishes at x0.

#include <cstdint>
#include <optional>
#include <vector>

#include "modp.hpp"
#include "polynomial.hpp"

namespace fibra {

template <class F>
struct CurvePointT {
  bool infinity = true;
  F x{};
  F y{};

  static CurvePointT at_infinity() { return {}; }
  static CurvePointT affine(F x, F y) { return {false, std::move(x), std::move(y)}; }
  friend bool operator==(const CurvePointT& a, const CurvePointT& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

template <class F>
struct CurveT {
  F A{};
  F B{};

  bool contains(const CurvePointT<F>& P) const {
    if (P.infinity) return true;
    return P.y * P.y == P.x * P.x * P.x + A * P.x + B;
  }

  CurvePointT<F> negate(const CurvePointT<F>& P) const {
    if (P.infinity) return P;
    return CurvePointT<F>::affine(P.x, -P.y);
  }

  CurvePointT<F> add(const CurvePointT<F>& P, const CurvePointT<F>& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    F lambda;
    if (P.x == Q.x) {
      if (P.y == -Q.y) return CurvePointT<F>::at_infinity();
      const F three_x2 = P.x * P.x + P.x * P.x + P.x * P.x;
      lambda = (three_x2 + A) / (P.y + P.y);
    } else {
      lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    F x3 = lambda * lambda - P.x - Q.x;
    F y3 = lambda * (P.x - x3) - P.y;
    return CurvePointT<F>::affine(std::move(x3), std::move(y3));
  }

  CurvePointT<F> multiply(std::uint64_t n, const CurvePointT<F>& P) const {
    CurvePointT<F> result = CurvePointT<F>::at_infinity();
    CurvePointT<F> base = P;
    while (n) {
      if (n & 1U) result = add(result, base);
      n >>= 1U;
      if (n) base = add(base, base);
    }
    return result;
  }
};

using CurvePoint = CurvePointT<Rational>;
using CurvePointModP = CurvePointT<Fp>;
using CurveModP = CurveT<Fp>;

class WeierstrassCurve : public CurveT<Rational> {
 public:
  // Throws SingularCurve when 4A^3 + 27B^2 = 0.
  WeierstrassCurve(const Rational& a, const Rational& b);

  Rational discriminant() const;  // -16(4A^3 + 27B^2)
  Rational j_invariant() const;   // 1728 * 4A^3 / (4A^3 + 27B^2)
  CurvePoint checked_point(const Rational& x, const Rational& y) const;
  // Reduction modulo a prime of good reduction (BadReduction otherwise).
  CurveModP reduce(std::uint64_t p) const;
  bool good_reduction(std::uint64_t p) const;
};

// f_0 .. f_n over any commutative ring with the needed operations.
template <class Ring>
std::vector<Ring> division_polynomials(unsigned n, const Ring& x, const Ring& a, const Ring& b, const Ring& one) {
  const Ring zero = one - one;
  std::vector<Ring> f;
  f.reserve(n + 1);
  const Ring two = one + one;
  const Ring three = two + one;
  const Ring x2 = x * x;
  f.push_back(zero);
  if (n >= 1) f.push_back(one);
  if (n >= 2) f.push_back(one);
  if (n >= 3) {
    const Ring six = three + three;
    const Ring twelve = six + six;
    f.push_back(three * x2 * x2 + six * a * x2 + twelve * b * x - a * a);
  }
  if (n >= 4) {
    const Ring five = two + three;
    const Ring four = two + two;
    const Ring eight = four + four;
    const Ring twenty = four * five;
    const Ring x3 = x2 * x;
    f.push_back(two * (x3 * x3 + five * a * x2 * x2 + twenty * b * x3 - five * a * a * x2 - four * a * b * x -
                       eight * b * b - a * a * a));
  }
  if (n < 5) return f;
  const Ring g = x * x2 + a * x + b;
  const Ring sixteen = [&] {
    Ring s = two * two;
    return s * s;
  }();
  const Ring r = sixteen * g * g;
  for (unsigned k = 5; k <= n; ++k) {
    if (k % 2 == 1) {
      const unsigned m = (k - 1) / 2;
      const Ring& fm = f[m];
      const Ring& fm1 = f[m + 1];
      const Ring fm3 = fm * fm * fm;
      const Ring fm13 = fm1 * fm1 * fm1;
      if (m % 2 == 0) {
        f.push_back(r * f[m + 2] * fm3 - f[m - 1] * fm13);
      } else {
        f.push_back(f[m + 2] * fm3 - r * f[m - 1] * fm13);
      }
    } else {
      const unsigned m = k / 2;
      f.push_back(f[m] * (f[m + 2] * f[m - 1] * f[m - 1] - f[m - 2] * f[m + 1] * f[m + 1]));
    }
  }
  return f;
}

// f_r as a polynomial in x over Q (arity 1).
Polynomial division_polynomial(unsigned r, const WeierstrassCurve& E);
// f_r times the 2-torsion cubic for even r; vanishes at x(P) iff [r]P = O.
Polynomial torsion_polynomial(unsigned r, const WeierstrassCurve& E);
PolyModP division_polynomial_mod_p(unsigned r, const CurveModP& E);
PolyModP torsion_polynomial_mod_p(unsigned r, const CurveModP& E);

// Universal f_r in Q[X, A, B] (variables 0, 1, 2).
Polynomial universal_division_polynomial(unsigned r);
// Universal primitive part: the x-coordinates of points of exact order r,
// r >= 3, as prod over d | r of f_d^mu(r/d).
Polynomial universal_exact_order_polynomial(unsigned r);

// [r]P = O for an affine or infinite point.
bool order_divides(const WeierstrassCurve& E, const CurvePoint& P, unsigned r);

int moebius(unsigned n);

// #E(F_p) by a full x-loop with a table of squares. p odd, good reduction.
std::uint64_t count_points_mod_p(const WeierstrassCurve& E, std::uint64_t p);
std::uint64_t count_points_mod_p(const CurveModP& E);
std::uint64_t point_order_mod_p(const CurveModP& E, const CurvePointModP& P, std::uint64_t group_order);

struct Reduction {
  std::uint64_t p;
  std::uint64_t group_order;
  std::uint64_t point_order;
};

struct OrderInfo {
  bool infinite = false;
  std::uint64_t order = 0;  // valid when !infinite
  std::vector<Reduction> reductions;
};

// Exact order over Q, or infinite. Torsion injects into E(F_p) for every
// prime p >= 3 of good reduction at which P is integral, so two primes with
// different reduced orders prove P has infinite order; if all reduced orders
// agree on n, [n]P is computed over Q and decides.
OrderInfo point_order(const WeierstrassCurve& E, const CurvePoint& P, unsigned primes = 3);

}  // namespace fibra
