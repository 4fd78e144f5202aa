#include "elliptic.hpp"

#include <algorithm>

namespace fibra {

WeierstrassCurve::WeierstrassCurve(const Rational& a, const Rational& b) : CurveT<Rational>{a, b} {
  if (4 * A * A * A + 27 * B * B == 0) throw Error(ErrorCode::SingularCurve, "4A^3 + 27B^2 = 0");
}

Rational WeierstrassCurve::discriminant() const { return -16 * (4 * A * A * A + 27 * B * B); }

Rational WeierstrassCurve::j_invariant() const {
  const Rational a3 = 4 * A * A * A;
  return 1728 * a3 / (a3 + 27 * B * B);
}

CurvePoint WeierstrassCurve::checked_point(const Rational& x, const Rational& y) const {
  auto P = CurvePoint::affine(x, y);
  if (!contains(P)) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");
  return P;
}

bool WeierstrassCurve::good_reduction(std::uint64_t p) const {
  if (p < 3) return false;
  const Integer pz(static_cast<unsigned long>(p));
  if (mod_floor(A.get_den(), pz) == 0 || mod_floor(B.get_den(), pz) == 0) return false;
  const Rational delta = 4 * A * A * A + 27 * B * B;
  return mod_floor(delta.get_num(), pz) != 0;
}

CurveModP WeierstrassCurve::reduce(std::uint64_t p) const {
  if (!good_reduction(p)) throw Error(ErrorCode::BadReduction, "bad reduction at p = " + std::to_string(p));
  return {Fp(reduce_mod(A, p), p), Fp(reduce_mod(B, p), p)};
}

Polynomial division_polynomial(unsigned r, const WeierstrassCurve& E) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "division polynomial index must be >= 1");
  const Polynomial one = Polynomial::constant(1, Rational(1));
  const auto f = division_polynomials(r, Polynomial::variable(1, 0), Polynomial::constant(1, E.A),
                                      Polynomial::constant(1, E.B), one);
  return f[r];
}

Polynomial torsion_polynomial(unsigned r, const WeierstrassCurve& E) {
  Polynomial f = division_polynomial(r, E);
  if (r % 2 == 0) {
    const Polynomial x = Polynomial::variable(1, 0);
    f *= x * x * x + E.A * x + E.B;
  }
  return f;
}

PolyModP division_polynomial_mod_p(unsigned r, const CurveModP& E) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "division polynomial index must be >= 1");
  const std::uint64_t p = E.A.modulus();
  const auto f = division_polynomials(r, PolyModP::x(p), PolyModP::constant(E.A.value(), p),
                                      PolyModP::constant(E.B.value(), p), PolyModP::constant(1, p));
  return f[r];
}

PolyModP torsion_polynomial_mod_p(unsigned r, const CurveModP& E) {
  PolyModP f = division_polynomial_mod_p(r, E);
  if (r % 2 == 0) {
    const std::uint64_t p = E.A.modulus();
    f = f * PolyModP({E.B.value(), E.A.value(), 0, 1}, p);
  }
  return f;
}

Polynomial universal_division_polynomial(unsigned r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "division polynomial index must be >= 1");
  const auto f = division_polynomials(r, Polynomial::variable(3, 0), Polynomial::variable(3, 1),
                                      Polynomial::variable(3, 2), Polynomial::constant(3, Rational(1)));
  return f[r];
}

int moebius(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "moebius(0)");
  int sign = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

Polynomial universal_exact_order_polynomial(unsigned r) {
  if (r < 3) throw Error(ErrorCode::InvalidArgument, "exact-order polynomial needs r >= 3");
  Polynomial num = Polynomial::constant(3, Rational(1));
  Polynomial den = Polynomial::constant(3, Rational(1));
  for (unsigned d = 3; d <= r; ++d) {
    if (r % d) continue;
    const int mu = moebius(r / d);
    if (mu == 1) num *= universal_division_polynomial(d);
    if (mu == -1) den *= universal_division_polynomial(d);
  }
  return exact_divide(num, den);
}

bool order_divides(const WeierstrassCurve& E, const CurvePoint& P, unsigned r) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "order_divides needs r >= 1");
  if (P.infinity) return true;
  if (!E.contains(P)) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");
  return torsion_polynomial(r, E)(P.x) == 0;
}

std::uint64_t count_points_mod_p(const CurveModP& E) {
  const std::uint64_t p = E.A.modulus();
  if (p < 3) throw Error(ErrorCode::InvalidArgument, "point counting needs an odd prime");
  const Fp delta = Fp(4, p) * E.A * E.A * E.A + Fp(27, p) * E.B * E.B;
  if (delta.is_zero()) throw Error(ErrorCode::BadReduction, "singular reduction mod " + std::to_string(p));
  // square_count[v] = number of y with y^2 = v
  std::vector<std::uint8_t> square_count(p, 0);
  for (std::uint64_t y = 0; y < p; ++y) ++square_count[mul_mod(y, y, p)];
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const Fp fx(x, p);
    n += square_count[(fx * fx * fx + E.A * fx + E.B).value()];
  }
  return n;
}

std::uint64_t count_points_mod_p(const WeierstrassCurve& E, std::uint64_t p) {
  if (!is_prime_u64(p) || p < 3) throw Error(ErrorCode::InvalidArgument, "point counting needs an odd prime");
  return count_points_mod_p(E.reduce(p));
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool integral_at(const Rational& v, std::uint64_t p) {
  return mod_floor(v.get_den(), Integer(static_cast<unsigned long>(p))) != 0;
}

}  // namespace

std::uint64_t point_order_mod_p(const CurveModP& E, const CurvePointModP& P, std::uint64_t group_order) {
  std::uint64_t n = group_order;
  for (const auto q : prime_factors(group_order)) {
    while (n % q == 0 && E.multiply(n / q, P).infinity) n /= q;
  }
  if (!E.multiply(n, P).infinity) throw Error(ErrorCode::Internal, "point order does not divide the group order");
  return n;
}

OrderInfo point_order(const WeierstrassCurve& E, const CurvePoint& P, unsigned primes) {
  if (primes < 2) throw Error(ErrorCode::InvalidArgument, "point_order needs at least two primes");
  if (!E.contains(P)) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");
  OrderInfo info;
  if (P.infinity) {
    info.order = 1;
    return info;
  }
  // More primes are drawn only while the reduced orders keep agreeing on an
  // order too large to verify cheaply over Q.
  constexpr std::uint64_t kDirectLimit = 64;
  constexpr unsigned kMaxPrimes = 16;
  std::uint64_t p = 5;
  while (true) {
    for (; info.reductions.size() < primes; p += 2) {
      if (!is_prime_u64(p) || !E.good_reduction(p) || !integral_at(P.x, p) || !integral_at(P.y, p)) continue;
      const CurveModP Ep = E.reduce(p);
      const CurvePointModP Pp = CurvePointModP::affine(Fp(reduce_mod(P.x, p), p), Fp(reduce_mod(P.y, p), p));
      const std::uint64_t n = count_points_mod_p(Ep);
      info.reductions.push_back({p, n, point_order_mod_p(Ep, Pp, n)});
      if (info.reductions.back().point_order != info.reductions.front().point_order) {
        info.infinite = true;
        return info;
      }
    }
    const std::uint64_t n = info.reductions.front().point_order;
    if (n <= kDirectLimit || primes >= kMaxPrimes) break;
    ++primes;
  }
  const std::uint64_t n = info.reductions.front().point_order;
  if (E.multiply(n, P).infinity) {
    info.order = n;
  } else {
    info.infinite = true;
  }
  return info;
}

}  // namespace fibra
