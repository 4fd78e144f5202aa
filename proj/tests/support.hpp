#pragma once
// Test helpers: fixtures, point search and oracles that do not go through
// the library's own fibre, Weierstrass or division-polynomial code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace fibra::testing {

inline Json load_fixture(const std::string& name) {
  std::ifstream in(std::string(FIBRA_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return Json::parse(ss.str());
}

inline Surface222 load_surface(const std::string& name) { return surface_from_json(load_fixture(name)); }

inline SurfacePoint affine_point(const Rational& x, const Rational& y, const Rational& t) {
  return {P1Point::affine(x), P1Point::affine(y), P1Point::affine(t)};
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials, ascending coefficients.

using UPoly = std::vector<Rational>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly uadd(const UPoly& a, const UPoly& b, const Rational& scale = 1) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += scale * b[i];
  trim(r);
  return r;
}

inline UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline Rational ueval(const UPoly& p, const Rational& x) {
  Rational v(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

inline UPoly uderiv(const UPoly& p) {
  UPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(Rational(static_cast<long>(i)) * p[i]);
  trim(r);
  return r;
}

inline UPoly umod(UPoly a, const UPoly& b) {
  trim(a);
  while (!a.empty() && a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

inline UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// Fibre data read straight from the coefficient array.

struct ConicBundle {
  UPoly A, B, C;  // F = A(s) y^2 + B(s) y + C(s) on the fibre
};

// Affine base value b; s is x on axis 1 and t on axis 2.
inline ConicBundle conic_bundle(const Surface222& S, int axis, const Rational& b) {
  ConicBundle out;
  UPoly* parts[3] = {&out.C, &out.B, &out.A};
  for (int j = 0; j < 3; ++j) {
    UPoly p(3);
    for (int s = 0; s < 3; ++s)
      for (int k = 0; k < 3; ++k) {
        const Rational& c = axis == 1 ? S.coeff(s, j, k) : S.coeff(k, j, s);
        p[static_cast<std::size_t>(s)] += c * rational_pow(b, static_cast<unsigned>(k));
      }
    trim(p);
    *parts[j] = p;
  }
  return out;
}

inline UPoly branch_quartic(const ConicBundle& cb) { return uadd(umul(cb.B, cb.B), umul(cb.A, cb.C), -4); }

// Repeated projective root (degree <= 2 counts as a double root at infinity).
inline bool quartic_singular_direct(const UPoly& q) {
  if (q.empty()) return true;
  if (udeg(q) <= 2) return true;
  return udeg(ugcd(q, uderiv(q))) >= 1;
}

struct Invariants {
  Rational I, J;
};

inline Invariants invariants(const UPoly& q) {
  auto c = [&](int k) { return k < static_cast<int>(q.size()) ? q[static_cast<std::size_t>(k)] : Rational(0); };
  const Rational a = c(4), b = c(3), cc = c(2), d = c(1), e = c(0);
  return {12 * a * e - 3 * b * d + cc * cc,
          72 * a * cc * e + 9 * b * cc * d - 27 * a * d * d - 27 * e * b * b - 2 * cc * cc * cc};
}

inline std::optional<Rational> j_from_quartic(const UPoly& q) {
  const Invariants inv = invariants(q);
  const Rational den = 4 * inv.I * inv.I * inv.I - inv.J * inv.J;
  if (den == 0) return std::nullopt;
  return 1728 * 4 * inv.I * inv.I * inv.I / den;
}

// ---------------------------------------------------------------------------
// Hankel oracle. With z_k the Taylor coefficients of sqrt(q) at the point
// (z_0 = 2 A y + B), the class of (alpha(P)) - (P) has order dividing n >= 2
// iff det(z_{i+j+1})_{1<=i,j<=n-1} = 0, and order 1 iff z_0 = 0. Torsion over
// Q has order at most 12, so 0 (none up to 12) means infinite order.

inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

inline UPoly taylor_shift(const UPoly& p, const Rational& h) {
  // p(h + u) in u
  UPoly r;
  UPoly power{Rational(1)};
  const UPoly lin{h, Rational(1)};
  for (const Rational& c : p) {
    r = uadd(r, power, c);
    power = umul(power, lin);
  }
  return r;
}

// Fibre over P for the affine point P; nullopt when the fibre is singular.
inline std::optional<unsigned> hankel_order(const Surface222& S, int axis, const SurfacePoint& P, unsigned max_n = 12) {
  const Rational x = P.x.value(), y = P.y.value(), t = P.t.value();
  const Rational base = axis == 1 ? t : x;
  const Rational s0 = axis == 1 ? x : t;
  const ConicBundle cb = conic_bundle(S, axis, base);
  const UPoly q = branch_quartic(cb);
  if (quartic_singular_direct(q)) return std::nullopt;
  const Rational z0 = 2 * ueval(cb.A, s0) * y + ueval(cb.B, s0);
  if (z0 == 0) return 1U;
  UPoly qs = taylor_shift(q, s0);
  const std::size_t N = 2 * max_n;
  qs.resize(N + 1);
  std::vector<Rational> z{z0};
  for (std::size_t k = 1; k <= N; ++k) {
    Rational acc = qs[k];
    for (std::size_t i = 1; i < k; ++i) acc -= z[i] * z[k - i];
    z.push_back(acc / (2 * z0));
  }
  for (unsigned n = 2; n <= max_n; ++n) {
    std::vector<std::vector<Rational>> m(n - 1, std::vector<Rational>(n - 1));
    for (unsigned i = 1; i < n; ++i)
      for (unsigned j = 1; j < n; ++j) m[i - 1][j - 1] = z[i + j + 1];
    if (determinant(m) == 0) return n;
  }
  return 0U;
}

// ---------------------------------------------------------------------------
// Rational points by height, from the coefficients directly.

inline std::vector<Rational> rationals_up_to(unsigned h) {
  std::vector<Rational> out{Rational(0)};
  for (unsigned den = 1; den <= h; ++den)
    for (unsigned num = 1; num <= h; ++num) {
      if (std::gcd(num, den) != 1) continue;
      out.push_back(Rational(num, den));
      out.push_back(Rational(-static_cast<long>(num), den));
    }
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
    const Integer ha = naive_height(a), hb = naive_height(b);
    return ha != hb ? ha < hb : a < b;
  });
  return out;
}

inline std::vector<SurfacePoint> find_points(const Surface222& S, unsigned height, std::size_t limit) {
  std::vector<SurfacePoint> out;
  const std::vector<Rational> values = rationals_up_to(height);
  for (const Rational& t : values) {
    const ConicBundle cb = conic_bundle(S, 1, t);
    for (const Rational& x : values) {
      const Rational A = ueval(cb.A, x), B = ueval(cb.B, x), C = ueval(cb.C, x);
      if (A == 0) {
        if (B != 0) out.push_back(affine_point(x, -C / B, t));
      } else {
        const Rational D = B * B - 4 * A * C;
        if (!is_square(D)) continue;
        const Rational r = exact_sqrt(D);
        out.push_back(affine_point(x, (-B + r) / (2 * A), t));
        if (r != 0) out.push_back(affine_point(x, (-B - r) / (2 * A), t));
      }
      if (out.size() >= limit) return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Random data.

inline Rational random_rational(std::mt19937_64& rng, int bound, bool nonzero = false) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  for (;;) {
    const Rational r = make_rational(num(rng), den(rng));
    if (!nonzero || r != 0) return r;
  }
}

// Surface through P = (0,0,0) whose axis fibre over 0 is G0 = A y^2 + B y + C
// in (s, y), glued with random forms at the base values 1 and -1.
inline std::optional<Surface222> glue_fibre(const ConicBundle& g0, int axis, std::mt19937_64& rng) {
  std::array<Rational, 27> c{};
  // Lagrange basis at 0, 1, -1: 1 - b^2, (b^2 + b)/2, (b^2 - b)/2.
  const std::array<std::array<Rational, 3>, 3> lagrange{{{1, 0, -1}, {0, Rational(1, 2), Rational(1, 2)},
                                                          {0, Rational(-1, 2), Rational(1, 2)}}};
  std::array<std::array<std::array<Rational, 3>, 3>, 3> forms{};  // forms[node][s][y]
  const UPoly* parts[3] = {&g0.C, &g0.B, &g0.A};
  for (int j = 0; j < 3; ++j)
    for (int s = 0; s < 3 && s < static_cast<int>(parts[j]->size()); ++s) forms[0][s][j] = (*parts[j])[s];
  for (int node = 1; node < 3; ++node)
    for (int s = 0; s < 3; ++s)
      for (int j = 0; j < 3; ++j) forms[node][s][j] = random_rational(rng, 3);
  for (int node = 0; node < 3; ++node)
    for (int s = 0; s < 3; ++s)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const int idx = axis == 1 ? Surface222::index(s, j, k) : Surface222::index(k, j, s);
          c[static_cast<std::size_t>(idx)] += forms[node][s][j] * lagrange[node][k];
        }
  Surface222 S(c);
  if (!S.validate().valid) return std::nullopt;
  return S;
}

// A valid surface on which P = (0,0,0) has class order `order` (1, 2 or 3)
// on the given axis, with a smooth fibre through P. The fibre quartic is
// built from a prescribed square-root expansion z0 + z1 s + ... so the
// Hankel determinants vanish at the wanted size.
inline Surface222 designed_surface(unsigned order, int axis, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    ConicBundle g;
    const Rational c = random_rational(rng, 4, true);
    if (order == 1) {
      g.B = {0, random_rational(rng, 4), random_rational(rng, 4)};
      g.A = {random_rational(rng, 4), random_rational(rng, 4), random_rational(rng, 4)};
      g.C = {0, c};
    } else {
      std::array<Rational, 5> z{};
      const Rational b2 = random_rational(rng, 4, true);
      z[0] = random_rational(rng, 4, true);
      if (order == 2) {
        z[1] = random_rational(rng, 4);
        z[2] = random_rational(rng, 4);
        z[4] = (b2 * b2 - z[2] * z[2]) / (2 * z[0]);
      } else {
        z[3] = random_rational(rng, 4, true);
        z[1] = b2 * b2 / (2 * z[3]);
      }
      UPoly q(5);
      for (int k = 0; k <= 4; ++k)
        for (int i = 0; i <= k; ++i) q[static_cast<std::size_t>(k)] += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(k - i)];
      g.B = {z[0], random_rational(rng, 4), b2};
      const UPoly rest = uadd(umul(g.B, g.B), q, -1);  // s * (cubic), zero s^4 term
      UPoly A;
      for (std::size_t k = 1; k < rest.size(); ++k) A.push_back(rest[k] / (4 * c));
      trim(A);
      g.A = A;
      g.C = {0, c};
    }
    trim(g.A);
    trim(g.B);
    trim(g.C);
    if (quartic_singular_direct(branch_quartic(g))) continue;
    if (auto S = glue_fibre(g, axis, rng)) return *S;
  }
  throw std::runtime_error("could not design a surface");
}

// ---------------------------------------------------------------------------
// Exhaustive arithmetic on y^2 = x^3 + a x + b over F_p, p > 3.

struct BrutePoint {
  bool inf = true;
  std::uint64_t x = 0, y = 0;
};

struct BruteCurve {
  std::uint64_t p, a, b;

  std::uint64_t inv(std::uint64_t v) const { return pow_mod(v, p - 2, p); }
  std::uint64_t sub(std::uint64_t u, std::uint64_t v) const { return (u + p - v) % p; }

  BrutePoint add(const BrutePoint& P, const BrutePoint& Q) const {
    if (P.inf) return Q;
    if (Q.inf) return P;
    std::uint64_t lambda;
    if (P.x == Q.x) {
      if ((P.y + Q.y) % p == 0) return {};
      lambda = mul_mod((3 * mul_mod(P.x, P.x, p) + a) % p, inv(2 * P.y % p), p);
    } else {
      lambda = mul_mod(sub(Q.y, P.y), inv(sub(Q.x, P.x)), p);
    }
    const std::uint64_t x3 = sub(sub(mul_mod(lambda, lambda, p), P.x), Q.x);
    const std::uint64_t y3 = sub(mul_mod(lambda, sub(P.x, x3), p), P.y);
    return {false, x3, y3};
  }

  // Order by repeated addition.
  std::uint64_t order(const BrutePoint& P) const {
    BrutePoint R = P;
    std::uint64_t n = 1;
    while (!R.inf) {
      R = add(R, P);
      ++n;
    }
    return n;
  }

  std::uint64_t rhs(std::uint64_t x) const { return (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b) % p; }
};

// For every x in F_p, the order of a point of E(F_p-bar) with that
// x-coordinate. Such points lie on E(F_p) or on the quadratic twist
// d y^2 = x^3 + a x + b, which is E^d: Y^2 = X^3 + a d^2 X + b d^3 via
// X = d x, and the isomorphism over F_p^2 preserves orders.
inline std::vector<std::uint64_t> orders_by_x(const BruteCurve& E) {
  const std::uint64_t p = E.p;
  std::vector<std::int64_t> root(p, -1);
  for (std::uint64_t y = 0; y < p; ++y) root[mul_mod(y, y, p)] = static_cast<std::int64_t>(y);
  std::uint64_t d = 2;
  while (root[d] >= 0) ++d;
  const std::uint64_t d2 = mul_mod(d, d, p);
  const BruteCurve T{p, mul_mod(d2, E.a, p), mul_mod(mul_mod(d2, d, p), E.b, p)};
  std::vector<std::uint64_t> out(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t v = E.rhs(x);
    if (root[v] >= 0) {
      out[x] = E.order({false, x, static_cast<std::uint64_t>(root[v])});
    } else {
      const std::uint64_t X = mul_mod(d, x, p);
      const std::int64_t Y = root[T.rhs(X)];
      if (Y < 0) throw std::runtime_error("twist point missing");
      out[x] = T.order({false, X, static_cast<std::uint64_t>(Y)});
    }
  }
  return out;
}

}  // namespace fibra::testing
