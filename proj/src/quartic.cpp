#include "quartic.hpp"

namespace fibra {

BinaryQuartic BinaryQuartic::from_ascending(std::span<const Rational> c) {
  if (c.size() > 5) throw Error(ErrorCode::InvalidArgument, "quartic has at most five coefficients");
  BinaryQuartic q;
  for (std::size_t k = 0; k < c.size(); ++k) q.a[4 - k] = c[k];
  return q;
}

bool BinaryQuartic::is_zero() const {
  for (const auto& v : a) {
    if (v != 0) return false;
  }
  return true;
}

Rational BinaryQuartic::operator()(const Rational& x) const {
  Rational acc(0);
  for (const auto& v : a) acc = acc * x + v;
  return acc;
}

BinaryQuartic BinaryQuartic::translated(const Rational& h) const {
  // Repeated synthetic division by (x - h) yields the Taylor coefficients.
  std::array<Rational, 5> c = a;
  for (int i = 0; i < 4; ++i) {
    for (int k = 1; k <= 4 - i; ++k) c[static_cast<std::size_t>(k)] += h * c[static_cast<std::size_t>(k - 1)];
  }
  return {c};
}

BinaryQuartic BinaryQuartic::reversed() const { return {{a[4], a[3], a[2], a[1], a[0]}}; }

QuarticInvariants quartic_invariants(const BinaryQuartic& q) {
  const auto& [a0, a1, a2, a3, a4] = q.a;
  Rational I = 12 * a0 * a4 - 3 * a1 * a3 + a2 * a2;
  Rational J = 72 * a0 * a2 * a4 + 9 * a1 * a2 * a3 - 27 * a0 * a3 * a3 - 27 * a1 * a1 * a4 - 2 * a2 * a2 * a2;
  return {I, J};
}

Rational quartic_discriminant(const BinaryQuartic& q) {
  const auto [I, J] = quartic_invariants(q);
  return 4 * I * I * I - J * J;
}

bool is_nondegenerate(const BinaryQuartic& q) { return quartic_discriminant(q) != 0; }

bool on_quartic(const BinaryQuartic& q, const QuarticPoint& P) {
  if (P.at_infinity) return P.z * P.z == q.a[0];
  return P.z * P.z == q(P.x);
}

WeierstrassCurve jacobian_of_quartic(const BinaryQuartic& q) {
  if (!is_nondegenerate(q)) throw Error(ErrorCode::Degenerate, "quartic has a repeated projective root");
  const auto [I, J] = quartic_invariants(q);
  return {-27 * I, -27 * J};
}

QuarticMap::QuarticMap(const BinaryQuartic& q, const QuarticPoint& base)
    : q_(q), base_(base), E_(jacobian_of_quartic(q)) {
  if (!on_quartic(q, base)) throw Error(ErrorCode::NotOnCurve, "base point is not on the quartic curve");
  BinaryQuartic work = q;
  QuarticPoint start = base;
  if (base.at_infinity) {
    reversed_ = true;
    work = q.reversed();
    start = QuarticPoint::affine(Rational(0), base.z);
  }
  shift_ = start.x;
  const BinaryQuartic t = work.translated(shift_);
  qa_ = t.a[0];
  qb_ = t.a[1];
  qc_ = t.a[2];
  qd_ = t.a[3];
  qe_ = t.a[4];
  s_ = start.z;
  kind_ = s_ == 0 ? Kind::Branch : Kind::Generic;
}

QuarticPoint QuarticMap::normalize(const QuarticPoint& P) const {
  QuarticPoint R = P;
  if (reversed_) {
    if (P.at_infinity) {
      R = QuarticPoint::affine(Rational(0), P.z);
    } else if (P.x == 0) {
      R = QuarticPoint::infinity(P.z);
    } else {
      const Rational inv = 1 / P.x;
      R = QuarticPoint::affine(inv, P.z * inv * inv);
    }
  }
  if (!R.at_infinity) R.x -= shift_;
  return R;
}

CurvePoint QuarticMap::forward(const QuarticPoint& P) const {
  if (!on_quartic(q_, P)) throw Error(ErrorCode::NotOnCurve, "point is not on the quartic curve");
  const QuarticPoint R = normalize(P);
  const Rational& u = R.x;
  const Rational& v = R.z;

  if (kind_ == Kind::Branch) {
    // y^2 = X^3 + c X^2 + b d X + a d^2 with X = d/u, Y = d v / u^2.
    Rational X, Y;
    if (R.at_infinity) {
      X = 0;
      Y = qd_ * v;
    } else {
      if (u == 0) return CurvePoint::at_infinity();
      X = qd_ / u;
      Y = qd_ * v / (u * u);
    }
    return E_.checked_point(9 * X + 3 * qc_, 27 * Y);
  }

  // Long Weierstrass model attached to the rational point u = 0, v = s.
  const Rational& s = s_;
  const Rational a1 = qd_ / s;
  const Rational a2 = qc_ - qd_ * qd_ / (4 * s * s);
  const Rational a3 = 2 * s * qb_;
  const Rational b2 = a1 * a1 + 4 * a2;
  Rational x, y;
  if (R.at_infinity) {
    x = 2 * s * v;
    y = 0;
  } else if (u == 0) {
    if (v == s) return CurvePoint::at_infinity();
    x = -a2;
    y = a1 * a2 - a3;
  } else {
    const Rational u2 = u * u;
    x = (2 * s * (v + s) + qd_ * u) / u2;
    y = (4 * s * s * (v + s) + 2 * s * (qd_ * u + qc_ * u2) - qd_ * qd_ * u2 / (2 * s)) / (u2 * u);
  }
  return E_.checked_point((36 * x + 3 * b2) / 4, 27 * (2 * y + a1 * x + a3) / 2);
}

}  // namespace fibra
