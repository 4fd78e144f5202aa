#pragma once

// Genus-one double covers z^2 = q(x) with q a binary quartic, and their maps
// to the Jacobian Y^2 = X^3 - 27 I X - 27 J.

#include <array>
#include <optional>

#include "elliptic.hpp"

namespace fibra {

// q(x) = a[0] x^4 + a[1] x^3 + a[2] x^2 + a[3] x + a[4], read projectively:
// a[0] = 0 means a root at infinity.
struct BinaryQuartic {
  std::array<Rational, 5> a;

  static BinaryQuartic from_ascending(std::span<const Rational> c);
  bool is_zero() const;
  Rational operator()(const Rational& x) const;
  // Coefficients of q(x + h), same layout.
  BinaryQuartic translated(const Rational& h) const;
  // x^4 q(1/x).
  BinaryQuartic reversed() const;
};

struct QuarticInvariants {
  Rational I;
  Rational J;
};

QuarticInvariants quartic_invariants(const BinaryQuartic& q);
// 4 I^3 - J^2, zero iff q has a repeated projective root (or q = 0).
Rational quartic_discriminant(const BinaryQuartic& q);
bool is_nondegenerate(const BinaryQuartic& q);

// A point on z^2 = q(x). At infinity z is the limit of z / x^2, so z^2 = a[0].
struct QuarticPoint {
  bool at_infinity = false;
  Rational x;
  Rational z;

  static QuarticPoint affine(Rational x, Rational z) { return {false, std::move(x), std::move(z)}; }
  static QuarticPoint infinity(Rational z) { return {true, Rational(0), std::move(z)}; }
  QuarticPoint conjugate() const { return {at_infinity, x, -z}; }
  friend bool operator==(const QuarticPoint& a, const QuarticPoint& b) {
    return a.at_infinity == b.at_infinity && a.x == b.x && a.z == b.z;
  }
};

bool on_quartic(const BinaryQuartic& q, const QuarticPoint& P);

WeierstrassCurve jacobian_of_quartic(const BinaryQuartic& q);

// Isomorphism from z^2 = q(x) to its Jacobian model sending a chosen base
// point to O. Every point of the quartic curve has an image.
class QuarticMap {
 public:
  QuarticMap(const BinaryQuartic& q, const QuarticPoint& base);

  const WeierstrassCurve& curve() const noexcept { return E_; }
  CurvePoint forward(const QuarticPoint& P) const;

 private:
  enum class Kind { Generic, Branch };

  QuarticPoint normalize(const QuarticPoint& P) const;

  BinaryQuartic q_;
  QuarticPoint base_;
  WeierstrassCurve E_;
  bool reversed_ = false;
  Rational shift_;
  Kind kind_ = Kind::Generic;
  // Coefficients of the translated quartic, u^4 .. u^0.
  Rational qa_, qb_, qc_, qd_, qe_;
  Rational s_;
};

}  // namespace fibra
