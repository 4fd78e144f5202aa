#pragma once

// Hypersurfaces of tri-degree (2,2,2) in P^1 x P^1 x P^1 with coordinates
// ([x0:x1], [y0:y1], [t0:t1]). F is stored by its affine coefficients
// c[i][j][k] of x^i y^j t^k.
//
// Axis 1 projects to the t-line, axis 2 to the x-line. On either fibre the
// remaining coordinates are the fibre coordinate s (x on axis 1, t on axis 2)
// and y. Both fibrations use the involution that swaps the two y-roots of F
// with x and t fixed, so every fibre is the double cover z^2 = Q(s) branched
// over the zeros of Q = B^2 - 4AC, where F = A y^2 + B y + C.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "quartic.hpp"
#include "rational_function.hpp"

namespace fibra {

inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarT = 2;

struct P1Point {
  Rational u0{1};
  Rational u1{1};

  static P1Point affine(const Rational& v) { return {v, Rational(1)}; }
  static P1Point infinity() { return {Rational(1), Rational(0)}; }
  static P1Point make(const Rational& u0, const Rational& u1);

  bool is_infinity() const { return u1 == 0; }
  // Affine value; Precondition error at infinity.
  Rational value() const;
  P1Point normalized() const;
  friend bool operator==(const P1Point& a, const P1Point& b) { return a.u0 * b.u1 == a.u1 * b.u0; }
};

std::string to_string(const P1Point& p);

struct SurfacePoint {
  P1Point x;
  P1Point y;
  P1Point t;

  const P1Point& coord(int var) const;
  P1Point& coord(int var);
  SurfacePoint normalized() const { return {x.normalized(), y.normalized(), t.normalized()}; }
  friend bool operator==(const SurfacePoint& a, const SurfacePoint& b) {
    return a.x == b.x && a.y == b.y && a.t == b.t;
  }
};

// Lexicographic order on normalized affine data; infinity sorts last.
bool point_less(const SurfacePoint& a, const SurfacePoint& b);

int base_variable(int axis);
int fiber_variable(int axis);
void check_axis(int axis);

using FiberForm = std::array<std::array<Rational, 3>, 3>;  // g[i][j]: s^i y^j

struct FiberSlice {
  int axis = 1;
  P1Point base;
  FiberForm form;
  // F restricted to the fibre is a(s) y^2 + b(s) y + c(s).
  Polynomial a{1}, b{1}, c{1};
  BinaryQuartic q;
  bool smooth = false;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
  // Lines {x = x0, t = t0} inside V, the only curves vertical for both axes.
  std::vector<std::pair<P1Point, P1Point>> vertical_lines;
};

class Surface222 {
 public:
  explicit Surface222(const std::array<Rational, 27>& coeffs);
  // From an affine polynomial in (x, y, t) of degree <= 2 in each variable.
  static Surface222 from_polynomial(const Polynomial& F);

  static int index(int i, int j, int k) { return i * 9 + j * 3 + k; }
  const Rational& coeff(int i, int j, int k) const { return c_[static_cast<std::size_t>(index(i, j, k))]; }
  const std::array<Rational, 27>& coefficients() const noexcept { return c_; }
  const Polynomial& polynomial() const noexcept { return F_; }
  // Q = B^2 - 4AC as a polynomial in x and t (arity 3, y absent).
  const Polynomial& branch_polynomial() const noexcept { return Q_; }

  Rational evaluate(const SurfacePoint& P) const;
  bool contains(const SurfacePoint& P) const { return evaluate(P) == 0; }
  void require_on_surface(const SurfacePoint& P) const;

  ValidationReport validate() const;

  FiberSlice fiber_slice(int axis, const P1Point& base) const;
  FiberSlice fiber_slice(int axis, const SurfacePoint& P) const { return fiber_slice(axis, P.coord(base_variable(axis))); }

  // Second root of F as a quadratic in one variable, the others fixed.
  SurfacePoint flip(int var, const SurfacePoint& P) const;
  SurfacePoint involution(int axis, const SurfacePoint& P) const;

  // Point of z^2 = q(s) over P with z = 2 a y + b (z = -b when y is infinite).
  QuarticPoint lift(const FiberSlice& slice, const SurfacePoint& P) const;

  // 4 I^3 - J^2 of the fibre quartic, in the affine base coordinate. Its
  // homogeneous degree is 24, so the fibre at infinity is singular iff the
  // affine degree drops below 24.
  const Polynomial& singular_locus(int axis) const;
  bool fiber_is_singular(int axis, const P1Point& base) const;
  const Polynomial& invariant_I(int axis) const;
  const Polynomial& invariant_J(int axis) const;

  // j = 1728 * 4 I^3 / (4 I^3 - J^2). Degenerate if the family is singular.
  RationalFunction j_map(int axis) const;
  // Degree of j, or nullopt when j is constant.
  std::optional<int> j_degree(int axis) const;
  int chi_degree(int axis) const;

  bool is_singular_point_of_fiber(int axis, const SurfacePoint& P) const;

 private:
  std::array<Rational, 27> c_;
  Polynomial F_{3};
  Polynomial Q_{3};
  std::array<Polynomial, 2> I_{Polynomial(1), Polynomial(1)};
  std::array<Polynomial, 2> J_{Polynomial(1), Polynomial(1)};
  std::array<Polynomial, 2> delta_{Polynomial(1), Polynomial(1)};
};

// Partial derivatives of the bihomogeneous fibre form at (s, y).
std::array<Rational, 4> fiber_form_gradient(const FiberForm& g, const P1Point& s, const P1Point& y);
Rational evaluate_fiber_form(const FiberForm& g, const P1Point& s, const P1Point& y);

}  // namespace fibra
