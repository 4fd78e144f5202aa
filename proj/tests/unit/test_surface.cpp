#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace fibra;
using namespace fibra::testing;

namespace {

// t -> 1/t: c'[i][j][k] = c[i][j][2 - k].
Surface222 flip_t(const Surface222& S) {
  std::array<Rational, 27> c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(Surface222::index(i, j, k))] = S.coeff(i, j, 2 - k);
  return Surface222(c);
}

bool proportional(const BinaryQuartic& a, const BinaryQuartic& b) {
  std::optional<Rational> ratio;
  for (int k = 0; k < 5; ++k) {
    if ((a.a[k] == 0) != (b.a[k] == 0)) return false;
    if (a.a[k] == 0) continue;
    const Rational r = a.a[k] / b.a[k];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

}  // namespace

TEST_CASE("validation") {
  const Surface222 S = load_surface("vetted_sample.json");
  const ValidationReport ok = S.validate();
  CHECK(ok.valid);
  CHECK(ok.failures.empty());

  const ValidationReport product = load_surface("invalid_product.json").validate();
  CHECK_FALSE(product.valid);
  CHECK_FALSE(product.failures.empty());

  const ValidationReport zero = Surface222(std::array<Rational, 27>{}).validate();
  CHECK_FALSE(zero.valid);

  CHECK(load_surface("isotrivial.json").validate().valid);
}

TEST_CASE("vertical lines are reported") {
  // F = (x - 1) G1 + (t - 2) G2 contains the line x = 1, t = 2.
  const Polynomial x = Polynomial::variable(3, kVarX), y = Polynomial::variable(3, kVarY), t = Polynomial::variable(3, kVarT);
  const Polynomial G1 = x * y * y + t * t * y + Polynomial::constant(3, Rational(3)) + x * t;
  const Polynomial G2 = y * y * x * x + Rational(2) * x * x + t * y * y - y;
  const Surface222 S = Surface222::from_polynomial((x - Rational(1)) * G1 + (t - Rational(2)) * G2);
  const ValidationReport r = S.validate();
  REQUIRE(r.valid);
  bool seen = false;
  for (const auto& [x0, t0] : r.vertical_lines) seen = seen || (x0 == P1Point::affine(1) && t0 == P1Point::affine(2));
  CHECK(seen);
}

TEST_CASE("fibre slices") {
  const Surface222 S = load_surface("vetted_sample.json");
  const FiberSlice generic = S.fiber_slice(1, P1Point::affine(Rational(5, 3)));
  CHECK(generic.smooth);
  CHECK(generic.q.a[0] != 0);
  const FiberSlice bad = S.fiber_slice(1, P1Point::affine(0));
  CHECK_FALSE(bad.smooth);
  CHECK(S.fiber_is_singular(1, P1Point::affine(0)));
  CHECK(S.fiber_is_singular(2, P1Point::affine(0)));
  CHECK_FALSE(S.fiber_is_singular(1, P1Point::infinity()));

  // The slice's quartic agrees with the coefficient-level construction.
  for (int axis = 1; axis <= 2; ++axis) {
    const UPoly q = branch_quartic(conic_bundle(S, axis, Rational(-7, 2)));
    const FiberSlice s = S.fiber_slice(axis, P1Point::affine(Rational(-7, 2)));
    for (int k = 0; k < 5; ++k) CHECK(s.q.a[4 - k] == (k < static_cast<int>(q.size()) ? q[k] : Rational(0)));
  }
}

TEST_CASE("chart consistency") {
  const Surface222 S = load_surface("vetted_sample.json");
  const Surface222 T = flip_t(S);
  for (const Rational& b : {Rational(0), Rational(2), Rational(-1, 3)}) {
    const P1Point here = P1Point::affine(b);
    const P1Point there = b == 0 ? P1Point::infinity() : P1Point::affine(1 / b);
    CHECK(proportional(S.fiber_slice(1, here).q, T.fiber_slice(1, there).q));
  }
  CHECK(proportional(S.fiber_slice(1, P1Point::make(Rational(2), Rational(4))).q,
                     S.fiber_slice(1, P1Point::affine(Rational(1, 2))).q));
  // Points map across the charts.
  const SurfacePoint P = affine_point(Rational(0), Rational(-1, 4), Rational(-3));
  const SurfacePoint P2{P.x, P.y, P1Point::affine(Rational(-1, 3))};
  CHECK(S.contains(P));
  CHECK(T.contains(P2));
  CHECK(S.contains({P.x, P.y, P1Point::make(Rational(3), Rational(-1))}));
}

TEST_CASE("involution and lift") {
  const Surface222 S = load_surface("vetted_sample.json");
  const auto points = find_points(S, 6, 60);
  REQUIRE(points.size() >= 20);
  for (const SurfacePoint& P : points) {
    for (int axis = 1; axis <= 2; ++axis) {
      const SurfacePoint Q = S.involution(axis, P);
      CHECK(S.contains(Q));
      CHECK(Q.x == P.x);
      CHECK(Q.t == P.t);
      CHECK(S.involution(axis, Q) == P);
      const FiberSlice slice = S.fiber_slice(axis, P);
      const QuarticPoint z = S.lift(slice, P);
      CHECK(on_quartic(slice.q, z));
      CHECK(S.lift(slice, Q) == z.conjugate());
    }
  }
  CHECK_THROWS_AS(S.involution(1, affine_point(Rational(1), Rational(1), Rational(1))), Error);
  CHECK_THROWS_AS(S.involution(3, points.front()), Error);
}

TEST_CASE("flips in x and t stay on the surface") {
  const Surface222 S = load_surface("vetted_sample.json");
  for (const SurfacePoint& P : find_points(S, 5, 30)) {
    CHECK(S.contains(S.flip(kVarX, P)));
    CHECK(S.contains(S.flip(kVarT, P)));
  }
}

TEST_CASE("j-maps, degrees and M") {
  const Surface222 S = load_surface("vetted_sample.json");
  for (int axis = 1; axis <= 2; ++axis) {
    CHECK(S.j_degree(axis) == 24);
    CHECK(S.chi_degree(axis) == 4);
    const RationalFunction j = S.j_map(axis);
    for (const Rational& b : {Rational(3), Rational(-2, 5), Rational(7, 4)}) {
      CHECK(j.evaluate(b) == j_from_quartic(branch_quartic(conic_bundle(S, axis, b))));
    }
  }
  const Surface222 iso = load_surface("isotrivial.json");
  CHECK_FALSE(iso.j_degree(1).has_value());
  CHECK(iso.j_map(1).evaluate(Rational(5)) == 1728);
  CHECK(iso.j_degree(2).has_value());
}

TEST_CASE("singular points of fibres") {
  const Surface222 S = load_surface("vetted_sample.json");
  const SurfacePoint O = affine_point(0, 0, 0);
  CHECK(S.is_singular_point_of_fiber(1, O));
  CHECK(S.is_singular_point_of_fiber(2, O));
  CHECK_FALSE(S.is_singular_point_of_fiber(1, affine_point(Rational(0), Rational(-1, 4), Rational(-3))));
}

TEST_CASE("polynomial round trip") {
  const Surface222 S = load_surface("vetted_sample.json");
  const Surface222 T = Surface222::from_polynomial(S.polynomial());
  CHECK(T.coefficients() == S.coefficients());
  const Polynomial y = Polynomial::variable(3, kVarY);
  CHECK_THROWS_AS(Surface222::from_polynomial(y * y * y), Error);
}
