#include "surface.hpp"

#include <map>

namespace fibra {

P1Point P1Point::make(const Rational& u0, const Rational& u1) {
  if (u0 == 0 && u1 == 0) throw Error(ErrorCode::InvalidArgument, "[0:0] is not a point of P^1");
  return {u0, u1};
}

Rational P1Point::value() const {
  if (is_infinity()) throw Error(ErrorCode::Precondition, "affine value of the point at infinity");
  return u0 / u1;
}

P1Point P1Point::normalized() const { return is_infinity() ? infinity() : affine(u0 / u1); }

std::string to_string(const P1Point& p) { return p.is_infinity() ? "inf" : p.value().get_str(); }

const P1Point& SurfacePoint::coord(int var) const {
  switch (var) {
    case kVarX: return x;
    case kVarY: return y;
    case kVarT: return t;
  }
  throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
}

P1Point& SurfacePoint::coord(int var) {
  return const_cast<P1Point&>(static_cast<const SurfacePoint&>(*this).coord(var));
}

namespace {

// -1, 0, 1 comparing normalized P^1 values, infinity last.
int compare_p1(const P1Point& a, const P1Point& b) {
  if (a.is_infinity() || b.is_infinity()) return static_cast<int>(a.is_infinity()) - static_cast<int>(b.is_infinity());
  const Rational va = a.value();
  const Rational vb = b.value();
  return va < vb ? -1 : (vb < va ? 1 : 0);
}

Rational hpow(const Rational& u0, const Rational& u1, int i, int n) {
  return rational_pow(u0, static_cast<unsigned>(i)) * rational_pow(u1, static_cast<unsigned>(n - i));
}

}  // namespace

bool point_less(const SurfacePoint& a, const SurfacePoint& b) {
  for (int v = 0; v < 3; ++v) {
    const int c = compare_p1(a.coord(v), b.coord(v));
    if (c != 0) return c < 0;
  }
  return false;
}

void check_axis(int axis) {
  if (axis != 1 && axis != 2) throw Error(ErrorCode::InvalidArgument, "axis must be 1 or 2");
}

int base_variable(int axis) {
  check_axis(axis);
  return axis == 1 ? kVarT : kVarX;
}

int fiber_variable(int axis) {
  check_axis(axis);
  return axis == 1 ? kVarX : kVarT;
}

Rational evaluate_fiber_form(const FiberForm& g, const P1Point& s, const P1Point& y) {
  Rational sum(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Rational& c = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c != 0) sum += c * hpow(s.u0, s.u1, i, 2) * hpow(y.u0, y.u1, j, 2);
    }
  }
  return sum;
}

std::array<Rational, 4> fiber_form_gradient(const FiberForm& g, const P1Point& s, const P1Point& y) {
  std::array<Rational, 4> grad{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Rational& c = g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c == 0) continue;
      const Rational ys = hpow(y.u0, y.u1, j, 2);
      const Rational ss = hpow(s.u0, s.u1, i, 2);
      if (i > 0) grad[0] += c * i * hpow(s.u0, s.u1, i - 1, 1) * ys;
      if (i < 2) grad[1] += c * (2 - i) * hpow(s.u0, s.u1, i, 1) * ys;
      if (j > 0) grad[2] += c * j * ss * hpow(y.u0, y.u1, j - 1, 1);
      if (j < 2) grad[3] += c * (2 - j) * ss * hpow(y.u0, y.u1, j, 1);
    }
  }
  return grad;
}

Surface222::Surface222(const std::array<Rational, 27>& coeffs) : c_(coeffs) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        F_.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k)},
                    coeff(i, j, k));
      }
    }
  }
  const auto conic = F_.coefficients_in(kVarY);
  auto part = [&](std::size_t j) { return j < conic.size() ? conic[j] : Polynomial(3); };
  const Polynomial A = part(2), B = part(1), C = part(0);
  Q_ = B * B - Rational(4) * A * C;

  for (int axis = 1; axis <= 2; ++axis) {
    const auto k = static_cast<std::size_t>(axis - 1);
    auto qc = Q_.coefficients_in(fiber_variable(axis));
    qc.resize(5, Polynomial(3));
    // Quartic in s read from the top: a0 = coefficient of s^4.
    const Polynomial& a0 = qc[4];
    const Polynomial& a1 = qc[3];
    const Polynomial& a2 = qc[2];
    const Polynomial& a3 = qc[1];
    const Polynomial& a4 = qc[0];
    const Polynomial I = Rational(12) * a0 * a4 - Rational(3) * a1 * a3 + a2 * a2;
    const Polynomial J = Rational(72) * a0 * a2 * a4 + Rational(9) * a1 * a2 * a3 - Rational(27) * a0 * a3 * a3 -
                         Rational(27) * a1 * a1 * a4 - Rational(2) * a2 * a2 * a2;
    const std::array<int, 3> to_base{0, 0, 0};
    I_[k] = I.remap(1, to_base);
    J_[k] = J.remap(1, to_base);
    delta_[k] = Rational(4) * I_[k].pow(3) - J_[k] * J_[k];
  }
}

Surface222 Surface222::from_polynomial(const Polynomial& F) {
  if (F.arity() != 3) throw Error(ErrorCode::ArityMismatch, "surface polynomial must be in x, y, t");
  std::array<Rational, 27> c{};
  for (const auto& [e, v] : F.terms()) {
    if (e[0] > 2 || e[1] > 2 || e[2] > 2) throw Error(ErrorCode::InvalidSurface, "degree exceeds 2 in some variable");
    c[static_cast<std::size_t>(index(static_cast<int>(e[0]), static_cast<int>(e[1]), static_cast<int>(e[2])))] = v;
  }
  return Surface222(c);
}

Rational Surface222::evaluate(const SurfacePoint& P) const {
  Rational sum(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const Rational& c = coeff(i, j, k);
        if (c == 0) continue;
        sum += c * hpow(P.x.u0, P.x.u1, i, 2) * hpow(P.y.u0, P.y.u1, j, 2) * hpow(P.t.u0, P.t.u1, k, 2);
      }
    }
  }
  return sum;
}

void Surface222::require_on_surface(const SurfacePoint& P) const {
  for (int v = 0; v < 3; ++v) {
    const auto& c = P.coord(v);
    if (c.u0 == 0 && c.u1 == 0) throw Error(ErrorCode::InvalidArgument, "[0:0] is not a point of P^1");
  }
  if (!contains(P)) throw Error(ErrorCode::NotOnCurve, "point is not on the surface");
}

FiberSlice Surface222::fiber_slice(int axis, const P1Point& base) const {
  check_axis(axis);
  if (base.u0 == 0 && base.u1 == 0) throw Error(ErrorCode::InvalidArgument, "[0:0] is not a point of P^1");
  FiberSlice slice;
  slice.axis = axis;
  slice.base = base.normalized();
  bool any = false;
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < 3; ++j) {
      Rational v(0);
      for (int k = 0; k < 3; ++k) {
        const Rational& c = axis == 1 ? coeff(s, j, k) : coeff(k, j, s);
        if (c != 0) v += c * hpow(base.u0, base.u1, k, 2);
      }
      any = any || v != 0;
      slice.form[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = v;
    }
  }
  if (!any) throw Error(ErrorCode::Degenerate, "the surface contains the whole fibre over " + to_string(base));
  auto column = [&](std::size_t j) {
    std::array<Rational, 3> v{slice.form[0][j], slice.form[1][j], slice.form[2][j]};
    return Polynomial::univariate(v);
  };
  slice.a = column(2);
  slice.b = column(1);
  slice.c = column(0);
  const Polynomial q = slice.b * slice.b - Rational(4) * slice.a * slice.c;
  auto dense = q.dense();
  dense.resize(5, Rational(0));
  slice.q = BinaryQuartic::from_ascending(dense);
  slice.smooth = is_nondegenerate(slice.q);
  return slice;
}

SurfacePoint Surface222::flip(int var, const SurfacePoint& P) const {
  if (var < 0 || var > 2) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
  require_on_surface(P);
  // Coefficients of v0^2, v0 v1, v1^2 with the other coordinates fixed.
  std::array<Rational, 3> coef{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        const Rational& c = coeff(i, j, k);
        if (c == 0) continue;
        const std::array<int, 3> e{i, j, k};
        Rational term = c;
        for (int w = 0; w < 3; ++w) {
          if (w == var) continue;
          const auto& pw = P.coord(w);
          term *= hpow(pw.u0, pw.u1, e[static_cast<std::size_t>(w)], 2);
        }
        coef[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += term;
      }
    }
  }
  const Rational& alpha = coef[2];
  const Rational& beta = coef[1];
  const Rational& gamma = coef[0];
  const P1Point& v = P.coord(var);
  Rational n0, n1;
  if (v.u1 != 0) {
    n0 = -beta * v.u1 - alpha * v.u0;
    n1 = alpha * v.u1;
  } else {
    n0 = -gamma;
    n1 = beta;
  }
  if (n0 == 0 && n1 == 0) {
    throw Error(ErrorCode::SingularPosition, "the quadratic in the moving coordinate vanishes identically");
  }
  SurfacePoint R = P;
  R.coord(var) = P1Point{n0, n1}.normalized();
  return R;
}

SurfacePoint Surface222::involution(int axis, const SurfacePoint& P) const {
  check_axis(axis);
  return flip(kVarY, P);
}

QuarticPoint Surface222::lift(const FiberSlice& slice, const SurfacePoint& P) const {
  const P1Point s = P.coord(fiber_variable(slice.axis)).normalized();
  const P1Point y = P.y.normalized();
  if (!(P.coord(base_variable(slice.axis)) == slice.base)) {
    throw Error(ErrorCode::InvalidArgument, "point is not on this fibre");
  }
  Rational a, b;
  if (s.is_infinity()) {
    a = slice.form[2][2];
    b = slice.form[2][1];
  } else {
    const Rational sv = s.value();
    a = slice.a(sv);
    b = slice.b(sv);
  }
  const Rational z = y.is_infinity() ? Rational(-b) : Rational(2 * a * y.value() + b);
  QuarticPoint L = s.is_infinity() ? QuarticPoint::infinity(z) : QuarticPoint::affine(s.value(), z);
  if (!on_quartic(slice.q, L)) throw Error(ErrorCode::NotOnCurve, "point is not on the fibre");
  return L;
}

const Polynomial& Surface222::singular_locus(int axis) const {
  check_axis(axis);
  return delta_[static_cast<std::size_t>(axis - 1)];
}

const Polynomial& Surface222::invariant_I(int axis) const {
  check_axis(axis);
  return I_[static_cast<std::size_t>(axis - 1)];
}

const Polynomial& Surface222::invariant_J(int axis) const {
  check_axis(axis);
  return J_[static_cast<std::size_t>(axis - 1)];
}

bool Surface222::fiber_is_singular(int axis, const P1Point& base) const {
  const Polynomial& d = singular_locus(axis);
  if (d.is_zero()) return true;
  if (base.is_infinity()) return d.degree(0) < 24;
  return d(base.value()) == 0;
}

RationalFunction Surface222::j_map(int axis) const {
  const Polynomial& d = singular_locus(axis);
  if (d.is_zero()) throw Error(ErrorCode::Degenerate, "every fibre of this axis is singular");
  const Polynomial& I = invariant_I(axis);
  return {Rational(1728 * 4) * I.pow(3), d};
}

std::optional<int> Surface222::j_degree(int axis) const {
  const RationalFunction j = j_map(axis);
  if (j.is_constant()) return std::nullopt;
  return j.degree();
}

int Surface222::chi_degree(int axis) const {
  check_axis(axis);
  return 4;
}

bool Surface222::is_singular_point_of_fiber(int axis, const SurfacePoint& P) const {
  require_on_surface(P);
  const FiberSlice slice = fiber_slice(axis, P);
  if (slice.smooth) return false;
  const auto grad = fiber_form_gradient(slice.form, P.coord(fiber_variable(axis)), P.y);
  for (const auto& g : grad) {
    if (g != 0) return false;
  }
  return true;
}

ValidationReport Surface222::validate() const {
  ValidationReport report;
  auto fail = [&](std::string message) {
    report.valid = false;
    report.failures.push_back(std::move(message));
  };
  if (F_.is_zero()) {
    fail("F is identically zero");
    return report;
  }
  const char* names = "xyt";
  for (int v = 0; v < 3; ++v) {
    if (F_.degree(v) < 2) {
      fail(std::string("F has degree < 2 in ") + names[v] + ", so it contains the divisor " + names[v] + " = inf");
      continue;
    }
    std::map<Exponents, Polynomial> pieces;
    for (const auto& [e, c] : F_.terms()) {
      Exponents rest = e;
      rest[static_cast<std::size_t>(v)] = 0;
      auto [it, inserted] = pieces.try_emplace(rest, Polynomial(1));
      it->second.add_term({e[static_cast<std::size_t>(v)], 0, 0}, c);
    }
    Polynomial g(1);
    for (const auto& [rest, piece] : pieces) g = poly_gcd(g, piece);
    if (g.degree(0) > 0) {
      fail(std::string("F has a factor depending only on ") + names[v] + ": " + to_string(g, std::string(1, names[v])));
    }
  }
  for (int axis = 1; axis <= 2; ++axis) {
    if (singular_locus(axis).is_zero()) {
      fail("generic fibre of axis " + std::to_string(axis) + " is not genus one: 4I^3 - J^2 vanishes identically");
    }
  }
  if (!report.valid) return report;

  // Vertical lines sit over rational singular fibres of axis 1.
  const Polynomial& d1 = singular_locus(1);
  std::vector<P1Point> bases;
  for (const auto& r : rational_roots(d1)) {
    if (bases.empty() || !(bases.back() == P1Point::affine(r))) bases.push_back(P1Point::affine(r));
  }
  if (d1.degree(0) < 24) bases.push_back(P1Point::infinity());
  for (const auto& t0 : bases) {
    const FiberSlice slice = fiber_slice(1, t0);
    const Polynomial g = poly_gcd(poly_gcd(slice.a, slice.b), slice.c);
    std::vector<P1Point> xs;
    if (!g.is_zero()) {
      for (const auto& r : rational_roots(g)) {
        if (xs.empty() || !(xs.back() == P1Point::affine(r))) xs.push_back(P1Point::affine(r));
      }
    }
    if (slice.a.degree(0) < 2 && slice.b.degree(0) < 2 && slice.c.degree(0) < 2) xs.push_back(P1Point::infinity());
    for (const auto& x0 : xs) {
      report.vertical_lines.emplace_back(x0, t0);
      report.warnings.push_back("V contains the line x = " + to_string(x0) + ", t = " + to_string(t0));
    }
  }
  return report;
}

}  // namespace fibra
