#include "exclusion.hpp"

#include <numeric>

namespace fibra {

const char* to_string(OrderResult::Kind kind) {
  switch (kind) {
    case OrderResult::Kind::Finite: return "finite";
    case OrderResult::Kind::Infinite: return "infinite";
    case OrderResult::Kind::Undefined: return "undefined";
  }
  return "undefined";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Undefined: return "undefined";
  }
  return "undefined";
}

const char* to_string(ComponentCertificate::Status s) {
  switch (s) {
    case ComponentCertificate::Status::Certified: return "certified";
    case ComponentCertificate::Status::Vertical: return "vertical";
    case ComponentCertificate::Status::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

OrderResult class_order(const Surface222& S, int axis, const SurfacePoint& P) {
  S.require_on_surface(P);
  const FiberSlice slice = S.fiber_slice(axis, P);
  OrderResult res;
  res.axis = axis;
  res.smooth = slice.smooth;
  if (!slice.smooth) return res;
  const QuarticPoint lifted = S.lift(slice, P);
  if (lifted.z == 0) {
    res.kind = OrderResult::Kind::Finite;
    res.order = 1;
    res.fixed_point = true;
    return res;
  }
  const QuarticMap map(slice.q, lifted);
  const CurvePoint image = map.forward(lifted.conjugate());
  const OrderInfo info = point_order(map.curve(), image);
  res.reductions = info.reductions;
  if (info.infinite) {
    res.kind = OrderResult::Kind::Infinite;
  } else {
    res.kind = OrderResult::Kind::Finite;
    res.order = info.order;
  }
  return res;
}

bool satisfies_xi(const Surface222& S, int axis, const SurfacePoint& P, std::uint64_t cutoff) {
  const OrderResult o = class_order(S, axis, P);
  if (!o.smooth) throw Error(ErrorCode::Precondition, "condition Xi is only defined on smooth fibres");
  return o.infinite() || o.order <= cutoff;
}

std::optional<bool> in_T_up_to(const Surface222& S, int axis, const SurfacePoint& P, std::uint64_t cutoff) {
  const OrderResult o = class_order(S, axis, P);
  if (!o.smooth) return std::nullopt;
  return o.finite() && o.order <= cutoff;
}

ZMembership in_Z(const Surface222& S, int axis, const SurfacePoint& P, std::uint64_t cutoff, bool strict_closure) {
  ZMembership z;
  z.order = class_order(S, axis, P);
  if (!z.order.smooth) {
    if (S.is_singular_point_of_fiber(axis, P)) {
      z.value = Tri::True;
      z.reason = "singular point of a singular fibre";
    } else if (strict_closure) {
      z.value = Tri::Undefined;
      z.reason = "nonsingular point of a singular fibre; closure of T not decided";
    } else {
      z.value = Tri::False;
      z.caveat = true;
      z.reason = "nonsingular point of a singular fibre, taken as outside Z";
    }
    return z;
  }
  if (z.order.finite() && z.order.order <= cutoff) {
    z.value = Tri::True;
    z.reason = "class order " + std::to_string(z.order.order) + " <= " + std::to_string(cutoff);
  } else {
    z.value = Tri::False;
    z.reason = z.order.infinite() ? "class of infinite order" : "class order above the cutoff";
  }
  return z;
}

// ---------------------------------------------------------------------------
// Symbolic exclusion equations

namespace {

Polynomial primitive_integer(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer lcm = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    const Integer n = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(lcm, g);
  scale.canonicalize();
  if (p.leading_coefficient() < 0) scale = -scale;
  return p * scale;
}

void check_budget(const Polynomial& p, std::size_t budget, unsigned r) {
  if (p.size() > budget) {
    throw Error(ErrorCode::Resource, "T-equation for r = " + std::to_string(r) + " exceeds the monomial budget of " +
                                         std::to_string(budget));
  }
}

}  // namespace

ExclusionEquations emit_T_equations(const Surface222& S, int axis, unsigned r, const EmitOptions& options) {
  check_axis(axis);
  if (r < 1 || r > kHardRMax) throw Error(ErrorCode::InvalidArgument, "r must lie in 1..15");
  if (r > options.r_max) {
    throw Error(ErrorCode::InvalidArgument, "r = " + std::to_string(r) + " exceeds r_max = " +
                                                std::to_string(options.r_max));
  }
  if (S.singular_locus(axis).is_zero()) throw Error(ErrorCode::InvalidSurface, "generic fibre is singular");
  ExclusionEquations out;
  out.axis = axis;
  out.r = r;
  const int s = fiber_variable(axis);
  const int base = base_variable(axis);
  const char* sname = s == kVarX ? "x" : "t";
  const char* bname = base == kVarX ? "x" : "t";
  if (r > 5) out.warnings.push_back("r > 5: symbolic cost grows quickly with r");

  // Taylor coefficients of the fibre quartic at the point, as polynomials.
  const Polynomial& e = S.branch_polynomial();
  const Polynomial d = e.derivative(s);
  const Polynomial c = Rational(1, 2) * d.derivative(s);
  const Polynomial b = Rational(1, 3) * c.derivative(s);

  out.degeneracy_loci.push_back(std::string(sname) + " = inf or " + bname + " = inf (equations live in the affine chart)");
  out.degeneracy_loci.push_back("singular fibres: 4I^3 - J^2 = 0 in " + std::string(bname));
  Polynomial gen(3);
  if (r == 1) {
    gen = e;
  } else if (r == 2) {
    out.degeneracy_loci.push_back("ramification: Q = 0");
    gen = Rational(8) * b * e * e - Rational(4) * c * d * e + d * d * d;
  } else {
    out.degeneracy_loci.push_back("ramification: Q = 0");
    const std::array<int, 3> from_base{base, 0, 0};
    const Polynomial A = Rational(-27) * S.invariant_I(axis).remap(3, from_base);
    const Polynomial B = Rational(-27) * S.invariant_J(axis).remap(3, from_base);
    const Polynomial N = Rational(9) * d * d - Rational(24) * c * e;
    const Polynomial D = Rational(4) * e;
    const Polynomial phi = universal_exact_order_polynomial(r);
    const auto by_x = phi.coefficients_in(0);
    const auto n = by_x.size() - 1;
    int max_a = 0, max_b = 0;
    for (const auto& [ex, v] : phi.terms()) {
      max_a = std::max(max_a, static_cast<int>(ex[1]));
      max_b = std::max(max_b, static_cast<int>(ex[2]));
    }
    std::vector<Polynomial> apow{Polynomial::constant(3, Rational(1))}, bpow{Polynomial::constant(3, Rational(1))};
    for (int k = 0; k < max_a; ++k) apow.push_back(apow.back() * A);
    for (int k = 0; k < max_b; ++k) bpow.push_back(bpow.back() * B);
    std::vector<Polynomial> npow{Polynomial::constant(3, Rational(1))}, dpow{Polynomial::constant(3, Rational(1))};
    for (std::size_t k = 0; k < n; ++k) {
      npow.push_back(npow.back() * N);
      dpow.push_back(dpow.back() * D);
      check_budget(npow.back(), options.monomial_budget, r);
      check_budget(dpow.back(), options.monomial_budget, r);
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (by_x[k].is_zero()) continue;
      Polynomial coeff(3);
      for (const auto& [ex, v] : by_x[k].terms()) coeff += v * apow[ex[1]] * bpow[ex[2]];
      gen += coeff * npow[k] * dpow[n - k];
      check_budget(gen, options.monomial_budget, r);
    }
  }
  check_budget(gen, options.monomial_budget, r);
  if (gen.is_zero()) throw Error(ErrorCode::Degenerate, "T-equation vanishes identically on this surface");
  out.generators.push_back(primitive_integer(gen));
  return out;
}

bool generators_vanish(const ExclusionEquations& eq, const SurfacePoint& P) {
  if (P.x.is_infinity() || P.t.is_infinity()) {
    throw Error(ErrorCode::Precondition, "T-equations are affine in x and t");
  }
  const std::array<Rational, 3> values{P.x.value(), Rational(0), P.t.value()};
  for (const auto& g : eq.generators) {
    if (g.evaluate(values) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fibre components

namespace {

Rational evaluate_bihomogeneous(const Polynomial& f, int ds, int dy, const P1Point& s, const P1Point& y) {
  Rational sum(0);
  for (const auto& [e, c] : f.terms()) {
    const int i = static_cast<int>(e[0]);
    const int j = static_cast<int>(e[1]);
    sum += c * rational_pow(s.u0, static_cast<unsigned>(i)) * rational_pow(s.u1, static_cast<unsigned>(ds - i)) *
           rational_pow(y.u0, static_cast<unsigned>(j)) * rational_pow(y.u1, static_cast<unsigned>(dy - j));
  }
  return sum;
}

// Split a polynomial in one variable (var of arity 3) into rational linear
// factors and the remaining part.
std::vector<Polynomial> split_univariate(const Polynomial& p, int var) {
  std::vector<Polynomial> out;
  if (p.degree(var) < 1) return out;
  std::array<int, 3> to_one{0, 0, 0};
  std::array<int, 3> back{0, 0, 0};
  back[0] = var;
  const Polynomial u = p.remap(1, to_one);
  Polynomial rest = u;
  std::vector<Rational> seen;
  for (const auto& r : rational_roots(u)) {
    std::array<Rational, 2> lin{-r, Rational(1)};
    const Polynomial factor = Polynomial::univariate(lin);
    while (true) {
      auto q = try_exact_divide(rest, factor);
      if (!q) break;
      rest = *q;
    }
    if (seen.empty() || seen.back() != r) {
      seen.push_back(r);
      out.push_back(factor.remap(3, back));
    }
  }
  if (rest.degree(0) >= 1) out.push_back(rest.monic().remap(3, back));
  return out;
}

}  // namespace

bool FiberComponent::contains(const SurfacePoint& P) const {
  if (!(P.coord(base_variable(axis)) == base)) return false;
  return evaluate_bihomogeneous(factor, s_degree, y_degree, P.coord(fiber_variable(axis)), P.y) == 0;
}

std::string describe(const FiberComponent& C) {
  std::string text = C.whole_fiber ? "whole fibre" : "component";
  text += " of bidegree (" + std::to_string(C.s_degree) + "," + std::to_string(C.y_degree) + ")";
  const char* names = fiber_variable(C.axis) == kVarX ? "xyt" : "tyx";
  text += ": " + to_string(C.factor, names);
  return text;
}

std::vector<FiberComponent> fiber_components(const Surface222& S, int axis, const P1Point& base) {
  const FiberSlice slice = S.fiber_slice(axis, base);
  Polynomial G(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      G.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), 0},
                 slice.form[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  }
  std::vector<FiberComponent> comps;
  auto push = [&](const Polynomial& f, int ds, int dy, bool whole) {
    FiberComponent C;
    C.axis = axis;
    C.base = slice.base;
    C.factor = f.monic();
    C.s_degree = ds;
    C.y_degree = dy;
    C.whole_fiber = whole;
    comps.push_back(std::move(C));
  };
  if (slice.smooth) {
    push(G, 2, 2, true);
    return comps;
  }
  const Polynomial one = Polynomial::constant(3, Rational(1));
  if (G.degree(0) < 2) push(one, 1, 0, false);
  if (G.degree(1) < 2) push(one, 0, 1, false);
  const Polynomial cont_y = content(G, 1);  // depends on s only
  const Polynomial cont_s = content(G, 0);  // depends on y only
  for (const auto& f : split_univariate(cont_y, 0)) push(f, f.degree(0), 0, false);
  for (const auto& f : split_univariate(cont_s, 1)) push(f, 0, f.degree(1), false);
  const Polynomial H = exact_divide(G, cont_y * cont_s);
  const int hs = H.degree(0);
  const int hy = H.degree(1);
  if (hs <= 0 && hy <= 0) return comps;
  if (hs == 2 && hy == 2) {
    const auto h = H.coefficients_in(1);
    const Polynomial disc = h[1] * h[1] - Rational(4) * h[2] * h[0];
    const std::array<int, 3> to_one{0, 0, 0};
    if (auto w = polynomial_sqrt(disc.remap(1, to_one))) {
      const Polynomial y = Polynomial::variable(3, 1);
      const Polynomial linear = Rational(2) * h[2] * y + h[1] - w->remap(3, {0, 0, 0});
      const Polynomial f1 = poly_gcd(H, linear);
      if (f1.degree(0) == 1 && f1.degree(1) == 1) {
        const Polynomial f2 = exact_divide(H, f1);
        push(f1, 1, 1, false);
        if (!(f2.monic() == f1.monic())) push(f2, 1, 1, false);
        return comps;
      }
    }
  }
  push(H, hs, hy, comps.empty());
  return comps;
}

std::vector<FiberComponent> components_through(const Surface222& S, int axis, const SurfacePoint& P) {
  S.require_on_surface(P);
  std::vector<FiberComponent> out;
  for (auto& C : fiber_components(S, axis, P.coord(base_variable(axis)))) {
    if (C.contains(P)) out.push_back(std::move(C));
  }
  if (out.empty()) throw Error(ErrorCode::Internal, "no fibre component contains the point");
  return out;
}

// ---------------------------------------------------------------------------
// Witness search

bool verify_witness(const Surface222& S, const FiberComponent& C, const SurfacePoint& W) {
  if (!S.contains(W) || !C.contains(W)) return false;
  const int other = C.axis == 1 ? 2 : 1;
  const OrderResult o = class_order(S, other, W);
  return o.smooth && o.infinite();
}

namespace {

// Rationals ordered by height, then denominator, then numerator.
std::vector<Rational> rationals_by_height(unsigned height) {
  std::vector<Rational> out{Rational(0)};
  for (unsigned h = 1; h <= height; ++h) {
    for (unsigned den = 1; den <= h; ++den) {
      for (long num = -static_cast<long>(h); num <= static_cast<long>(h); ++num) {
        if (std::max(static_cast<unsigned>(std::labs(num)), den) != h) continue;
        if (std::gcd(static_cast<unsigned long>(std::labs(num)), static_cast<unsigned long>(den)) != 1) continue;
        out.push_back(make_rational(Integer(num), Integer(den)));
      }
    }
  }
  return out;
}

// Rational y-roots of the component over a fixed fibre coordinate.
std::vector<P1Point> y_roots(const FiberComponent& C, const P1Point& s) {
  std::array<Rational, 3> k{};
  for (const auto& [e, c] : C.factor.terms()) {
    const auto i = e[0];
    k[e[1]] += c * rational_pow(s.u0, i) * rational_pow(s.u1, static_cast<unsigned>(C.s_degree) - i);
  }
  std::vector<P1Point> out;
  if (C.y_degree == 1) {
    if (k[0] != 0 || k[1] != 0) out.push_back(P1Point{-k[0], k[1]}.normalized());
  } else if (C.y_degree == 2) {
    if (k[2] == 0) {
      if (k[1] == 0 && k[0] == 0) return out;
      out.push_back(P1Point::infinity());
      if (k[1] != 0) out.push_back(P1Point::affine(-k[0] / k[1]));
    } else {
      const Rational disc = k[1] * k[1] - 4 * k[2] * k[0];
      if (is_square(disc)) {
        const Rational w = exact_sqrt(disc);
        out.push_back(P1Point::affine((-k[1] - w) / (2 * k[2])));
        if (w != 0) out.push_back(P1Point::affine((-k[1] + w) / (2 * k[2])));
      }
    }
  }
  return out;
}

}  // namespace

ComponentCertificate certify_component(const Surface222& S, const FiberComponent& C, const SurfacePoint& start,
                                       const WitnessOptions& options) {
  ComponentCertificate cert;
  cert.component = C;
  if (!C.horizontal()) {
    cert.status = ComponentCertificate::Status::Vertical;
    cert.reason = "component lies in a fibre of the other axis";
    return cert;
  }
  const int other = C.axis == 1 ? 2 : 1;
  const int svar = fiber_variable(C.axis);
  std::vector<SurfacePoint> tried;
  auto attempt = [&](const SurfacePoint& W) {
    const SurfacePoint Wn = W.normalized();
    for (const auto& seen : tried) {
      if (seen == Wn) return false;
    }
    tried.push_back(Wn);
    if (!S.contains(Wn) || !C.contains(Wn)) return false;
    ++cert.candidates_tested;
    OrderResult o = class_order(S, other, Wn);
    if (o.smooth && o.infinite()) {
      cert.status = ComponentCertificate::Status::Certified;
      cert.witness = Wn;
      cert.witness_order = std::move(o);
      return true;
    }
    return false;
  };
  auto exhausted = [&] { return cert.candidates_tested >= options.max_candidates; };

  if (C.contains(start) && attempt(start)) return cert;

  // The two involutions preserve an irreducible fibre; their composite walks
  // along it.
  if (C.s_degree == 2 && C.y_degree == 2 && C.contains(start)) {
    SurfacePoint fwd = start, bwd = start;
    bool fwd_ok = true, bwd_ok = true;
    for (unsigned step = 0; step < options.orbit_steps && (fwd_ok || bwd_ok) && !exhausted(); ++step) {
      if (fwd_ok) {
        try {
          fwd = S.flip(svar, S.flip(kVarY, fwd));
          if (attempt(fwd)) return cert;
        } catch (const Error&) {
          fwd_ok = false;
        }
      }
      if (bwd_ok && !exhausted()) {
        try {
          bwd = S.flip(kVarY, S.flip(svar, bwd));
          if (attempt(bwd)) return cert;
        } catch (const Error&) {
          bwd_ok = false;
        }
      }
    }
  }

  std::vector<P1Point> svals;
  for (const auto& r : rationals_by_height(options.height)) svals.push_back(P1Point::affine(r));
  svals.push_back(P1Point::infinity());
  for (const auto& s : svals) {
    if (exhausted()) break;
    for (const auto& y : y_roots(C, s)) {
      SurfacePoint W;
      W.coord(base_variable(C.axis)) = C.base;
      W.coord(svar) = s;
      W.y = y;
      if (attempt(W)) return cert;
      if (exhausted()) break;
    }
  }
  cert.status = ComponentCertificate::Status::Inconclusive;
  cert.reason = "no infinite-order witness among " + std::to_string(cert.candidates_tested) + " candidates";
  return cert;
}

ComponentCertificate component_certificate(const Surface222& S, const SurfacePoint& P, int from_axis,
                                           const WitnessOptions& options) {
  const auto comps = components_through(S, from_axis, P);
  ComponentCertificate cert = certify_component(S, comps.front(), P, options);
  if (comps.size() > 1) {
    cert.reason += (cert.reason.empty() ? "" : "; ") + std::string("point lies on ") +
                   std::to_string(comps.size()) + " components";
  }
  return cert;
}

}  // namespace fibra
