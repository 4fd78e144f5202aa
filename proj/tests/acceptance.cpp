// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every check compares the library against an oracle that does not
// share its code path, or against values pinned from the Python oracles in
// tools/oracles.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "diagonal.hpp"
#include "support.hpp"

using namespace fibra;
using namespace fibra::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 8) problems.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const Rational& r) { return to_string(r); }

// ---------------------------------------------------------------------------
// 1. Torsion bound

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Integer cap_formula(std::uint64_t p, unsigned d) {
  const Integer three_d = integer_pow(3, d), five_d = integer_pow(5, d);
  if (p == 2) return 129 * (three_d - 1) * integer_pow(3 * d, 6);
  if (p == 3) return 65 * (five_d - 1) * integer_pow(2 * d, 6);
  return 65 * (three_d - 1) * integer_pow(2 * d, 6);
}

// p <= (1 + 3^(d/2))^2 = 1 + 2 * 3^(d/2) + 3^d, i.e. p - 1 - 3^d <= 2 * 3^(d/2).
bool in_prime_range(std::uint64_t p, unsigned d) {
  const Integer lhs = Integer(static_cast<unsigned long>(p)) - 1 - integer_pow(3, d);
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * integer_pow(3, d);
}

void criterion_bound(Outcome& out) {
  const auto start = Clock::now();
  for (unsigned d = 1; d <= 6; ++d) {
    Integer product = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> caps;
    for (std::uint64_t p = 2; p < 2000; ++p) {
      if (!is_prime_trial(p) || !in_prime_range(p, d)) continue;
      const Integer cap = cap_formula(p, d);
      unsigned n = 0;
      Integer power = p;
      while (power <= cap) {
        ++n;
        power *= static_cast<unsigned long>(p);
      }
      caps.emplace_back(p, n);
      product *= integer_pow(Integer(static_cast<unsigned long>(p)), n);
    }
    const BoundTable table = global_bound(d);
    out.require(table.bound == product, "B(" + std::to_string(d) + ") differs from the brute-force product");
    out.require(table.caps.size() == caps.size(), "prime set differs for d = " + std::to_string(d));
    for (std::size_t k = 0; k < std::min(caps.size(), table.caps.size()); ++k) {
      out.require(table.caps[k].p == caps[k].first && table.caps[k].exponent == caps[k].second,
                  "cap for p = " + std::to_string(caps[k].first) + ", d = " + std::to_string(d));
    }
  }
  const BoundTable b1 = global_bound(1);
  const Integer expected = integer_pow(2, 17) * integer_pow(3, 8) * integer_pow(5, 5) * integer_pow(7, 4);
  out.require(b1.bound == expected, "B(1) != 2^17 3^8 5^5 7^4");
  std::vector<std::uint64_t> primes;
  for (const PrimeCap& c : b1.caps) primes.push_back(c.p);
  out.require(primes == std::vector<std::uint64_t>{2, 3, 5, 7}, "prime set of B(1)");
  const double secs = seconds_since(start);
  out.require(secs < 1.0, "runtime above 1 s");
  std::ostringstream ss;
  ss << "B(1) = " << b1.bound.get_str() << ", d = 1..6 re-derived, " << secs << " s";
  out.detail = ss.str();
}

// ---------------------------------------------------------------------------
// 2. Division polynomials against exhaustive enumeration

void criterion_division(Outcome& out) {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::uint64_t> pick_p(950, 1050);
  std::uint64_t mismatches = 0, checks = 0;
  int curves = 0;
  while (curves < 10) {
    std::uint64_t p = pick_p(rng);
    while (!is_prime_trial(p)) ++p;
    std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
    const std::uint64_t a = coeff(rng), b = coeff(rng);
    if ((4 * pow_mod(a, 3, p) + 27 * mul_mod(b, b, p)) % p == 0) continue;
    ++curves;
    const BruteCurve brute{p, a, b};
    const std::vector<std::uint64_t> orders = orders_by_x(brute);
    const CurveModP E{Fp(a, p), Fp(b, p)};
    for (unsigned r = 1; r <= 20; ++r) {
      const PolyModP f = torsion_polynomial_mod_p(r, E);
      for (std::uint64_t x = 0; x < p; ++x) {
        const bool poly = f(x) == 0;
        const bool group = r % orders[x] == 0;
        ++checks;
        if (poly != group) ++mismatches;
      }
    }
  }
  const double secs = seconds_since(start);
  out.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  out.require(secs < 60.0, "runtime above 1 min");
  std::ostringstream ss;
  ss << curves << " curves, p in [950, 1060], r = 1..20, " << checks << " x-values, " << mismatches
     << " mismatches, " << secs << " s";
  out.detail = ss.str();
}

// ---------------------------------------------------------------------------
// 3. Order-test soundness

// Independent affine group law over Q.
struct QPoint {
  bool inf = true;
  Rational x, y;
};

QPoint qadd(const Rational& A, const QPoint& P, const QPoint& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  Rational l;
  if (P.x == Q.x) {
    if (P.y + Q.y == 0) return {};
    l = (3 * P.x * P.x + A) / (2 * P.y);
  } else {
    l = (Q.y - P.y) / (Q.x - P.x);
  }
  const Rational x3 = l * l - P.x - Q.x;
  return {false, x3, l * (P.x - x3) - P.y};
}

// Exact order up to 12 by repeated addition, 0 if none.
unsigned exhaustive_order(const Rational& A, const QPoint& P) {
  QPoint R = P;
  for (unsigned n = 1; n <= 12; ++n) {
    if (R.inf) return n;
    R = qadd(A, R, P);
  }
  return 0;
}

std::uint64_t brute_count(std::int64_t A, std::int64_t B, std::uint64_t p) {
  const std::uint64_t a = static_cast<std::uint64_t>((A % static_cast<std::int64_t>(p) + p) % p);
  const std::uint64_t b = static_cast<std::uint64_t>((B % static_cast<std::int64_t>(p) + p) % p);
  std::uint64_t n = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if (mul_mod(y, y, p) == (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b) % p) ++n;
  return n;
}

void criterion_orders(Outcome& out) {
  int checked = 0;
  struct Case {
    long A, B;
    Rational x, y;
  };
  const std::vector<Case> finite{{0, 1, 2, 3}, {0, 1, -1, 0}, {0, 1, 0, 1}, {-1, 0, 0, 0}, {-1, 0, 1, 0},
                                 {-1, 0, -1, 0}, {0, -8, 2, 0}, {-43, 166, 3, 8}};
  for (const Case& c : finite) {
    const WeierstrassCurve E{Rational(c.A), Rational(c.B)};
    const OrderInfo info = point_order(E, E.checked_point(c.x, c.y));
    const unsigned want = exhaustive_order(Rational(c.A), {false, c.x, c.y});
    out.require(want != 0 && !info.infinite && info.order == want,
                "order at (" + str(c.x) + ", " + str(c.y) + ") on A = " + std::to_string(c.A));
    ++checked;
  }
  const OrderInfo six = point_order(WeierstrassCurve(Rational(0), Rational(1)),
                                    WeierstrassCurve(Rational(0), Rational(1)).checked_point(2, 3));
  out.require(six.order == 6, "order 6 at (2,3) on y^2 = x^3 + 1");

  // y^2 = x^3 - 2 at (3, 5): gcd(#E(F_5), #E(F_7)) = 1 leaves no torsion.
  const WeierstrassCurve F(Rational(0), Rational(-2));
  const OrderInfo inf = point_order(F, F.checked_point(3, 5));
  const std::uint64_t n5 = brute_count(0, -2, 5), n7 = brute_count(0, -2, 7);
  out.require(std::gcd(n5, n7) == 1, "gcd(#E(F_5), #E(F_7)) != 1");
  out.require(inf.infinite, "(3,5) on y^2 = x^3 - 2 not reported infinite");
  out.require(exhaustive_order(Rational(0), {false, Rational(3), Rational(5)}) == 0, "(3,5) has small order");
  ++checked;

  // Classes on surfaces against the Hankel oracle.
  std::mt19937_64 rng(31337);
  for (unsigned order = 1; order <= 3; ++order)
    for (int axis = 1; axis <= 2; ++axis) {
      const Surface222 S = designed_surface(order, axis, rng);
      const OrderResult o = class_order(S, axis, affine_point(0, 0, 0));
      out.require(o.finite() && o.order == order && hankel_order(S, axis, affine_point(0, 0, 0)) == order,
                  "designed order " + std::to_string(order) + " on axis " + std::to_string(axis));
      ++checked;
    }
  const Surface222 S = load_surface("vetted_sample.json");
  int infinite = 0;
  for (const SurfacePoint& P : find_points(S, 6, 60)) {
    for (int axis = 1; axis <= 2; ++axis) {
      const OrderResult o = class_order(S, axis, P);
      const auto h = hankel_order(S, axis, P);
      bool ok;
      if (!h) {
        ok = !o.smooth;
      } else if (*h == 0) {
        ok = o.smooth && o.infinite();
        infinite += ok;
      } else {
        ok = o.smooth && o.finite() && o.order == *h;
      }
      out.require(ok, "class order disagrees with the Hankel oracle");
      ++checked;
    }
  }
  std::ostringstream ss;
  ss << checked << " orders checked (" << infinite << " infinite on the sample); #E(F_5) = " << n5
     << ", #E(F_7) = " << n7;
  out.detail = ss.str();
}

// ---------------------------------------------------------------------------
// 4. Fibre pipeline on the vetted sample

UPoly quartic_at_infinity(const Surface222& S, int axis) {
  ConicBundle cb;
  UPoly* parts[3] = {&cb.C, &cb.B, &cb.A};
  for (int j = 0; j < 3; ++j) {
    UPoly p(3);
    for (int s = 0; s < 3; ++s) p[static_cast<std::size_t>(s)] = axis == 1 ? S.coeff(s, j, 2) : S.coeff(2, j, s);
    trim(p);
    *parts[j] = p;
  }
  return branch_quartic(cb);
}

void criterion_pipeline(Outcome& out) {
  const auto start = Clock::now();
  const Surface222 S = load_surface("vetted_sample.json");
  const Json pins = load_fixture("vetted_pins.json");
  std::mt19937_64 rng(4242);
  int j_checks = 0, singular_checks = 0;
  for (int axis = 1; axis <= 2; ++axis) {
    const RationalFunction jm = S.j_map(axis);
    const Polynomial& delta = S.singular_locus(axis);
    const Json& pin = pins.at("axes")[static_cast<std::size_t>(axis - 1)];
    out.require(S.j_degree(axis) == pin.at("d").get<int>(), "j-degree differs from the sympy pin");
    out.require(delta.degree() == pin.at("delta_degree").get<int>(), "discriminant degree differs from the pin");

    std::vector<Rational> bases;
    for (int k = 0; k < 20; ++k) bases.push_back(random_rational(rng, 50));
    for (const Json& r : pin.at("rational_singular_fibers"))
      if (r.at(1) != "0/1") bases.push_back(parse_rational(r.at(0).get<std::string>()));
    for (const Rational& b : bases) {
      const UPoly q = branch_quartic(conic_bundle(S, axis, b));
      const bool direct = quartic_singular_direct(q);
      out.require((delta(b) == 0) == direct, "singularity test at " + str(b));
      out.require(S.fiber_is_singular(axis, P1Point::affine(b)) == direct, "fiber_is_singular at " + str(b));
      ++singular_checks;
      if (direct) continue;
      const auto j_direct = j_from_quartic(q);
      const FiberSlice slice = S.fiber_slice(axis, P1Point::affine(b));
      const Rational j_jac = jacobian_of_quartic(slice.q).j_invariant();
      out.require(jm.evaluate(b) == j_direct && j_direct == j_jac, "j mismatch at " + str(b));
      ++j_checks;
    }
    const bool inf_pinned = std::any_of(pin.at("rational_singular_fibers").begin(), pin.at("rational_singular_fibers").end(),
                                        [](const Json& r) { return r.at(1) == "0/1"; });
    const bool inf_direct = quartic_singular_direct(quartic_at_infinity(S, axis));
    out.require(S.fiber_is_singular(axis, P1Point::infinity()) == inf_direct && inf_direct == inf_pinned,
                "fibre at infinity");
    ++singular_checks;

    // The rational singular fibres themselves.
    Json listed = Json::array();
    std::vector<Rational> roots = rational_roots(delta);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Rational& r : roots) listed.push_back(to_json(P1Point::affine(r)));
    if (S.fiber_is_singular(axis, P1Point::infinity())) listed.push_back(to_json(P1Point::infinity()));
    out.require(listed == pin.at("rational_singular_fibers"), "rational singular fibres differ from the pin");
  }

  // Small-height points are sparse, so the pool is grown with the x- and
  // t-flips and thinned at random.
  std::vector<SurfacePoint> pts = find_points(S, 12, 400);
  auto affine = [](const SurfacePoint& P) { return !P.x.is_infinity() && !P.y.is_infinity() && !P.t.is_infinity(); };
  for (std::size_t k = 0; k < pts.size() && pts.size() < 400; ++k) {
    for (int var : {kVarX, kVarT}) {
      const SurfacePoint Q = S.flip(var, pts[k]);
      if (affine(Q) && std::find(pts.begin(), pts.end(), Q) == pts.end()) pts.push_back(Q);
    }
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(std::min<std::size_t>(pts.size(), 100));
  out.require(pts.size() == 100, "fewer than 100 sample points");
  for (const SurfacePoint& P : pts) {
    for (int axis = 1; axis <= 2; ++axis) {
      const SurfacePoint Q = S.involution(axis, P);
      const ConicBundle cb = conic_bundle(S, 1, P.t.value());
      const Rational A = ueval(cb.A, P.x.value()), B = ueval(cb.B, P.x.value());
      const Rational C = ueval(cb.C, P.x.value());
      const Rational y = P.y.value();
      bool ok = A * y * y + B * y + C == 0 && S.contains(Q) && Q.x == P.x && Q.t == P.t && S.involution(axis, Q) == P;
      if (A != 0) ok = ok && !Q.y.is_infinity() && P.y.value() + Q.y.value() == -B / A;
      out.require(ok, "involution fails at a sample point");
    }
  }
  const double secs = seconds_since(start);
  out.require(secs < 60.0, "runtime above 1 min");
  std::ostringstream ss;
  ss << j_checks << " j-values, " << singular_checks << " singularity tests, " << pts.size()
     << " points x 2 involutions, " << secs << " s";
  out.detail = ss.str();
}

// ---------------------------------------------------------------------------
// 5. T-equations

void criterion_t_equations(Outcome& out) {
  std::mt19937_64 rng(777);
  std::ostringstream ss;
  const Surface222 vetted = load_surface("vetted_sample.json");
  for (unsigned r = 1; r <= 3; ++r) {
    int sampled = 0, positive = 0;
    auto run = [&](const Surface222& S, int axis, std::vector<SurfacePoint> pts) {
      const ExclusionEquations eq = emit_T_equations(S, axis, r);
      for (const SurfacePoint& P : pts) {
        const OrderResult o = class_order(S, axis, P);
        if (!o.smooth) continue;                 // singular fibres
        if (r >= 2 && o.fixed_point) continue;  // ramification
        const bool in_locus = o.finite() && o.order == r;
        out.require(generators_vanish(eq, P) == in_locus,
                    "r = " + std::to_string(r) + ": generators disagree with class_order");
        ++sampled;
        positive += in_locus;
      }
    };
    for (int axis = 1; axis <= 2; ++axis) {
      const Surface222 S = designed_surface(r, axis, rng);
      std::vector<SurfacePoint> pts = find_points(S, 5, 40);
      pts.push_back(affine_point(0, 0, 0));
      run(S, axis, pts);
    }
    std::vector<SurfacePoint> pts = find_points(vetted, 5, 40);
    pts.push_back(affine_point(Rational(1), Rational(-9, 8), Rational(1)));
    run(vetted, 1, pts);
    out.require(sampled >= 30, "fewer than 30 points for r = " + std::to_string(r));
    out.require(positive >= 2, "no point of order r = " + std::to_string(r));
    ss << (r > 1 ? "; " : "") << "r = " << r << ": " << sampled << " points, " << positive << " in T";
  }
  out.detail = ss.str();
}

// ---------------------------------------------------------------------------
// 6. End-to-end certification

void criterion_end_to_end(Outcome& out) {
  const Surface222 S = load_surface("vetted_sample.json");
  const Json pts = load_fixture("points.json");
  const Json first = to_json(certify_point(S, point_from_json(pts.at("dense_point"))));
  const Json again = to_json(certify_point(S, point_from_json(pts.at("dense_point"))));
  out.require(first.at("outcome") == "Dense", "fixture point not Dense");
  out.require(first == again, "verdict not deterministic");
  const RecheckResult rc = recheck(Json::parse(first.dump()));
  out.require(rc.ok, "recheck of the Dense verdict failed");
  for (const char* name : {"ramification_point", "singular_point"}) {
    const Json v = to_json(certify_point(S, point_from_json(pts.at(name))));
    out.require(v.at("outcome") == "Inconclusive", std::string(name) + " not Inconclusive");
    out.require(recheck(v).ok, std::string(name) + " verdict does not replay");
  }
  out.detail = "dense point Dense with replay ok; ramification and singular points Inconclusive";
}

// ---------------------------------------------------------------------------
// 7. Conjecture-family sweep

void criterion_sweep(Outcome& out) {
  const auto start = Clock::now();
  const Json pinned = load_fixture("conjecture_sweep.json");
  const std::uint32_t N = pinned.at("max_term").get<std::uint32_t>();
  const std::uint32_t H = pinned.at("H").get<std::uint32_t>();
  const unsigned many = std::max(4U, std::thread::hardware_concurrency());
  const std::vector<SweepRow> serial = conjecture_sweep(N, H, 1);
  const std::vector<SweepRow> parallel = conjecture_sweep(N, H, many);
  const Json& rows = pinned.at("rows");
  out.require(serial.size() == rows.size() && parallel.size() == rows.size(), "row count differs from the pin");
  int found = 0;
  for (std::size_t k = 0; k < std::min(serial.size(), rows.size()); ++k) {
    const SweepRow& a = serial[k];
    const std::string t = std::to_string(a.num) + "/" + std::to_string(a.den);
    out.require(rows[k].at("t") == t, "row order differs at " + t);
    Json want = rows[k].at("found");
    Json got = a.found ? Json(Json::array()) : Json(nullptr);
    if (a.found)
      for (const Rational& c : a.found->c) got.push_back(c.get_num().get_si());
    out.require(got == want, "t = " + t + ": found point differs from the oracle");
    if (k < parallel.size()) {
      const SweepRow& b = parallel[k];
      out.require(b.tested == a.tested && b.found.has_value() == a.found.has_value() &&
                      (!a.found || *a.found == *b.found),
                  "t = " + t + ": thread counts disagree");
    }
    const DiagonalQuartic V = DiagonalQuartic::conjecture_family(make_rational(a.num, a.den));
    const QuarticPoint4 trivial{{Rational(1), Rational(1), Rational(1), Rational(1)}};
    out.require(a.tested >= 1 && line_test(V, trivial), "t = " + t + ": trivial point not rejected");
    if (a.found) {
      ++found;
      const Verdict v = certify_theorem1(V, *a.found);
      out.require(v.outcome == Verdict::Outcome::Dense && recheck(to_json(v)).ok, "t = " + t + ": point does not certify");
    }
  }
  // The single-t run behind the pin for t = 1, H = 50.
  SearchOptions o;
  o.height = 50;
  o.threads = 1;
  const SearchReport t1 = conjecture_search(Rational(1), o);
  const Json& pin = pinned.at("t1_h50");
  out.require(!t1.found && pin.at("found").is_null() && t1.tested == pin.at("tested").get<std::uint64_t>(),
              "t = 1, H = 50 differs from the oracle");
  const double secs = seconds_since(start);
  out.require(secs < 1800.0, "runtime above 30 min");
  std::ostringstream ss;
  ss << rows.size() << " values of t, H = " << H << ", " << found << " certifying points, threads 1 and " << many
     << " agree, " << secs << " s";
  out.detail = ss.str();
}

// ---------------------------------------------------------------------------
// 8. Threshold logic

void criterion_threshold(Outcome& out) {
  int cases = 0;
  for (long d1 : {1L, 2L, 5L, 24L})
    for (long d2 : {1L, 3L, 24L})
      for (long M1 : {2L, 4L})
        for (long M2 : {4L, 6L})
          for (long nK : {0L, 1L, 2L, 7L, 12L}) {
            const long tmin = nK * std::min(d1 * M1, d2 * M2);
            const long tsum = nK * (d1 * M1 + d2 * M2);
            out.require(threshold_value(ThresholdMode::Min, d1, M1, d2, M2, nK) == tmin, "min threshold");
            out.require(threshold_value(ThresholdMode::Sum, d1, M1, d2, M2, nK) == tsum, "sum threshold");
            for (long T : {tmin, tsum}) {
              out.require(!exceeds_threshold(T, T), "boundary equality counted as Dense");
              out.require(exceeds_threshold(T + 1, T), "boundary + 1 not Dense");
              if (T > 0) out.require(!exceeds_threshold(T - 1, T), "boundary - 1 counted as Dense");
              cases += 3;
            }
          }

  // End to end on the vetted sample with n_K = 0 (threshold 0).
  const Surface222 S = load_surface("vetted_sample.json");
  std::vector<SurfacePoint> generic;
  for (const SurfacePoint& P : find_points(S, 8, 400)) {
    if (class_order(S, 1, P).infinite() && class_order(S, 2, P).infinite()) generic.push_back(P);
    if (generic.size() == 1) break;
  }
  out.require(generic.size() == 1, "no generic point on the sample");
  const SurfacePoint sing = affine_point(0, 0, 0);
  for (ThresholdMode mode : {ThresholdMode::Min, ThresholdMode::Sum}) {
    const Verdict equal = certify_threshold(S, {{sing}, 0, mode});
    out.require(equal.outcome == Verdict::Outcome::Inconclusive, "count 0 = threshold 0 must be Inconclusive");
    out.require(recheck(to_json(equal)).ok, "boundary verdict does not replay");
    if (!generic.empty()) {
      const Verdict plus = certify_threshold(S, {{sing, generic.front()}, 0, mode});
      out.require(plus.outcome == Verdict::Outcome::Dense, "count 1 > threshold 0 must be Dense");
      out.require(recheck(to_json(plus)).ok, "Dense threshold verdict does not replay");
      const Verdict one = certify_threshold(S, {{generic.front()}, 1, mode});
      out.require(one.outcome == Verdict::Outcome::Inconclusive, "count 1 <= n_K d M must be Inconclusive");
    }
    cases += 3;
  }
  try {
    certify_threshold(load_surface("isotrivial.json"), {{}, 1, ThresholdMode::Min});
    out.require(false, "isotrivial surface accepted by the min rule");
  } catch (const Error& e) {
    out.require(e.code() == ErrorCode::Precondition, "wrong refusal code");
  }
  out.detail = std::to_string(cases) + " threshold cases including equality and equality + 1";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"torsion bound reproduction", criterion_bound},
      {"division polynomials vs exhaustive enumeration", criterion_division},
      {"order-test soundness", criterion_orders},
      {"fibre pipeline consistency", criterion_pipeline},
      {"T-equation consistency", criterion_t_equations},
      {"end-to-end certification", criterion_end_to_end},
      {"conjecture-family sweep", criterion_sweep},
      {"threshold logic", criterion_threshold},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      criteria[k].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << k + 1 << " [" << criteria[k].first << "]: " << (out.pass ? "PASS" : "FAIL");
    if (!out.detail.empty()) std::cout << " - " << out.detail;
    std::cout << "\n";
    for (const std::string& p : out.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
    failed += !out.pass;
  }
  return failed ? 1 : 0;
}
