#include "diagonal.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <tuple>

namespace fibra {

QuarticPoint4 QuarticPoint4::primitive() const {
  Integer lcm = 1;
  for (const Rational& v : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::array<Integer, 4> n;
  Integer g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    n[i] = c[i].get_num() * (lcm / c[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n[i].get_mpz_t());
  }
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "[0:0:0:0] is not a point");
  for (std::size_t i = 0; i < 4; ++i) {
    if (n[i] != 0) {
      if (n[i] < 0) g = -g;
      break;
    }
  }
  QuarticPoint4 out;
  for (std::size_t i = 0; i < 4; ++i) out.c[i] = Rational(Integer(n[i] / g));
  return out;
}

bool operator==(const QuarticPoint4& p, const QuarticPoint4& q) {
  const QuarticPoint4 a = p.primitive();
  const QuarticPoint4 b = q.primitive();
  return a.c == b.c;
}

DiagonalQuartic::DiagonalQuartic(const Rational& a, const Rational& b, const Rational& c, const Rational& d)
    : k_{a, b, c, d} {
  for (const Rational& v : k_) {
    if (v == 0) throw Error(ErrorCode::Precondition, "diagonal quartic coefficients must be nonzero");
  }
  const Rational prod = a * b * c * d;
  if (!is_square(prod)) throw Error(ErrorCode::Precondition, "abcd = " + to_string(prod) + " is not a square");
}

DiagonalQuartic DiagonalQuartic::conjecture_family(const Rational& t) {
  if (t == 0) throw Error(ErrorCode::Precondition, "t must be nonzero");
  return DiagonalQuartic(Rational(1), Rational(-1), -t, t);
}

Rational DiagonalQuartic::evaluate(const QuarticPoint4& P) const {
  Rational sum(0);
  for (std::size_t i = 0; i < 4; ++i) sum += k_[i] * rational_pow(P.c[i], 4);
  return sum;
}

std::array<Rational, 3> DiagonalQuartic::pairing_binomials(const QuarticPoint4& P) const {
  const Rational ax = k_[0] * rational_pow(P.c[0], 4);
  return {ax + k_[1] * rational_pow(P.c[1], 4), ax + k_[2] * rational_pow(P.c[2], 4),
          ax + k_[3] * rational_pow(P.c[3], 4)};
}

bool line_test(const DiagonalQuartic& V, const QuarticPoint4& P) {
  if (!V.contains(P)) throw Error(ErrorCode::NotOnCurve, "point is not on the quartic");
  const auto b = V.pairing_binomials(P);
  return b[0] == 0 || b[1] == 0 || b[2] == 0;
}

Json to_json(const DiagonalQuartic& V) {
  Json coeffs = Json::array();
  for (const Rational& v : V.coefficients()) coeffs.push_back(to_json(v));
  return Json{{"type", "diagonal_quartic"}, {"coeffs", coeffs}};
}

DiagonalQuartic diagonal_from_json(const Json& j) {
  const Json& c = j.is_object() ? j.at("coeffs") : j;
  if (!c.is_array() || c.size() != 4) throw Error(ErrorCode::Parse, "a diagonal quartic needs four coefficients");
  return DiagonalQuartic(rational_from_json(c[0]), rational_from_json(c[1]), rational_from_json(c[2]),
                         rational_from_json(c[3]));
}

Json to_json(const QuarticPoint4& P) {
  Json out = Json::array();
  for (const Rational& v : P.c) out.push_back(to_json(v));
  return out;
}

QuarticPoint4 quartic_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::Parse, "a point of P^3 needs four coordinates");
  QuarticPoint4 P;
  bool nonzero = false;
  for (std::size_t i = 0; i < 4; ++i) {
    P.c[i] = rational_from_json(j[i]);
    nonzero = nonzero || P.c[i] != 0;
  }
  if (!nonzero) throw Error(ErrorCode::InvalidArgument, "[0:0:0:0] is not a point");
  return P;
}

Verdict certify_theorem1(const DiagonalQuartic& V, const QuarticPoint4& P) {
  Verdict v;
  v.rule = "diagonal";
  v.subject = to_json(V);
  const auto& k = V.coefficients();
  v.evidence.push_back(Json{{"fact", "abcd_square"}, {"product", to_json(k[0] * k[1] * k[2] * k[3])}});
  const Rational value = V.evaluate(P);
  v.evidence.push_back(Json{{"fact", "on_surface"}, {"point", to_json(P)}, {"value", to_json(value)}});
  if (value != 0) {
    v.blocking.push_back("point is not on the quartic");
    return v;
  }
  const bool nonzero = std::all_of(P.c.begin(), P.c.end(), [](const Rational& r) { return r != 0; });
  v.evidence.push_back(Json{{"fact", "nonzero_coordinates"}, {"point", to_json(P)}, {"holds", nonzero}});
  if (!nonzero) v.blocking.push_back("a coordinate is zero");
  const auto b = V.pairing_binomials(P);
  Json values = Json::array();
  for (const Rational& r : b) values.push_back(to_json(r));
  const bool on_line = b[0] == 0 || b[1] == 0 || b[2] == 0;
  v.evidence.push_back(Json{{"fact", "line_binomials"}, {"point", to_json(P)}, {"values", values}, {"on_line", on_line}});
  if (on_line) v.blocking.push_back("point lies on one of the 48 lines");
  if (v.blocking.empty()) v.outcome = Verdict::Outcome::Dense;
  return v;
}

void recheck_diagonal(const Verdict& v, std::vector<std::string>& failures) {
  const DiagonalQuartic V = diagonal_from_json(v.subject);
  bool on = false, nonzero = false, off_lines = false;
  for (const Json& f : v.evidence) {
    const std::string kind = f.value("fact", "");
    if (kind == "abcd_square") {
      const auto& k = V.coefficients();
      if (rational_from_json(f.at("product")) != k[0] * k[1] * k[2] * k[3]) failures.push_back("abcd does not replay");
    } else if (kind == "on_surface") {
      const QuarticPoint4 P = quartic_point_from_json(f.at("point"));
      const Rational value = V.evaluate(P);
      if (value != rational_from_json(f.at("value"))) failures.push_back("surface value does not replay");
      on = value == 0;
    } else if (kind == "nonzero_coordinates") {
      const QuarticPoint4 P = quartic_point_from_json(f.at("point"));
      const bool got = std::all_of(P.c.begin(), P.c.end(), [](const Rational& r) { return r != 0; });
      if (got != f.at("holds").get<bool>()) failures.push_back("coordinate test does not replay");
      nonzero = got;
    } else if (kind == "line_binomials") {
      const QuarticPoint4 P = quartic_point_from_json(f.at("point"));
      const auto b = V.pairing_binomials(P);
      for (std::size_t i = 0; i < 3; ++i) {
        if (b[i] != rational_from_json(f.at("values").at(i))) failures.push_back("line binomial does not replay");
      }
      off_lines = b[0] != 0 && b[1] != 0 && b[2] != 0;
      if (off_lines == f.at("on_line").get<bool>()) failures.push_back("line test does not replay");
    } else {
      failures.push_back("unknown fact '" + kind + "'");
    }
  }
  if (v.outcome == Verdict::Outcome::Dense && !(on && nonzero && off_lines))
    failures.push_back("Dense verdict without all three conditions");
}

// ---------------------------------------------------------------------------
// Search

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Quad {
  std::uint32_t x, y, z, w;
  std::uint32_t height() const { return std::max(std::max(x, y), std::max(z, w)); }
  bool operator<(const Quad& o) const {
    const auto h = height(), oh = o.height();
    if (h != oh) return h < oh;
    return std::tie(x, y, z, w) < std::tie(o.x, o.y, o.z, o.w);
  }
};

u64 fourth(std::uint32_t v) {
  const u64 s = static_cast<u64>(v) * v;
  return s * s;
}

// x^4 - y^4 for H >= x > y >= 1, sorted by value.
struct DifferenceTable {
  struct Entry {
    u64 d;
    std::uint32_t x, y;
  };
  std::vector<Entry> entries;
  u64 max_value = 0;

  explicit DifferenceTable(std::uint32_t H) {
    entries.reserve(static_cast<std::size_t>(H) * (H - 1) / 2);
    for (std::uint32_t x = 2; x <= H; ++x)
      for (std::uint32_t y = 1; y < x; ++y) entries.push_back({fourth(x) - fourth(y), x, y});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return std::tie(a.d, a.x) < std::tie(b.d, b.x); });
    max_value = fourth(H) - 1;
  }
};

std::uint32_t gcd4(const Quad& q) { return std::gcd(std::gcd(q.x, q.y), std::gcd(q.z, q.w)); }

// Solutions of den (x^4 - y^4) = num (z^4 - w^4) with x > y, z > w and
// z = z0, z0 + step, ...; both orientations of each solution are emitted.
void scan(const DifferenceTable& table, std::uint32_t H, u64 num, u64 den, std::uint32_t z0, std::uint32_t step,
          std::vector<Quad>& out) {
  for (std::uint32_t z = z0; z <= H; z += step) {
    for (std::uint32_t w = 1; w < z; ++w) {
      const u64 d2 = fourth(z) - fourth(w);
      if (d2 % den != 0) continue;
      const u128 target = static_cast<u128>(d2 / den) * num;
      if (target > table.max_value) continue;
      const u64 key = static_cast<u64>(target);
      auto it = std::lower_bound(table.entries.begin(), table.entries.end(), key,
                                 [](const DifferenceTable::Entry& e, u64 k) { return e.d < k; });
      for (; it != table.entries.end() && it->d == key; ++it) {
        const Quad q{it->x, it->y, z, w};
        if (gcd4(q) != 1) continue;
        out.push_back(q);
        out.push_back({it->y, it->x, w, z});
      }
    }
  }
}

std::vector<Quad> solutions(const DifferenceTable& table, std::uint32_t H, u64 num, u64 den, unsigned threads) {
  if (threads <= 1) {
    std::vector<Quad> out;
    scan(table, H, num, den, 2, 1, out);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<std::vector<Quad>> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < threads; ++i)
    pool.emplace_back([&, i] { scan(table, H, num, den, 2 + i, threads, parts[i]); });
  for (auto& th : pool) th.join();
  std::vector<Quad> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

unsigned thread_count(unsigned requested) {
  if (requested) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void check_height(std::uint32_t H) {
  if (H < 1) throw Error(ErrorCode::InvalidArgument, "height must be at least 1");
  if (H > kMaxSearchHeight)
    throw Error(ErrorCode::Resource, "height above " + std::to_string(kMaxSearchHeight) + " is not supported");
}

QuarticPoint4 to_point(const Quad& q, bool swap_zw) {
  QuarticPoint4 P;
  P.c = {Rational(q.x), Rational(q.y), Rational(swap_zw ? q.w : q.z), Rational(swap_zw ? q.z : q.w)};
  return P;
}

struct Classified {
  std::uint64_t tested = 0;
  std::uint64_t on_lines = 0;
  std::vector<QuarticPoint4> certifying;
};

Classified classify(const DiagonalQuartic& V, const std::vector<Quad>& sols, bool swap_zw, bool all) {
  Classified c;
  auto test = [&](const QuarticPoint4& P) {
    ++c.tested;
    if (line_test(V, P)) {
      ++c.on_lines;
      return false;
    }
    c.certifying.push_back(P);
    return !all;
  };
  // The trivial point first; it has the least height.
  if (test(QuarticPoint4{{Rational(1), Rational(1), Rational(1), Rational(1)}})) return c;
  for (const Quad& q : sols) {
    if (test(to_point(q, swap_zw))) return c;
  }
  return c;
}

}  // namespace

SearchReport conjecture_search(const Rational& t, const SearchOptions& options) {
  if (t == 0) throw Error(ErrorCode::Precondition, "t must be nonzero");
  check_height(options.height);
  const DiagonalQuartic V = DiagonalQuartic::conjecture_family(t);
  const Rational at = t < 0 ? Rational(-t) : t;
  if (!at.get_num().fits_ulong_p() || !at.get_den().fits_ulong_p())
    throw Error(ErrorCode::Resource, "t has too large a numerator or denominator");
  const DifferenceTable table(options.height);
  const auto sols = solutions(table, options.height, at.get_num().get_ui(), at.get_den().get_ui(),
                              thread_count(options.threads));
  // For t < 0 the roles of z and w swap.
  const Classified c = classify(V, sols, t < 0, options.all);

  SearchReport r;
  r.t = t;
  r.height = options.height;
  r.tested = c.tested;
  r.on_lines = c.on_lines;
  if (!c.certifying.empty()) {
    r.found = c.certifying.front();
    r.verdict = certify_theorem1(V, *r.found);
  } else {
    r.verdict = certify_theorem1(V, QuarticPoint4{{Rational(1), Rational(1), Rational(1), Rational(1)}});
    r.verdict.blocking.push_back("no certifying point of height <= " + std::to_string(options.height));
  }
  if (options.all) r.certifying = c.certifying;
  return r;
}

std::vector<SweepRow> conjecture_sweep(std::uint32_t max_term, std::uint32_t height, unsigned threads) {
  check_height(height);
  std::vector<SweepRow> rows;
  for (std::uint32_t num = 1; num <= max_term; ++num)
    for (std::uint32_t den = 1; den <= max_term; ++den)
      if (std::gcd(num, den) == 1) rows.push_back({num, den, std::nullopt, 0});
  const DifferenceTable table(height);
  const unsigned n = std::min<unsigned>(thread_count(threads), static_cast<unsigned>(rows.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) {
    pool.emplace_back([&, i] {
      for (std::size_t k = i; k < rows.size(); k += n) {
        SweepRow& row = rows[k];
        const DiagonalQuartic V = DiagonalQuartic::conjecture_family(Rational(row.num, row.den));
        const Classified c = classify(V, solutions(table, height, row.num, row.den, 1), false, false);
        row.tested = c.tested;
        if (!c.certifying.empty()) row.found = c.certifying.front();
      }
    });
  }
  for (auto& th : pool) th.join();
  return rows;
}

Json to_json(const SearchReport& r) {
  Json j{{"t", to_json(r.t)},
         {"H", r.height},
         {"tested", r.tested},
         {"on_lines", r.on_lines},
         {"found", r.found ? to_json(*r.found) : Json(nullptr)},
         {"verdict", to_json(r.verdict)}};
  if (!r.certifying.empty()) {
    Json all = Json::array();
    for (const auto& P : r.certifying) all.push_back(to_json(P));
    j["certifying"] = all;
  }
  return j;
}

}  // namespace fibra
