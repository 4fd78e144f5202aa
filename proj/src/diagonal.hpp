#pragma once

// Diagonal quartic surfaces a x^4 + b y^4 + c z^4 + d w^4 = 0 in P^3 with abcd
// a square, and the family x^4 - y^4 = t (z^4 - w^4).
//
// Line criterion. Over Q-bar every line on such a surface pairs the
// coordinates: it lies in {a x^4 + b y^4 = 0 = c z^4 + d w^4} or in one of the
// two analogous sets for the pairings (x,z | y,w) and (x,w | y,z), 16 lines
// each. A point of the surface lies on a line of a pairing iff the first
// binomial vanishes, since the surface equation then kills the second one.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "certifier.hpp"

namespace fibra {

struct QuarticPoint4 {
  std::array<Rational, 4> c;

  // Scaled to coprime integers with the first nonzero coordinate positive.
  QuarticPoint4 primitive() const;
  friend bool operator==(const QuarticPoint4& p, const QuarticPoint4& q);
};

class DiagonalQuartic {
 public:
  // Nonzero coefficients with abcd a square; Precondition error otherwise.
  DiagonalQuartic(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
  // x^4 - y^4 - t z^4 + t w^4.
  static DiagonalQuartic conjecture_family(const Rational& t);

  const std::array<Rational, 4>& coefficients() const noexcept { return k_; }
  Rational evaluate(const QuarticPoint4& P) const;
  bool contains(const QuarticPoint4& P) const { return evaluate(P) == 0; }
  // a x^4 + b y^4, a x^4 + c z^4, a x^4 + d w^4.
  std::array<Rational, 3> pairing_binomials(const QuarticPoint4& P) const;

 private:
  std::array<Rational, 4> k_;
};

bool line_test(const DiagonalQuartic& V, const QuarticPoint4& P);

Json to_json(const DiagonalQuartic& V);
DiagonalQuartic diagonal_from_json(const Json& j);
Json to_json(const QuarticPoint4& P);
QuarticPoint4 quartic_point_from_json(const Json& j);

Verdict certify_theorem1(const DiagonalQuartic& V, const QuarticPoint4& P);
void recheck_diagonal(const Verdict& v, std::vector<std::string>& failures);

struct SearchOptions {
  std::uint32_t height = 100;
  bool all = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

inline constexpr std::uint32_t kMaxSearchHeight = 5000;

struct SearchReport {
  Rational t;
  std::uint32_t height = 0;
  std::uint64_t tested = 0;
  std::uint64_t on_lines = 0;
  std::optional<QuarticPoint4> found;
  std::vector<QuarticPoint4> certifying;  // filled with SearchOptions::all
  Verdict verdict;
};

// Positive primitive quadruples of height <= H with x^4 - y^4 = t (z^4 - w^4),
// ordered by height, then lexicographically. Sign changes of coordinates and
// the trivial family x = y, z = w are represented by [1:1:1:1] alone.
SearchReport conjecture_search(const Rational& t, const SearchOptions& options = {});

struct SweepRow {
  std::uint32_t num = 0;
  std::uint32_t den = 0;
  std::optional<QuarticPoint4> found;
  std::uint64_t tested = 0;
};

// Every t = num/den in lowest terms with 1 <= num, den <= max_term.
std::vector<SweepRow> conjecture_sweep(std::uint32_t max_term, std::uint32_t height, unsigned threads = 0);

Json to_json(const SearchReport& r);

}  // namespace fibra
