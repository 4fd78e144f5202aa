#pragma once

// Sparse polynomials over Q in at most three variables.
//
// Terms are kept in a map keyed by exponent tuples; no zero coefficient is
// ever stored. The map order is lexicographic with variable 0 most
// significant, so the last entry is the lex-leading term.
//
// Sign conventions, fixed once for the whole library:
//   resultant(p, q, v)   = det of the Sylvester matrix, p's rows first,
//                          coefficients listed from the top degree down.
//   discriminant(p, v)   = (-1)^(n(n-1)/2) * resultant(p, dp/dv, v) / lc_v(p).
// Downstream code only ever tests these for vanishing.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fibra {

using Exponents = std::array<std::uint32_t, 3>;

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  explicit Polynomial(int arity = 1);

  static Polynomial constant(int arity, const Rational& c);
  static Polynomial variable(int arity, int index);
  static Polynomial monomial(int arity, const Exponents& e, const Rational& c);
  // Univariate polynomial from ascending coefficients.
  static Polynomial univariate(std::span<const Rational> ascending);

  int arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const { return coefficient({0, 0, 0}); }
  void add_term(const Exponents& e, const Rational& c);

  // -1 for the zero polynomial.
  int degree(int var) const;
  int total_degree() const;
  int degree() const { return degree(0); }

  Exponents leading_exponents() const;
  Rational leading_coefficient() const;

  // Coefficient of var^k for k = 0..deg, with var removed (same arity).
  std::vector<Polynomial> coefficients_in(int var) const;
  // Ascending dense coefficients of a univariate polynomial.
  std::vector<Rational> dense() const;

  Polynomial derivative(int var) const;
  // Substitute a constant for one variable; the arity is unchanged.
  Polynomial evaluate(int var, const Rational& value) const;
  Rational evaluate(std::span<const Rational> values) const;
  Rational operator()(const Rational& x) const;
  Polynomial substitute(int var, const Polynomial& value) const;
  Polynomial swap_variables(int i, int j) const;
  // Re-home into `new_arity` variables; variable k goes to target[k].
  Polynomial remap(int new_arity, const std::array<int, 3>& target) const;

  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend Polynomial operator+(Polynomial a, const Rational& c) {
    a.add_term({0, 0, 0}, c);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Rational& c) {
    a.add_term({0, 0, 0}, -c);
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_var(int var) const;
  void check_same_arity(const Polynomial& other) const;

  int arity_;
  TermMap terms_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Univariate Euclidean division.
DivMod divide(const Polynomial& a, const Polynomial& b);

// Multivariate exact division; nullopt if b does not divide a.
std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b);
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Greatest common divisor, normalised to lex-leading coefficient 1. Exact in
// any arity (recursive primitive PRS); gcd(p, 0) is p normalised.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in `var`.
Polynomial content(const Polynomial& p, int var);

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);
Polynomial discriminant(const Polynomial& p, int var);

// Univariate. Rational roots with multiplicity, ascending.
std::vector<Rational> rational_roots(const Polynomial& p);

// Univariate square-free decomposition: p = c * prod f_i^i.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p);
Polynomial squarefree_part(const Polynomial& p);

// Univariate: s with s*s == p, if one exists over Q.
std::optional<Polynomial> polynomial_sqrt(const Polynomial& p);

std::string to_string(const Polynomial& p, std::string_view names = "xyt");

}  // namespace fibra
