#include "polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fibra {

Polynomial::Polynomial(int arity) : arity_(arity) {
  if (arity < 1 || arity > 3) throw Error(ErrorCode::InvalidArgument, "polynomial arity must be 1..3");
}

Polynomial Polynomial::constant(int arity, const Rational& c) {
  Polynomial p(arity);
  p.add_term({0, 0, 0}, c);
  return p;
}

Polynomial Polynomial::variable(int arity, int index) {
  Polynomial p(arity);
  p.check_var(index);
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int arity, const Exponents& e, const Rational& c) {
  Polynomial p(arity);
  for (int k = arity; k < 3; ++k) {
    if (e[static_cast<std::size_t>(k)] != 0) throw Error(ErrorCode::ArityMismatch, "exponent on a missing variable");
  }
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::univariate(std::span<const Rational> ascending) {
  Polynomial p(1);
  for (std::size_t k = 0; k < ascending.size(); ++k) p.add_term({static_cast<std::uint32_t>(k), 0, 0}, ascending[k]);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_var(int var) const {
  if (var < 0 || var >= arity_) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
}

void Polynomial::check_same_arity(const Polynomial& other) const {
  if (arity_ != other.arity_) throw Error(ErrorCode::ArityMismatch, "polynomial arity mismatch");
}

int Polynomial::degree(int var) const {
  check_var(var);
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return static_cast<int>(d);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return static_cast<int>(d);
}

Exponents Polynomial::leading_exponents() const {
  if (terms_.empty()) throw Error(ErrorCode::Precondition, "zero polynomial has no leading term");
  return terms_.rbegin()->first;
}

Rational Polynomial::leading_coefficient() const {
  if (terms_.empty()) return Rational(0);
  return terms_.rbegin()->second;
}

std::vector<Polynomial> Polynomial::coefficients_in(int var) const {
  const int d = degree(var);
  std::vector<Polynomial> out(static_cast<std::size_t>(std::max(d + 1, 0)), Polynomial(arity_));
  for (const auto& [e, c] : terms_) {
    Exponents stripped = e;
    const auto k = stripped[static_cast<std::size_t>(var)];
    stripped[static_cast<std::size_t>(var)] = 0;
    out[k].terms_.emplace(stripped, c);
  }
  return out;
}

std::vector<Rational> Polynomial::dense() const {
  if (arity_ != 1) throw Error(ErrorCode::ArityMismatch, "dense() needs a univariate polynomial");
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree(0) + 1, 0)), Rational(0));
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  check_var(var);
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = k - 1;
    out.add_term(d, c * Rational(static_cast<unsigned long>(k)));
  }
  return out;
}

Polynomial Polynomial::evaluate(int var, const Rational& value) const {
  check_var(var);
  Polynomial out(arity_);
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [e, c] : terms_) {
    const auto k = e[static_cast<std::size_t>(var)];
    while (powers.size() <= k) powers.push_back(powers.back() * value);
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = 0;
    out.add_term(d, c * powers[k]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const {
  if (static_cast<int>(values.size()) != arity_) throw Error(ErrorCode::ArityMismatch, "wrong number of values");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int k = 0; k < arity_; ++k) {
      const auto ek = e[static_cast<std::size_t>(k)];
      if (ek) term *= rational_pow(values[static_cast<std::size_t>(k)], ek);
    }
    sum += term;
  }
  return sum;
}

Rational Polynomial::operator()(const Rational& x) const {
  if (arity_ != 1) throw Error(ErrorCode::ArityMismatch, "scalar evaluation needs a univariate polynomial");
  const auto coeffs = dense();
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
  check_same_arity(value);
  const auto coeffs = coefficients_in(var);
  Polynomial acc(arity_);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * value;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::swap_variables(int i, int j) const {
  check_var(i);
  check_var(j);
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    std::swap(d[static_cast<std::size_t>(i)], d[static_cast<std::size_t>(j)]);
    out.terms_.emplace(d, c);
  }
  return out;
}

Polynomial Polynomial::remap(int new_arity, const std::array<int, 3>& target) const {
  Polynomial out(new_arity);
  for (const auto& [e, c] : terms_) {
    Exponents d{0, 0, 0};
    for (int k = 0; k < arity_; ++k) {
      const auto ek = e[static_cast<std::size_t>(k)];
      if (ek == 0) continue;
      const int t = target[static_cast<std::size_t>(k)];
      if (t < 0 || t >= new_arity) throw Error(ErrorCode::ArityMismatch, "remap target out of range");
      d[static_cast<std::size_t>(t)] += ek;
    }
    out.add_term(d, c);
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  const Rational inv = 1 / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(arity_, Rational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_arity(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_arity(b);
  Polynomial out(a.arity_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& [e, c] : a.terms_) c = -c;
  return a;
}

// ---------------------------------------------------------------------------
// Division and gcd

DivMod divide(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != 1 || b.arity() != 1) throw Error(ErrorCode::ArityMismatch, "divide() is univariate");
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  Polynomial q(1), r = a;
  const int db = b.degree(0);
  const Rational lb = b.leading_coefficient();
  while (!r.is_zero() && r.degree(0) >= db) {
    const auto shift = static_cast<std::uint32_t>(r.degree(0) - db);
    const Rational f = r.leading_coefficient() / lb;
    const Polynomial m = Polynomial::monomial(1, {shift, 0, 0}, f);
    q += m;
    r -= m * b;
  }
  return {q, r};
}

std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "polynomial arity mismatch");
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  Polynomial q(a.arity()), r = a;
  const Exponents lb = b.leading_exponents();
  const Rational lc = b.leading_coefficient();
  while (!r.is_zero()) {
    const Exponents lr = r.leading_exponents();
    Exponents shift{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (lr[k] < lb[k]) return std::nullopt;
      shift[k] = lr[k] - lb[k];
    }
    const Polynomial m = Polynomial::monomial(a.arity(), shift, r.leading_coefficient() / lc);
    q += m;
    r -= m * b;
  }
  return q;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto q = try_exact_divide(a, b);
  if (!q) throw Error(ErrorCode::Internal, "inexact polynomial division");
  return *q;
}

namespace {

int main_variable(const Polynomial& a, const Polynomial& b) {
  for (int v = a.arity() - 1; v >= 0; --v) {
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  }
  return -1;
}

Polynomial shift_var(const Polynomial& p, int var, std::uint32_t k) {
  Exponents e{0, 0, 0};
  e[static_cast<std::size_t>(var)] = k;
  return p * Polynomial::monomial(p.arity(), e, Rational(1));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int var) {
  const int db = b.degree(var);
  const Polynomial lb = b.coefficients_in(var).back();
  Polynomial r = a;
  while (!r.is_zero() && r.degree(var) >= db) {
    const int dr = r.degree(var);
    const Polynomial lr = r.coefficients_in(var).back();
    r = lb * r - shift_var(lr * b, var, static_cast<std::uint32_t>(dr - db));
  }
  return r;
}

}  // namespace

Polynomial content(const Polynomial& p, int var) {
  Polynomial g(p.arity());
  for (const auto& c : p.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "gcd of polynomials of different arity");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const int v = main_variable(a, b);
  if (v < 0) return Polynomial::constant(a.arity(), Rational(1));

  const Polynomial ca = content(a, v);
  const Polynomial cb = content(b, v);
  const Polynomial c = poly_gcd(ca, cb);
  Polynomial pa = exact_divide(a, ca);
  Polynomial pb = exact_divide(b, cb);
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = Polynomial(a.arity());
    } else {
      pb = exact_divide(r, content(r, v)).monic();
    }
  }
  if (pa.degree(v) <= 0) return c.monic();
  return (c * pa).monic();
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, int arity) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(arity, Rational(1));
  bool negate = false;
  Polynomial prev = Polynomial::constant(arity, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(arity);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
  if (p.arity() != q.arity()) throw Error(ErrorCode::ArityMismatch, "resultant of polynomials of different arity");
  const int m = p.degree(var);
  const int n = q.degree(var);
  if (m < 1 || n < 1) throw Error(ErrorCode::Precondition, "resultant needs positive degree in the eliminated variable");
  const auto pc = p.coefficients_in(var);
  const auto qc = q.coefficients_in(var);
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Polynomial>> sylvester(size, std::vector<Polynomial>(size, Polynomial(p.arity())));
  for (int row = 0; row < n; ++row) {
    for (int k = 0; k <= m; ++k) sylvester[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = pc[static_cast<std::size_t>(m - k)];
  }
  for (int row = 0; row < m; ++row) {
    for (int k = 0; k <= n; ++k) {
      sylvester[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + k)] = qc[static_cast<std::size_t>(n - k)];
    }
  }
  return bareiss_determinant(std::move(sylvester), p.arity());
}

Polynomial discriminant(const Polynomial& p, int var) {
  const int n = p.degree(var);
  if (n < 2) throw Error(ErrorCode::Precondition, "discriminant needs degree >= 2");
  const Polynomial lc = p.coefficients_in(var).back();
  Polynomial r = exact_divide(resultant(p, p.derivative(var), var), lc);
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// ---------------------------------------------------------------------------
// Square-free decomposition and square roots

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& p) {
  if (p.arity() != 1) throw Error(ErrorCode::ArityMismatch, "square-free decomposition is univariate");
  std::vector<std::pair<Polynomial, int>> out;
  if (p.degree(0) < 1) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative(0);
  const Polynomial a0 = poly_gcd(f, df);
  Polynomial b = exact_divide(f, a0);
  Polynomial c = exact_divide(df, a0);
  Polynomial d = c - b.derivative(0);
  int i = 1;
  while (b.degree(0) > 0) {
    const Polynomial a = poly_gcd(b, d);
    if (a.degree(0) > 0) out.emplace_back(a, i);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative(0);
    ++i;
  }
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial out = Polynomial::constant(1, Rational(1));
  for (const auto& [f, mult] : squarefree_decomposition(p)) out *= f;
  return out;
}

std::optional<Polynomial> polynomial_sqrt(const Polynomial& p) {
  if (p.arity() != 1) throw Error(ErrorCode::ArityMismatch, "polynomial_sqrt is univariate");
  if (p.is_zero()) return p;
  const int deg = p.degree(0);
  if (deg % 2 != 0) return std::nullopt;
  const auto c = p.dense();
  const Rational lead = c.back();
  if (!is_square(lead)) return std::nullopt;
  const int d = deg / 2;
  std::vector<Rational> s(static_cast<std::size_t>(d + 1), Rational(0));
  s[static_cast<std::size_t>(d)] = exact_sqrt(lead);
  for (int i = 1; i <= d; ++i) {
    Rational acc = c[static_cast<std::size_t>(deg - i)];
    for (int j = 1; j < i; ++j) acc -= s[static_cast<std::size_t>(d - j)] * s[static_cast<std::size_t>(d - i + j)];
    s[static_cast<std::size_t>(d - i)] = acc / (2 * s[static_cast<std::size_t>(d)]);
  }
  Polynomial root = Polynomial::univariate(s);
  if (root * root == p) return root;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Rational roots: roots modulo a good prime lifted p-adically, then recovered
// as a_n * root (an integer of bounded size) and confirmed by substitution.

namespace {

using ModPoly = std::vector<std::uint64_t>;  // ascending, coefficients mod p

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

void trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, std::uint64_t p) {
  const std::uint64_t inv = powmod(b.back(), p - 2, p);
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint64_t f = mulmod(a.back(), inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[shift + k] = (a[shift + k] + p - mulmod(f, b[k], p)) % p;
    }
    trim(a);
  }
  return a;
}

bool squarefree_mod(const ModPoly& f, std::uint64_t p) {
  ModPoly df;
  for (std::size_t k = 1; k < f.size(); ++k) df.push_back(mulmod(f[k], k % p, p));
  trim(df);
  if (df.empty()) return false;
  ModPoly a = f, b = df;
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer eval_int(const std::vector<Integer>& c, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod_floor(Integer(acc * x + *it), m);
  return acc;
}

// Distinct rational roots of a square-free integer polynomial with c[0] != 0.
std::vector<Rational> squarefree_integer_roots(const std::vector<Integer>& c) {
  const std::size_t n = c.size() - 1;
  if (n == 1) return {make_rational(-c[0], c[1])};
  std::uint64_t p = 3;
  ModPoly fp;
  for (;; p += 2) {
    if (!is_small_prime(p)) continue;
    const Integer pz(static_cast<unsigned long>(p));
    if (mod_floor(c.back(), pz) == 0) continue;
    fp.clear();
    for (const auto& v : c) fp.push_back(mod_floor(v, pz).get_ui());
    if (squarefree_mod(fp, p)) break;
    if (p > 1'000'000) throw Error(ErrorCode::Internal, "no good prime for rational root search");
  }
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (auto it = fp.rbegin(); it != fp.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
    if (acc == 0) seeds.push_back(x);
  }
  Integer bound = 0;
  for (const auto& v : c) bound = std::max(bound, Integer(abs(v)));
  bound = 2 * (bound + abs(c.back())) + 1;

  std::vector<Integer> dc;
  for (std::size_t k = 1; k < c.size(); ++k) dc.push_back(c[k] * static_cast<unsigned long>(k));

  std::vector<Rational> roots;
  for (const auto seed : seeds) {
    Integer m(static_cast<unsigned long>(p));
    Integer r(static_cast<unsigned long>(seed));
    while (m <= bound) {
      const Integer m2 = m * m;
      Integer deriv = eval_int(dc, r, m2);
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), m2.get_mpz_t()) == 0) {
        throw Error(ErrorCode::Internal, "Hensel lift hit a non-unit derivative");
      }
      r = mod_floor(Integer(r - eval_int(c, r, m2) * inv), m2);
      m = m2;
    }
    Integer scaled = mod_floor(Integer(c.back() * r), m);
    if (2 * scaled > m) scaled -= m;
    const Rational candidate = make_rational(scaled, c.back());
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * candidate + Rational(*it);
    if (acc == 0) roots.push_back(candidate);
  }
  return roots;
}

std::vector<Integer> primitive_integer_coefficients(const Polynomial& f) {
  const auto q = f.dense();
  Integer lcm = 1;
  for (const auto& v : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> c;
  Integer g = 0;
  for (const auto& v : q) {
    c.push_back(v.get_num() * (lcm / v.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.back().get_mpz_t());
  }
  for (auto& v : c) v /= g;
  return c;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
  if (p.arity() != 1) throw Error(ErrorCode::ArityMismatch, "rational_roots is univariate");
  if (p.is_zero()) throw Error(ErrorCode::Precondition, "rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  // Strip the power of x first so every square-free factor has c[0] != 0.
  const std::uint32_t zero_mult = p.terms().begin()->first[0];
  for (std::uint32_t k = 0; k < zero_mult; ++k) roots.emplace_back(0);
  Polynomial rest(1);
  for (const auto& [e, c] : p.terms()) rest.add_term({e[0] - zero_mult, 0, 0}, c);
  for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
    for (const auto& r : squarefree_integer_roots(primitive_integer_coefficients(factor))) {
      for (int k = 0; k < mult; ++k) roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string to_string(const Polynomial& p, std::string_view names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      coeff = abs(coeff);
    } else if (coeff < 0) {
      os << "-";
      coeff = -coeff;
    }
    first = false;
    const bool has_vars = e[0] + e[1] + e[2] > 0;
    bool need_star = false;
    if (!has_vars || coeff != 1) {
      os << coeff.get_str();
      need_star = true;
    }
    for (int k = 0; k < p.arity(); ++k) {
      const auto ek = e[static_cast<std::size_t>(k)];
      if (ek == 0) continue;
      if (need_star) os << "*";
      os << (static_cast<std::size_t>(k) < names.size() ? names[static_cast<std::size_t>(k)] : '?');
      if (ek > 1) os << "^" << ek;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace fibra
