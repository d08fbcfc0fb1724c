#ifndef WNLIE_POLYNOMIAL_HPP
#define WNLIE_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wnlie/monomial.hpp"
#include "wnlie/rational.hpp"

namespace wnlie {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending graded-lex order (leading term first) and
/// zero coefficients are never stored, so equal polynomials are structurally
/// identical.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  explicit Polynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Polynomial: need at least one variable");
  }

  static Polynomial zero(int n) { return Polynomial(n); }
  static Polynomial constant(int n, Rational c) {
    Polynomial p(n);
    p.add_term(Monomial(n), std::move(c));
    return p;
  }
  static Polynomial one(int n) { return constant(n, 1); }
  /// x_i, 1-based.
  static Polynomial variable(int n, int i) {
    Polynomial p(n);
    p.add_term(Monomial(n).times_variable(i), 1);
    return p;
  }
  static Polynomial term(Monomial m, Rational c) {
    Polynomial p(m.nvars());
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Leading total degree; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  bool is_constant() const { return total_degree() <= 0; }

  /// True iff every term has total degree d. The zero polynomial is
  /// homogeneous of every degree.
  bool is_homogeneous(int d) const {
    for (const auto& [m, c] : terms_)
      if (m.degree() != d) return false;
    return true;
  }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  /// Coefficient of the constant term.
  Rational constant_term() const { return coefficient(Monomial(n_)); }

  /// Accumulates c * x^m, dropping the term if the sum cancels.
  void add_term(Monomial m, Rational c) {
    if (m.nvars() != n_) throw std::invalid_argument("Polynomial: variable-count mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r(a.n_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial r(p.n_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }
  friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Formal partial derivative with respect to x_i, 1-based.
  Polynomial partial_derivative(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("partial_derivative: index out of range");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
      int e = m.exponent(i);
      if (e == 0) continue;
      r.terms_.emplace(m.divided_by_variable(i), c * Rational(e));
    }
    return r;
  }

  /// Splits into homogeneous parts keyed by total degree; no zero entries.
  std::map<int, Polynomial> homogeneous_components() const {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : terms_) {
      auto [it, inserted] = out.try_emplace(m.degree(), Polynomial(n_));
      it->second.terms_.emplace(m, c);
    }
    return out;
  }

  /// The homogeneous part of degree d (zero polynomial if absent).
  Polynomial homogeneous_part(int d) const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace(m, c);
    return r;
  }

  /// Exact quotient p / x_i, or nullopt when some term lacks the variable.
  std::optional<Polynomial> divided_by_variable(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("divided_by_variable: index out of range");
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
      if (m.exponent(i) == 0) return std::nullopt;
      r.terms_.emplace(m.divided_by_variable(i), c);
    }
    return r;
  }

  /// Canonical text form, e.g. "x1^2 - 2/3*x1*x2 + 1". Terms in descending
  /// graded-lex order; this is the polynomial syntax understood by the
  /// expression parser.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      Rational a = c.abs();
      if (s.empty())
        s += (c.sign() < 0) ? "-" : "";
      else
        s += (c.sign() < 0) ? " - " : " + ";
      if (m.is_constant())
        s += a.str();
      else if (a.is_one())
        s += m.str();
      else
        s += a.str() + "*" + m.str();
    }
    return s;
  }

private:
  void check_same(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Polynomial: variable-count mismatch");
  }
  int n_;
  TermMap terms_;
};

}  // namespace wnlie

#endif  // WNLIE_POLYNOMIAL_HPP
