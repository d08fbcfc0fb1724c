#ifndef WNLIE_DERIVATION_HPP
#define WNLIE_DERIVATION_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wnlie/polynomial.hpp"

namespace wnlie {

/// Polynomial vector field D = f_1 d/dx_1 + ... + f_n d/dx_n, i.e. a
/// derivation of the polynomial ring in n variables. Printed with "di"
/// standing for d/dx_i.
class Derivation {
public:
  explicit Derivation(int n) : n_(n), coeffs_(static_cast<size_t>(n), Polynomial(n)) {
    if (n < 1) throw std::invalid_argument("Derivation: need at least one variable");
  }
  Derivation(int n, std::vector<Polynomial> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != n)
      throw std::invalid_argument("Derivation: coefficient count must equal variable count");
    for (const auto& p : coeffs_)
      if (p.nvars() != n) throw std::invalid_argument("Derivation: variable-count mismatch");
  }

  static Derivation zero(int n) { return Derivation(n); }
  /// d/dx_i.
  static Derivation partial(int n, int i) {
    Derivation d(n);
    d.coefficient(i) = Polynomial::one(n);
    return d;
  }
  /// c * x^m * d/dx_i.
  static Derivation term(Monomial m, int i, Rational c) {
    Derivation d(m.nvars());
    d.coefficient(i) = Polynomial::term(std::move(m), std::move(c));
    return d;
  }

  int nvars() const { return n_; }
  bool is_zero() const {
    for (const auto& p : coeffs_)
      if (!p.is_zero()) return false;
    return true;
  }

  /// Coefficient of d/dx_i, 1-based.
  const Polynomial& coefficient(int i) const { check_index(i); return coeffs_[static_cast<size_t>(i - 1)]; }
  Polynomial& coefficient(int i) { check_index(i); return coeffs_[static_cast<size_t>(i - 1)]; }

  /// Action on a polynomial: D(f) = sum_i f_i * df/dx_i.
  Polynomial apply(const Polynomial& f) const {
    if (f.nvars() != n_) throw std::invalid_argument("Derivation::apply: variable-count mismatch");
    Polynomial r(n_);
    for (int i = 1; i <= n_; ++i) {
      const Polynomial& fi = coeffs_[static_cast<size_t>(i - 1)];
      if (fi.is_zero()) continue;
      r += fi * f.partial_derivative(i);
    }
    return r;
  }

  Derivation& operator+=(const Derivation& o) {
    check_same(o);
    for (int i = 0; i < n_; ++i) coeffs_[static_cast<size_t>(i)] += o.coeffs_[static_cast<size_t>(i)];
    return *this;
  }
  Derivation& operator-=(const Derivation& o) {
    check_same(o);
    for (int i = 0; i < n_; ++i) coeffs_[static_cast<size_t>(i)] -= o.coeffs_[static_cast<size_t>(i)];
    return *this;
  }
  friend Derivation operator+(Derivation a, const Derivation& b) { a += b; return a; }
  friend Derivation operator-(Derivation a, const Derivation& b) { a -= b; return a; }
  friend Derivation operator-(const Derivation& a) { return Rational(-1) * a; }
  friend Derivation operator*(const Rational& c, const Derivation& d) {
    Derivation r(d.n_);
    for (int i = 1; i <= d.n_; ++i) r.coefficient(i) = c * d.coefficient(i);
    return r;
  }
  friend Derivation operator*(const Polynomial& f, const Derivation& d) {
    Derivation r(d.n_);
    for (int i = 1; i <= d.n_; ++i) r.coefficient(i) = f * d.coefficient(i);
    return r;
  }

  friend bool operator==(const Derivation& a, const Derivation& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  /// Canonical text form, e.g. "x1^2 d1 - 2/3*x1*x2 d2".
  std::string str() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
      const Polynomial& fi = coefficient(i);
      for (const auto& [m, c] : fi.terms()) {
        Rational a = c.abs();
        if (s.empty())
          s += (c.sign() < 0) ? "-" : "";
        else
          s += (c.sign() < 0) ? " - " : " + ";
        if (!m.is_constant()) {
          if (!a.is_one()) s += a.str() + "*";
          s += m.str() + " ";
        } else if (!a.is_one()) {
          s += a.str() + " ";
        }
        s += "d" + std::to_string(i);
      }
    }
    return s.empty() ? "0" : s;
  }

private:
  void check_index(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("Derivation: direction index out of range");
  }
  void check_same(const Derivation& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Derivation: variable-count mismatch");
  }
  int n_;
  std::vector<Polynomial> coeffs_;
};

/// Lie bracket [D1, D2]; its d/dx_j coefficient is D1(g_j) - D2(f_j).
inline Derivation bracket(const Derivation& a, const Derivation& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("bracket: variable-count mismatch");
  int n = a.nvars();
  Derivation r(n);
  for (int j = 1; j <= n; ++j)
    r.coefficient(j) = a.apply(b.coefficient(j)) - b.apply(a.coefficient(j));
  return r;
}

/// Div D = sum_i d(f_i)/dx_i.
inline Polynomial divergence(const Derivation& d) {
  Polynomial r(d.nvars());
  for (int i = 1; i <= d.nvars(); ++i) r += d.coefficient(i).partial_derivative(i);
  return r;
}

/// Euler derivation x1 d1 + ... + xn dn. Requires n >= 2.
inline Derivation euler(int n) {
  if (n < 2) throw std::invalid_argument("euler: need at least two variables");
  Derivation d(n);
  for (int i = 1; i <= n; ++i) d.coefficient(i) = Polynomial::variable(n, i);
  return d;
}

/// Derivation homogeneous of degree m >= -1: every nonzero coefficient is a
/// homogeneous polynomial of total degree m + 1.
class HomogeneousDerivation {
public:
  HomogeneousDerivation(Derivation d, int degree) : d_(std::move(d)), degree_(degree) {
    if (degree < -1) throw std::invalid_argument("HomogeneousDerivation: degree below -1");
    for (int i = 1; i <= d_.nvars(); ++i)
      if (!d_.coefficient(i).is_homogeneous(degree + 1))
        throw std::invalid_argument("HomogeneousDerivation: coefficients not homogeneous of degree " +
                                    std::to_string(degree + 1));
  }

  static HomogeneousDerivation zero(int n, int degree) {
    return HomogeneousDerivation(Derivation::zero(n), degree);
  }

  const Derivation& derivation() const { return d_; }
  int degree() const { return degree_; }
  int nvars() const { return d_.nvars(); }
  bool is_zero() const { return d_.is_zero(); }
  std::string str() const { return d_.str(); }

  friend bool operator==(const HomogeneousDerivation& a, const HomogeneousDerivation& b) {
    return a.degree_ == b.degree_ && a.d_ == b.d_;
  }

private:
  Derivation d_;
  int degree_;
};

/// Splits D by coefficient degree: the key-j part has coefficients of degree
/// j + 1 (constant coefficients land at key -1). The zero derivation yields
/// the empty map, and the parts sum back to D.
inline std::map<int, HomogeneousDerivation> graded_split(const Derivation& d) {
  int n = d.nvars();
  std::map<int, Derivation> parts;
  for (int i = 1; i <= n; ++i) {
    for (const auto& [deg, comp] : d.coefficient(i).homogeneous_components()) {
      auto [it, ins] = parts.try_emplace(deg - 1, Derivation::zero(n));
      it->second.coefficient(i) += comp;
    }
  }
  std::map<int, HomogeneousDerivation> out;
  for (auto& [deg, part] : parts) out.emplace(deg, HomogeneousDerivation(std::move(part), deg));
  return out;
}

/// Top degree of D: the largest key of graded_split, or -2 for D = 0.
inline int top_degree(const Derivation& d) {
  int top = -2;
  for (int i = 1; i <= d.nvars(); ++i)
    top = std::max(top, d.coefficient(i).total_degree() - 1);
  return top;
}

/// Decides whether D = f * E_n for a homogeneous f of degree m, returning the
/// witness f. Solves f from the d/dx_1 coefficient by exact division and
/// cross-checks every coordinate.
inline std::optional<Polynomial> is_euler_multiple(const HomogeneousDerivation& hd) {
  if (hd.degree() < 0) throw std::invalid_argument("is_euler_multiple: degree must be >= 0");
  int n = hd.nvars();
  const Derivation& d = hd.derivation();
  std::optional<Polynomial> f;
  if (d.coefficient(1).is_zero())
    f = Polynomial::zero(n);
  else
    f = d.coefficient(1).divided_by_variable(1);
  if (!f) return std::nullopt;
  for (int i = 1; i <= n; ++i)
    if (d.coefficient(i) != (*f) * Polynomial::variable(n, i)) return std::nullopt;
  return f;
}

}  // namespace wnlie

#endif  // WNLIE_DERIVATION_HPP
