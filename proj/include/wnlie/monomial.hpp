#ifndef WNLIE_MONOMIAL_HPP
#define WNLIE_MONOMIAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wnlie {

/// Binomial coefficient; desk-scale arguments only, guarded against overflow.
inline long long binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  long long r = 1;
  for (long long k = 1; k <= b; ++k) {
    if (r > (1LL << 56)) throw std::overflow_error("binomial: argument too large");
    r = r * (a - b + k) / k;
  }
  return r;
}

/// Number of monomials of total degree d in n variables.
inline long long monomial_count(int n, int d) {
  if (d < 0) return 0;
  return binomial(d + n - 1, n - 1);
}

/// Multi-index of exponents (j_1,...,j_n); the monomial x1^{j_1}...xn^{j_n}.
class Monomial {
public:
  explicit Monomial(int n) : e_(static_cast<size_t>(n), 0) {
    if (n < 1) throw std::invalid_argument("Monomial: need at least one variable");
  }
  Monomial(std::initializer_list<int> exps) : e_(exps) { validate(); }
  static Monomial from_exponents(std::vector<int> exps) {
    Monomial m;
    m.e_ = std::move(exps);
    m.validate();
    return m;
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  /// Exponent of x_i, 1-based.
  int exponent(int i) const { check_index(i); return e_[static_cast<size_t>(i - 1)]; }

  bool is_constant() const { return degree() == 0; }

  Monomial times(const Monomial& o) const {
    check_same(o);
    Monomial r = *this;
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
  }
  Monomial times_variable(int i) const {
    check_index(i);
    Monomial r = *this;
    ++r.e_[static_cast<size_t>(i - 1)];
    return r;
  }
  /// Exact division by x_i; exponent must be positive.
  Monomial divided_by_variable(int i) const {
    check_index(i);
    if (e_[static_cast<size_t>(i - 1)] == 0)
      throw std::domain_error("Monomial: not divisible by variable");
    Monomial r = *this;
    --r.e_[static_cast<size_t>(i - 1)];
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  /// Graded-lex order with x1 > x2 > ... > xn: compare total degree, then
  /// exponent vectors lexicographically. Returns <0, 0, >0.
  friend int grlex_compare(const Monomial& a, const Monomial& b) {
    a.check_same(b);
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t k = 0; k < a.e_.size(); ++k)
      if (a.e_[k] != b.e_[k]) return a.e_[k] < b.e_[k] ? -1 : 1;
    return 0;
  }

  /// "x1^2*x3"; "1" for the constant monomial.
  std::string str() const {
    std::string s;
    for (size_t k = 0; k < e_.size(); ++k) {
      if (e_[k] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(k + 1);
      if (e_[k] > 1) s += "^" + std::to_string(e_[k]);
    }
    return s.empty() ? "1" : s;
  }

private:
  Monomial() = default;
  void validate() const {
    if (e_.empty()) throw std::invalid_argument("Monomial: need at least one variable");
    for (int j : e_)
      if (j < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
  void check_index(int i) const {
    if (i < 1 || i > nvars()) throw std::out_of_range("Monomial: variable index out of range");
  }
  void check_same(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable-count mismatch");
  }
  std::vector<int> e_;
};

/// Comparator placing larger monomials first, so map iteration starts at the
/// leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) > 0; }
};

/// All monomials of total degree d in n variables, in descending graded-lex
/// order (x1^d first, xn^d last).
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 1) throw std::invalid_argument("monomials_of_degree: bad variable count");
  if (d < 0) return {};
  std::vector<Monomial> out;
  out.reserve(static_cast<size_t>(monomial_count(n, d)));
  std::vector<int> e(static_cast<size_t>(n), 0);
  // Descend over e_1 = d..0, then the remaining variables.
  auto rec = [&](auto&& self, int var, int rest) -> void {
    if (var == n - 1) {
      e[static_cast<size_t>(var)] = rest;
      out.push_back(Monomial::from_exponents(e));
      return;
    }
    for (int t = rest; t >= 0; --t) {
      e[static_cast<size_t>(var)] = t;
      self(self, var + 1, rest - t);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Rank of m within monomials_of_degree(nvars, degree); inverse of the
/// enumeration above.
inline long long monomial_rank(const Monomial& m) {
  int n = m.nvars();
  int d = m.degree();
  long long rank = 0;
  for (int v = 1; v < n; ++v) {
    int e = m.exponent(v);
    for (int t = e + 1; t <= d; ++t) rank += monomial_count(n - v, d - t);
    d -= e;
  }
  return rank;
}

}  // namespace wnlie

#endif  // WNLIE_MONOMIAL_HPP
