#ifndef WNLIE_GRADED_HPP
#define WNLIE_GRADED_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wnlie/derivation.hpp"
#include "wnlie/linalg.hpp"
#include "wnlie/monomial.hpp"

namespace wnlie {

/// Dimension of the degree-i graded component of the vector-field algebra in
/// n variables: n * C(n+i, i+1). Degree -1 gives n, degrees below -1 give 0.
inline long long dim_graded(int n, int i) {
  if (n < 2) throw std::invalid_argument("dim_graded: need n >= 2");
  if (i < -1) return 0;
  return n * binomial(n + i, i + 1);
}

/// Dimension of the divergence-free subspace of the degree-i component:
/// (n+i+1) * C(n+i-1, i+1).
inline long long dim_divergence_free(int n, int i) {
  if (n < 2) throw std::invalid_argument("dim_divergence_free: need n >= 2");
  if (i < -1) return 0;
  return (n + i + 1) * binomial(n + i - 1, i + 1);
}

/// Dimension of the space of Euler-field multiples f*E with f homogeneous of
/// degree i: C(n+i-1, i). Zero for i < 0.
inline long long dim_euler_multiples(int n, int i) {
  if (n < 2) throw std::invalid_argument("dim_euler_multiples: need n >= 2");
  if (i < 0) return 0;
  return binomial(n + i - 1, i);
}

/// Ordered basis of the degree-m graded component: elements x^J d_i with
/// |J| = m+1, listed direction-major (i ascending) and monomials descending
/// graded-lex within each direction.
class GradedBasis {
public:
  GradedBasis(int n, int degree) : n_(n), degree_(degree) {
    if (n < 2) throw std::invalid_argument("GradedBasis: need n >= 2");
    if (degree < -1) throw std::invalid_argument("GradedBasis: degree below -1");
    monos_ = monomials_of_degree(n, degree + 1);
  }

  int nvars() const { return n_; }
  int degree() const { return degree_; }
  int monomial_count() const { return static_cast<int>(monos_.size()); }
  int dim() const { return n_ * monomial_count(); }

  const std::vector<Monomial>& monomials() const { return monos_; }
  const Monomial& monomial_of(int idx) const { return monos_[static_cast<size_t>(idx % monomial_count())]; }
  int direction_of(int idx) const { return idx / monomial_count() + 1; }

  int index(const Monomial& mono, int dir) const {
    if (dir < 1 || dir > n_) throw std::out_of_range("GradedBasis: direction out of range");
    if (mono.degree() != degree_ + 1)
      throw std::invalid_argument("GradedBasis: monomial degree mismatch");
    return (dir - 1) * monomial_count() + static_cast<int>(monomial_rank(mono));
  }

  Vec to_coords(const HomogeneousDerivation& hd) const {
    if (hd.nvars() != n_ || hd.degree() != degree_)
      throw std::invalid_argument("GradedBasis: derivation does not match basis");
    Vec out(static_cast<size_t>(dim()));
    for (int i = 1; i <= n_; ++i)
      for (const auto& [mono, c] : hd.derivation().coefficient(i).terms())
        out[static_cast<size_t>(index(mono, i))] = c;
    return out;
  }

  HomogeneousDerivation from_coords(const Vec& v) const {
    if (static_cast<int>(v.size()) != dim())
      throw std::invalid_argument("GradedBasis: coordinate size mismatch");
    Derivation d = Derivation::zero(n_);
    for (int idx = 0; idx < dim(); ++idx) {
      const Rational& c = v[static_cast<size_t>(idx)];
      if (c.is_zero()) continue;
      d += Derivation::term(monomial_of(idx), direction_of(idx), c);
    }
    return HomogeneousDerivation(std::move(d), degree_);
  }

private:
  int n_, degree_;
  std::vector<Monomial> monos_;
};

/// Shared per-thread cache of graded bases.
inline const GradedBasis& graded_basis(int n, int degree) {
  thread_local std::map<std::pair<int, int>, GradedBasis> cache;
  auto key = std::make_pair(n, degree);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.try_emplace(key, GradedBasis(n, degree)).first;
  return it->second;
}

/// Euler-multiple part of a homogeneous derivation: (Div D / (m+n)) * E.
inline HomogeneousDerivation euler_part(const HomogeneousDerivation& hd) {
  int n = hd.nvars();
  int m = hd.degree();
  if (m < 0) return HomogeneousDerivation::zero(n, m);
  Polynomial f = Rational(1, m + n) * divergence(hd.derivation());
  return HomogeneousDerivation(f * euler(n), m);
}

/// Divergence-free part: the complement of the Euler-multiple part.
inline HomogeneousDerivation divergence_free_part(const HomogeneousDerivation& hd) {
  return HomogeneousDerivation(hd.derivation() - euler_part(hd).derivation(), hd.degree());
}

/// Divergence in coordinates: image of a degree-m component vector in the
/// space of degree-m coefficient vectors (descending monomial order).
inline Vec divergence_coords(const GradedBasis& basis, const Vec& v) {
  int n = basis.nvars();
  int m = basis.degree();
  Vec out(static_cast<size_t>(monomial_count(n, m)));
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const Rational& c = v[static_cast<size_t>(idx)];
    if (c.is_zero()) continue;
    const Monomial& J = basis.monomial_of(idx);
    int s = basis.direction_of(idx);
    int e = J.exponent(s);
    if (e == 0) continue;
    long long row = monomial_rank(J.divided_by_variable(s));
    out[static_cast<size_t>(row)].addmul(c, Rational(e));
  }
  return out;
}

/// Matrix of the divergence map from the degree-m component onto homogeneous
/// polynomials of degree m (rows ordered by the descending monomial list).
inline Matrix divergence_matrix(const GradedBasis& basis) {
  int n = basis.nvars();
  int m = basis.degree();
  auto out_monos = monomials_of_degree(n, m);
  Matrix mat(static_cast<int>(out_monos.size()), basis.dim());
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const Monomial& J = basis.monomial_of(idx);
    int s = basis.direction_of(idx);
    int e = J.exponent(s);
    if (e == 0) continue;
    long long row = monomial_rank(J.divided_by_variable(s));
    mat.at(static_cast<int>(row), idx) = Rational(e);
  }
  return mat;
}

/// Divergence-free subspace of the degree-m component, in basis coordinates.
inline Subspace divergence_free_subspace(const GradedBasis& basis) {
  return nullspace(divergence_matrix(basis));
}

/// Subspace of Euler-field multiples of the degree-m component.
inline Subspace euler_multiples_subspace(const GradedBasis& basis) {
  int n = basis.nvars();
  int m = basis.degree();
  Subspace s(basis.dim());
  if (m < 0) return s;
  for (const auto& K : monomials_of_degree(n, m)) {
    Vec v(static_cast<size_t>(basis.dim()));
    for (int i = 1; i <= n; ++i) v[static_cast<size_t>(basis.index(K.times_variable(i), i))] = 1;
    s.insert(std::move(v));
  }
  return s;
}

/// Lie bracket in coordinates. Uses the basis-pair expansion
///   [x^J d_s, x^K d_t] = K_s x^(J+K-e_s) d_t - J_t x^(J+K-e_t) d_s,
/// so each pair contributes at most two terms. Returns coordinates in the
/// degree p+q basis; if p+q < -1 the bracket vanishes and the result is
/// empty.
inline Vec bracket_coords(const GradedBasis& ba, const Vec& u, const GradedBasis& bb, const Vec& v) {
  int n = ba.nvars();
  if (bb.nvars() != n) throw std::invalid_argument("bracket_coords: variable count mismatch");
  int p = ba.degree(), q = bb.degree();
  if (p + q < -1) return Vec();
  const GradedBasis& target = graded_basis(n, p + q);
  Vec out(static_cast<size_t>(target.dim()));
  for (int ia = 0; ia < ba.dim(); ++ia) {
    const Rational& cu = u[static_cast<size_t>(ia)];
    if (cu.is_zero()) continue;
    const Monomial& J = ba.monomial_of(ia);
    int s = ba.direction_of(ia);
    for (int ib = 0; ib < bb.dim(); ++ib) {
      const Rational& cv = v[static_cast<size_t>(ib)];
      if (cv.is_zero()) continue;
      const Monomial& K = bb.monomial_of(ib);
      int t = bb.direction_of(ib);
      Rational c = cu * cv;
      if (int ks = K.exponent(s); ks != 0) {
        Monomial prod = J.times(K).divided_by_variable(s);
        out[static_cast<size_t>(target.index(prod, t))].addmul(c, Rational(ks));
      }
      if (int jt = J.exponent(t); jt != 0) {
        Monomial prod = J.times(K).divided_by_variable(t);
        out[static_cast<size_t>(target.index(prod, s))].submul(c, Rational(jt));
      }
    }
  }
  return out;
}

/// Action of the degree-0 generator x_a d_b on degree-m coordinates:
///   [x_a d_b, x^J d_i] = J_b x^(J - e_b + e_a) d_i  (minus x^J d_b when i = a).
inline Vec apply_generator(const GradedBasis& basis, int a, int b, const Vec& v) {
  int n = basis.nvars();
  if (a < 1 || a > n || b < 1 || b > n)
    throw std::out_of_range("apply_generator: generator index out of range");
  Vec out(static_cast<size_t>(basis.dim()));
  for (int idx = 0; idx < basis.dim(); ++idx) {
    const Rational& c = v[static_cast<size_t>(idx)];
    if (c.is_zero()) continue;
    const Monomial& J = basis.monomial_of(idx);
    int i = basis.direction_of(idx);
    if (int jb = J.exponent(b); jb != 0) {
      Monomial shifted = J.divided_by_variable(b).times_variable(a);
      out[static_cast<size_t>(basis.index(shifted, i))].addmul(c, Rational(jb));
    }
    if (i == a) out[static_cast<size_t>(basis.index(J, b))] -= c;
  }
  return out;
}

}  // namespace wnlie

#endif  // WNLIE_GRADED_HPP
