#ifndef WNLIE_LINALG_HPP
#define WNLIE_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "wnlie/rational.hpp"

namespace wnlie {

using Vec = std::vector<Rational>;

/// Dense matrix of exact rationals.
class Matrix {
public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix identity(int k) {
    Matrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<Vec>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(rows[r].size()) != cols)
        throw std::invalid_argument("Matrix: ragged rows");
      for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
  const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j).addmul(aik, bkj);
        }
      }
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: size mismatch in difference");
    Matrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix: vector size mismatch");
    Vec r(static_cast<size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int c = 0; c < cols_; ++c) {
        const Rational& aic = at(i, c);
        if (aic.is_zero() || v[static_cast<size_t>(c)].is_zero()) continue;
        r[static_cast<size_t>(i)].addmul(aic, v[static_cast<size_t>(c)]);
      }
    return r;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination. Pivot rule:
/// least column first, then the candidate entry with the largest absolute
/// numerator. Returns (R, rank).
inline std::pair<Matrix, int> rref(Matrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (m.at(r, col).is_zero()) continue;
      if (pivot < 0 || cmp_abs_numerator(m.at(r, col), m.at(pivot, col)) > 0) pivot = r;
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    Rational inv = m.at(rank, col).inverse();
    for (int c = col; c < m.cols(); ++c) {
      if (m.at(rank, c).is_zero()) continue;
      m.at(rank, c) *= inv;
    }
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      Rational factor = m.at(r, col);
      if (factor.is_zero()) continue;
      m.at(r, col) = 0;
      for (int c = col + 1; c < m.cols(); ++c) {
        if (m.at(rank, c).is_zero()) continue;
        m.at(r, c).submul(factor, m.at(rank, c));
      }
    }
    ++rank;
  }
  return {std::move(m), rank};
}

/// Linear subspace of Q^ambient held as a canonical reduced row-echelon
/// basis: pivot columns strictly increasing, pivots 1, pivot columns zero
/// elsewhere. Two subspaces are equal iff their bases are identical.
class Subspace {
public:
  explicit Subspace(int ambient) : ambient_(ambient) {
    if (ambient < 0) throw std::invalid_argument("Subspace: negative ambient dimension");
  }

  static Subspace zero(int ambient) { return Subspace(ambient); }
  static Subspace full(int ambient) {
    Subspace s(ambient);
    for (int i = 0; i < ambient; ++i) {
      Vec e(static_cast<size_t>(ambient));
      e[static_cast<size_t>(i)] = 1;
      s.rows_.push_back(std::move(e));
      s.pivots_.push_back(i);
    }
    return s;
  }
  static Subspace span(int ambient, const std::vector<Vec>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_full() const { return dim() == ambient_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivot_columns() const { return pivots_; }

  /// Residual of v after elimination against the basis; zero iff v lies in
  /// the subspace.
  Vec reduce(Vec v) const {
    check_vec(v);
    for (size_t r = 0; r < rows_.size(); ++r) {
      Rational& c = v[static_cast<size_t>(pivots_[r])];
      if (c.is_zero()) continue;
      const Vec& row = rows_[r];
      Rational factor = c;
      c = 0;
      for (int j = pivots_[r] + 1; j < ambient_; ++j) {
        const Rational& rj = row[static_cast<size_t>(j)];
        if (rj.is_zero()) continue;
        v[static_cast<size_t>(j)].submul(factor, rj);
      }
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec res = reduce(v);
    for (const auto& x : res)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Adds v to the span, keeping the basis canonical. Returns true if the
  /// dimension grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!v[static_cast<size_t>(j)].is_zero()) { lead = j; break; }
    if (lead < 0) return false;
    Rational inv = v[static_cast<size_t>(lead)].inverse();
    for (int j = lead; j < ambient_; ++j) {
      if (v[static_cast<size_t>(j)].is_zero()) continue;
      v[static_cast<size_t>(j)] *= inv;
    }
    // Clear the new pivot column in existing rows.
    for (size_t r = 0; r < rows_.size(); ++r) {
      Rational& c = rows_[r][static_cast<size_t>(lead)];
      if (c.is_zero()) continue;
      Rational factor = c;
      c = 0;
      for (int j = lead + 1; j < ambient_; ++j) {
        if (v[static_cast<size_t>(j)].is_zero()) continue;
        rows_[r][static_cast<size_t>(j)].submul(factor, v[static_cast<size_t>(j)]);
      }
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  void check_vec(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_)
      throw std::invalid_argument("Subspace: vector dimension mismatch");
  }
  int ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

/// Basis of {v : Mv = 0}, canonical.
inline Subspace nullspace(const Matrix& m) {
  auto [r, rank] = rref(m);
  std::vector<int> pivot_of_col(static_cast<size_t>(m.cols()), -1);
  {
    int row = 0;
    for (int col = 0; col < m.cols() && row < rank; ++col) {
      if (!r.at(row, col).is_zero()) {
        pivot_of_col[static_cast<size_t>(col)] = row;
        ++row;
      }
    }
  }
  Subspace out(m.cols());
  for (int col = 0; col < m.cols(); ++col) {
    if (pivot_of_col[static_cast<size_t>(col)] >= 0) continue;
    Vec v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(col)] = 1;
    for (int c = 0; c < m.cols(); ++c) {
      int pr = pivot_of_col[static_cast<size_t>(c)];
      if (pr >= 0) v[static_cast<size_t>(c)] = -r.at(pr, col);
    }
    out.insert(std::move(v));
  }
  return out;
}

/// Smallest subspace containing S and the given vectors.
inline Subspace span_union(Subspace s, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) s.insert(v);
  return s;
}
inline Subspace span_union(Subspace a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("span_union: ambient dimension mismatch");
  for (const auto& v : b.basis()) a.insert(v);
  return a;
}

}  // namespace wnlie

#endif  // WNLIE_LINALG_HPP
