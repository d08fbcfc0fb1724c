#ifndef WNLIE_STRUCTURE_HPP
#define WNLIE_STRUCTURE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "wnlie/graded.hpp"

namespace wnlie {

enum class Family { W, M, N };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::W: return "W";
    case Family::M: return "M";
    default: return "N";
  }
}

inline Subspace family_subspace(const GradedBasis& basis, Family f) {
  switch (f) {
    case Family::W: return Subspace::full(basis.dim());
    case Family::M: return divergence_free_subspace(basis);
    default: return euler_multiples_subspace(basis);
  }
}

/// Span of all brackets [a, b] with a in A, b in B, inside the degree i+j
/// component. Degrees below -1 collapse to the zero space in a zero-dimensional
/// ambient.
inline Subspace bracket_span(const GradedBasis& ba, const Subspace& A,
                             const GradedBasis& bb, const Subspace& B) {
  if (ba.nvars() != bb.nvars()) throw std::invalid_argument("bracket_span: variable count mismatch");
  int target_degree = ba.degree() + bb.degree();
  if (target_degree < -1) return Subspace::zero(0);
  const GradedBasis& target = graded_basis(ba.nvars(), target_degree);
  Subspace out(target.dim());
  for (const Vec& a : A.basis()) {
    for (const Vec& b : B.basis()) {
      out.insert(bracket_coords(ba, a, bb, b));
      if (out.is_full()) return out;
    }
  }
  return out;
}

enum class ProductClass { zero, equals_M, equals_N, equals_W, other_subspace };

inline const char* product_class_name(ProductClass c) {
  switch (c) {
    case ProductClass::zero: return "zero";
    case ProductClass::equals_M: return "equals_M";
    case ProductClass::equals_N: return "equals_N";
    case ProductClass::equals_W: return "equals_W";
    default: return "other_subspace";
  }
}

/// Identifies a subspace of the degree-d component among the named
/// submodules, checking zero, then the divergence-free and Euler-multiple
/// spaces, then the full component. Degree -1 has no inner decomposition, so
/// only zero and the full space are named there.
inline ProductClass classify_subspace(int n, int degree, const Subspace& s) {
  if (s.dim() == 0) return ProductClass::zero;
  if (degree < 0) return s.is_full() ? ProductClass::equals_W : ProductClass::other_subspace;
  const GradedBasis& basis = graded_basis(n, degree);
  if (s == divergence_free_subspace(basis)) return ProductClass::equals_M;
  if (s == euler_multiples_subspace(basis)) return ProductClass::equals_N;
  if (s.is_full()) return ProductClass::equals_W;
  return ProductClass::other_subspace;
}

struct ProductReport {
  int n = 0;
  Family left_family = Family::W;
  int left_degree = 0;
  Family right_family = Family::W;
  int right_degree = 0;
  int result_dim = 0;
  ProductClass classification = ProductClass::zero;
  ProductClass expected = ProductClass::zero;
  bool matches = false;
};

/// Expected classification of [left, right] per the bracket table. The M x N
/// block carries all the exceptional cases; everything W x W lands on the
/// full component except the degree-0 square (which closes on the
/// divergence-free part) and the bottom square (which vanishes).
inline ProductClass expected_product(Family fa, int i, Family fb, int j) {
  if ((fa == Family::N && fb == Family::M) || (fb == Family::W && fa != Family::W)) {
    std::swap(fa, fb);
    std::swap(i, j);
  }
  if (fa == Family::W && fb == Family::W) {
    if (i == -1 && j == -1) return ProductClass::zero;
    if (i == 0 && j == 0) return ProductClass::equals_M;
    return ProductClass::equals_W;
  }
  if (fa == Family::M && fb == Family::M) return ProductClass::equals_M;
  if (fa == Family::N && fb == Family::N)
    return i == j ? ProductClass::zero : ProductClass::equals_N;
  if (fa == Family::M && fb == Family::N) {
    if (i == 0 && j == 0) return ProductClass::zero;
    if (i == 0) return ProductClass::equals_N;
    if (j == 0) return ProductClass::equals_M;
    return ProductClass::equals_W;
  }
  // W paired with M or N: the table only covers the degree -1 component.
  if (i != -1) throw std::invalid_argument("expected_product: no table entry for this pairing");
  if (fb == Family::N) return ProductClass::equals_W;
  return j == 0 ? ProductClass::equals_W : ProductClass::equals_M;
}

/// Classifies the bracket spans of all family pairs with degrees
/// -1 <= i <= j and i+j <= max_degree against the expected table.
inline std::vector<ProductReport> verify_products(int n, int max_degree) {
  if (n < 2) throw std::invalid_argument("verify_products: need n >= 2");
  if (max_degree < 1) throw std::invalid_argument("verify_products: need max_degree >= 1");
  std::vector<ProductReport> out;
  auto run_case = [&](Family fa, int i, Family fb, int j) {
    const GradedBasis& ba = graded_basis(n, i);
    const GradedBasis& bb = graded_basis(n, j);
    Subspace span = bracket_span(ba, family_subspace(ba, fa), bb, family_subspace(bb, fb));
    ProductReport rep;
    rep.n = n;
    rep.left_family = fa;
    rep.left_degree = i;
    rep.right_family = fb;
    rep.right_degree = j;
    rep.result_dim = span.dim();
    rep.classification = classify_subspace(n, i + j, span);
    rep.expected = expected_product(fa, i, fb, j);
    rep.matches = rep.classification == rep.expected;
    out.push_back(std::move(rep));
  };
  for (int i = -1; i <= max_degree; ++i) {
    for (int j = i; i + j <= max_degree; ++j) {
      run_case(Family::W, i, Family::W, j);
      if (i >= 0) {
        run_case(Family::M, i, Family::M, j);
        run_case(Family::N, i, Family::N, j);
        run_case(Family::M, i, Family::N, j);
        if (i != j) run_case(Family::M, j, Family::N, i);
      } else if (j >= 0) {
        run_case(Family::W, -1, Family::M, j);
        run_case(Family::W, -1, Family::N, j);
      }
    }
  }
  return out;
}

}  // namespace wnlie

#endif  // WNLIE_STRUCTURE_HPP
