#ifndef WNLIE_REPTHEORY_HPP
#define WNLIE_REPTHEORY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wnlie/graded.hpp"

namespace wnlie {

/// Adjoint action of a degree-0 derivation on the degree-m component, as a
/// matrix in the canonical basis (column k is the image of basis element k).
struct ActionOperator {
  Derivation generator;
  Matrix matrix;
};

inline ActionOperator action_matrix(const Derivation& g, int n, int m) {
  if (g.nvars() != n) throw std::invalid_argument("action_matrix: variable count mismatch");
  auto parts = graded_split(g);
  if (!parts.empty() && (parts.size() != 1 || parts.begin()->first != 0))
    throw std::invalid_argument("action_matrix: generator must be homogeneous of degree 0");
  const GradedBasis& b0 = graded_basis(n, 0);
  const GradedBasis& bm = graded_basis(n, m);
  Vec gc = parts.empty() ? Vec(static_cast<size_t>(b0.dim()))
                         : b0.to_coords(parts.begin()->second);
  Matrix mat(bm.dim(), bm.dim());
  for (int col = 0; col < bm.dim(); ++col) {
    Vec e(static_cast<size_t>(bm.dim()));
    e[static_cast<size_t>(col)] = 1;
    Vec img = bracket_coords(b0, gc, bm, e);
    for (int r = 0; r < bm.dim(); ++r) mat.at(r, col) = img[static_cast<size_t>(r)];
  }
  return ActionOperator{g, std::move(mat)};
}

/// Shape every maximal vector of a degree-m component has: the d_1
/// coefficient is a scalar multiple of x_1^(m+1), and for i >= 2 the d_i
/// coefficient involves only the variables x_1 and x_i.
inline bool highest_vector_support_ok(const HomogeneousDerivation& hd) {
  int n = hd.nvars();
  int m = hd.degree();
  for (const auto& [mono, c] : hd.derivation().coefficient(1).terms()) {
    (void)c;
    if (mono.exponent(1) != m + 1) return false;
  }
  for (int i = 2; i <= n; ++i)
    for (const auto& [mono, c] : hd.derivation().coefficient(i).terms()) {
      (void)c;
      for (int v = 2; v <= n; ++v)
        if (v != i && mono.exponent(v) != 0) return false;
    }
  return true;
}

/// Vectors of the given subspace annihilated by every raising operator
/// x_a d_b with a < b. Computed by iterated restriction: for each raising
/// operator, keep the kernel of its action on the current candidate space.
/// Every result is checked against the coefficient-support shape above.
inline Subspace maximal_vectors(const GradedBasis& basis, const Subspace& sub) {
  if (sub.ambient_dim() != basis.dim())
    throw std::invalid_argument("maximal_vectors: subspace does not match basis");
  int n = basis.nvars();
  std::vector<Vec> cur(sub.basis().begin(), sub.basis().end());
  for (int a = 1; a <= n && !cur.empty(); ++a) {
    for (int b = a + 1; b <= n && !cur.empty(); ++b) {
      Matrix img(basis.dim(), static_cast<int>(cur.size()));
      for (size_t k = 0; k < cur.size(); ++k) {
        Vec w = apply_generator(basis, a, b, cur[k]);
        for (int r = 0; r < basis.dim(); ++r) img.at(r, static_cast<int>(k)) = w[static_cast<size_t>(r)];
      }
      Subspace ker = nullspace(img);
      std::vector<Vec> next;
      next.reserve(static_cast<size_t>(ker.dim()));
      for (const Vec& c : ker.basis()) {
        Vec combo(static_cast<size_t>(basis.dim()));
        for (size_t k = 0; k < cur.size(); ++k) {
          if (c[k].is_zero()) continue;
          for (int r = 0; r < basis.dim(); ++r)
            combo[static_cast<size_t>(r)].addmul(c[k], cur[k][static_cast<size_t>(r)]);
        }
        next.push_back(std::move(combo));
      }
      cur = std::move(next);
    }
  }
  Subspace out(basis.dim());
  for (auto& v : cur) out.insert(std::move(v));
  for (const Vec& v : out.basis())
    if (!highest_vector_support_ok(basis.from_coords(v)))
      throw std::logic_error("maximal_vectors: result violates the expected coefficient support");
  return out;
}

inline Subspace maximal_vectors(const GradedBasis& basis) {
  return maximal_vectors(basis, Subspace::full(basis.dim()));
}

/// Eigenvalue data of a joint eigenvector: values of the Cartan elements
/// h_a = x_a d_a - x_n d_n for a = 1..n-1, plus the scalar by which the
/// Euler field acts.
struct WeightVector {
  std::vector<long long> cartan;
  long long euler_scalar = 0;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.cartan == b.cartan && a.euler_scalar == b.euler_scalar;
  }
};

namespace detail {
inline long long eigenvalue_on(const GradedBasis& basis, const Vec& v, const Vec& image,
                               int lead, const std::string& opname) {
  Rational lambda = image[static_cast<size_t>(lead)] / v[static_cast<size_t>(lead)];
  for (int j = 0; j < basis.dim(); ++j)
    if (image[static_cast<size_t>(j)] != lambda * v[static_cast<size_t>(j)])
      throw std::runtime_error("weight_of: not an eigenvector of " + opname);
  if (!lambda.is_integer()) throw std::runtime_error("weight_of: non-integer eigenvalue of " + opname);
  return lambda.to_long();
}
}  // namespace detail

inline WeightVector weight_of(const GradedBasis& basis, const Vec& v) {
  int n = basis.nvars();
  int lead = -1;
  for (int j = 0; j < basis.dim(); ++j)
    if (!v[static_cast<size_t>(j)].is_zero()) { lead = j; break; }
  if (lead < 0) throw std::invalid_argument("weight_of: zero vector");
  WeightVector w;
  w.cartan.reserve(static_cast<size_t>(n - 1));
  Vec en = apply_generator(basis, n, n, v);
  for (int a = 1; a < n; ++a) {
    Vec ha = apply_generator(basis, a, a, v);
    for (int j = 0; j < basis.dim(); ++j) ha[static_cast<size_t>(j)] -= en[static_cast<size_t>(j)];
    w.cartan.push_back(detail::eigenvalue_on(basis, v, ha, lead, "h_" + std::to_string(a)));
  }
  Vec ev(static_cast<size_t>(basis.dim()));
  for (int a = 1; a <= n; ++a) {
    Vec t = apply_generator(basis, a, a, v);
    for (int j = 0; j < basis.dim(); ++j) ev[static_cast<size_t>(j)] += t[static_cast<size_t>(j)];
  }
  w.euler_scalar = detail::eigenvalue_on(basis, v, ev, lead, "the Euler field");
  return w;
}

/// Smallest subspace containing the seeds and closed under all n^2 degree-0
/// generators x_a d_b.
inline Subspace submodule_closure(const GradedBasis& basis, const std::vector<Vec>& seeds) {
  int n = basis.nvars();
  Subspace span(basis.dim());
  std::vector<Vec> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    if (span.contains(v)) continue;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) queue.push_back(apply_generator(basis, a, b, v));
    span.insert(std::move(v));
    if (span.is_full()) break;
  }
  return span;
}

inline bool is_invariant(const GradedBasis& basis, const Subspace& sub) {
  int n = basis.nvars();
  for (const Vec& r : sub.basis())
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b)
        if (!sub.contains(apply_generator(basis, a, b, r))) return false;
  return true;
}

/// Certificate based on the unique-maximal-vector sufficient condition: a
/// nonzero invariant subspace with a one-dimensional space of maximal
/// vectors is irreducible. Two or more independent maximal vectors leave
/// the verdict inconclusive.
enum class IrreducibilityVerdict { irreducible, inconclusive };

struct IrreducibilityCertificate {
  int dim = 0;
  int hw_dimension = 0;
  std::vector<Vec> hw_vectors;
  std::vector<WeightVector> hw_weights;
  IrreducibilityVerdict verdict = IrreducibilityVerdict::inconclusive;
};

inline IrreducibilityCertificate certify_irreducible(const GradedBasis& basis, const Subspace& sub) {
  if (!is_invariant(basis, sub))
    throw std::invalid_argument("certify_irreducible: subspace is not invariant");
  IrreducibilityCertificate cert;
  cert.dim = sub.dim();
  Subspace mv = maximal_vectors(basis, sub);
  cert.hw_dimension = mv.dim();
  for (const Vec& v : mv.basis()) {
    cert.hw_weights.push_back(weight_of(basis, v));
    cert.hw_vectors.push_back(v);
  }
  if (cert.hw_dimension == 1) cert.verdict = IrreducibilityVerdict::irreducible;
  return cert;
}

enum class ModuleKind { divergence_free, euler_multiples };

struct ModuleRef {
  ModuleKind kind;
  int degree;
};

inline std::string module_name(const ModuleRef& m) {
  const char* k = m.kind == ModuleKind::divergence_free ? "M" : "N";
  return std::string(k) + "[" + std::to_string(m.degree) + "]";
}

inline Subspace module_subspace(const GradedBasis& basis, ModuleKind kind) {
  return kind == ModuleKind::divergence_free ? divergence_free_subspace(basis)
                                             : euler_multiples_subspace(basis);
}

/// Verdict for comparing two graded pieces as modules over the degree-0
/// algebra: cartan weights decide the traceless part, the Euler scalar
/// separates the full algebra. iso_sl_only means the cartan weights agree
/// but the Euler scalars (the degrees) differ.
enum class IsoClass { non_iso, iso_sl_only, iso_sl_and_gl };

inline const char* iso_class_name(IsoClass c) {
  switch (c) {
    case IsoClass::non_iso: return "non_iso";
    case IsoClass::iso_sl_only: return "iso_sl_only";
    default: return "iso_sl_and_gl";
  }
}

struct IsoReport {
  ModuleRef a, b;
  long long dim_a = 0, dim_b = 0;
  WeightVector weight_a, weight_b;
  IsoClass verdict = IsoClass::non_iso;
};

inline IsoReport classify_isomorphism(int n, ModuleRef a, ModuleRef b) {
  if (a.degree < 0 || b.degree < 0)
    throw std::invalid_argument("classify_isomorphism: degrees must be >= 0");
  IsoReport rep;
  rep.a = a;
  rep.b = b;
  const GradedBasis& ba = graded_basis(n, a.degree);
  const GradedBasis& bb = graded_basis(n, b.degree);
  Subspace sa = module_subspace(ba, a.kind);
  Subspace sb = module_subspace(bb, b.kind);
  rep.dim_a = sa.dim();
  rep.dim_b = sb.dim();
  Subspace mva = maximal_vectors(ba, sa);
  Subspace mvb = maximal_vectors(bb, sb);
  if (mva.dim() != 1 || mvb.dim() != 1)
    throw std::runtime_error("classify_isomorphism: module is not irreducible");
  rep.weight_a = weight_of(ba, mva.basis().front());
  rep.weight_b = weight_of(bb, mvb.basis().front());
  if (rep.weight_a.cartan == rep.weight_b.cartan)
    rep.verdict = rep.weight_a.euler_scalar == rep.weight_b.euler_scalar ? IsoClass::iso_sl_and_gl
                                                                         : IsoClass::iso_sl_only;
  return rep;
}

}  // namespace wnlie

#endif  // WNLIE_REPTHEORY_HPP
