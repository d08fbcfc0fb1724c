#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "wnlie/expr.hpp"
#include "wnlie/random.hpp"
#include "wnlie/reptheory.hpp"

using namespace wnlie;

namespace {
Matrix scaled_identity(int k, const Rational& c) {
  Matrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = c;
  return m;
}

Vec coords_of(const std::string& s, int n, int m) {
  return graded_basis(n, m).to_coords(HomogeneousDerivation(parse_derivation(s, n), m));
}

WeightVector euler_line_weight(int n, int m) {
  WeightVector w;
  for (int a = 1; a < n; ++a) w.cartan.push_back(a == 1 ? m : 0);
  w.euler_scalar = m;
  return w;
}

WeightVector divergence_free_weight(int n, int m) {
  WeightVector w;
  for (int a = 1; a < n; ++a) w.cartan.push_back(1 + (a == 1 ? m + 1 : 0));
  w.euler_scalar = m;
  return w;
}
}  // namespace

TEST_CASE("euler field acts as the degree scalar", "[reptheory]") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      ActionOperator op = action_matrix(euler(n), n, m);
      CHECK(op.matrix == scaled_identity(graded_basis(n, m).dim(), Rational(m)));
    }
}

TEST_CASE("adjoint action is a lie algebra homomorphism", "[reptheory]") {
  Rng rng(271828);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + trial % 2;
    int m = 1 + trial % 3;
    Derivation g = rng.homogeneous_derivation(n, 0).derivation();
    Derivation h = rng.homogeneous_derivation(n, 0).derivation();
    Matrix ag = action_matrix(g, n, m).matrix;
    Matrix ah = action_matrix(h, n, m).matrix;
    Matrix expect = ag * ah - ah * ag;
    CHECK(action_matrix(bracket(g, h), n, m).matrix == expect);
  }
}

TEST_CASE("action matrices require a degree zero generator", "[reptheory]") {
  CHECK_THROWS_AS(action_matrix(parse_derivation("x1^2 d1", 2), 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(action_matrix(parse_derivation("d1", 2), 2, 1), std::invalid_argument);
  CHECK(action_matrix(Derivation::zero(2), 2, 1).matrix.is_zero());
}

TEST_CASE("each component carries exactly two maximal lines", "[reptheory]") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      const GradedBasis& basis = graded_basis(n, m);
      Subspace full_mv = maximal_vectors(basis);
      Subspace m_mv = maximal_vectors(basis, divergence_free_subspace(basis));
      Subspace n_mv = maximal_vectors(basis, euler_multiples_subspace(basis));
      CHECK(full_mv.dim() == 2);
      CHECK(m_mv.dim() == 1);
      CHECK(n_mv.dim() == 1);

      std::string x1m = m == 0 ? "" : m == 1 ? "x1*" : "x1^" + std::to_string(m) + "*";
      Vec euler_vec = coords_of(x1m.empty() ? "E" : x1m + "E", n, m);
      Vec free_vec = coords_of("x1^" + std::to_string(m + 1) + " d" + std::to_string(n), n, m);
      CHECK(n_mv == Subspace::span(basis.dim(), {euler_vec}));
      CHECK(m_mv == Subspace::span(basis.dim(), {free_vec}));
      CHECK(full_mv == Subspace::span(basis.dim(), {euler_vec, free_vec}));

      CHECK(weight_of(basis, euler_vec) == euler_line_weight(n, m));
      CHECK(weight_of(basis, free_vec) == divergence_free_weight(n, m));
      for (const Vec& v : full_mv.basis())
        CHECK(highest_vector_support_ok(basis.from_coords(v)));
    }
  }
}

TEST_CASE("weights reject non-eigenvectors and the zero vector", "[reptheory]") {
  const GradedBasis& basis = graded_basis(2, 1);
  CHECK_THROWS_AS(weight_of(basis, coords_of("x1^2 d1 + x2^2 d2", 2, 1)), std::runtime_error);
  CHECK_THROWS_AS(weight_of(basis, Vec(static_cast<size_t>(basis.dim()))), std::invalid_argument);
}

TEST_CASE("named submodules are invariant, generic lines are not", "[reptheory]") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const GradedBasis& basis = graded_basis(n, m);
      CHECK(is_invariant(basis, divergence_free_subspace(basis)));
      CHECK(is_invariant(basis, euler_multiples_subspace(basis)));
      CHECK(is_invariant(basis, Subspace::full(basis.dim())));
    }
  const GradedBasis& b21 = graded_basis(2, 1);
  CHECK_FALSE(is_invariant(b21, Subspace::span(b21.dim(), {coords_of("x2^2 d1", 2, 1)})));
}

TEST_CASE("any single element generates its submodule", "[reptheory]") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const GradedBasis& basis = graded_basis(n, m);
      Subspace M = divergence_free_subspace(basis);
      Subspace N = euler_multiples_subspace(basis);
      for (const Vec& row : M.basis()) CHECK(submodule_closure(basis, {row}) == M);
      for (const Vec& row : N.basis()) CHECK(submodule_closure(basis, {row}) == N);
    }
}

TEST_CASE("closure of a mixed element is the full component", "[reptheory]") {
  const GradedBasis& basis = graded_basis(2, 1);
  Subspace s = submodule_closure(basis, {coords_of("x1^2 d1", 2, 1)});
  CHECK(s.is_full());
}

TEST_CASE("irreducibility certificates", "[reptheory]") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m) {
      const GradedBasis& basis = graded_basis(n, m);
      IrreducibilityCertificate cm = certify_irreducible(basis, divergence_free_subspace(basis));
      CHECK(cm.verdict == IrreducibilityVerdict::irreducible);
      CHECK(cm.hw_dimension == 1);
      CHECK(cm.dim == dim_divergence_free(n, m));
      IrreducibilityCertificate cn = certify_irreducible(basis, euler_multiples_subspace(basis));
      CHECK(cn.verdict == IrreducibilityVerdict::irreducible);
      CHECK(cn.hw_weights.front() == euler_line_weight(n, m));
      IrreducibilityCertificate cw = certify_irreducible(basis, Subspace::full(basis.dim()));
      CHECK(cw.verdict == IrreducibilityVerdict::inconclusive);
      CHECK(cw.hw_dimension == 2);
    }
  const GradedBasis& b21 = graded_basis(2, 1);
  CHECK_THROWS_AS(
      certify_irreducible(b21, Subspace::span(b21.dim(), {coords_of("x2^2 d1", 2, 1)})),
      std::invalid_argument);
}

TEST_CASE("isomorphism classes across the two families", "[reptheory]") {
  for (int i = 0; i <= 3; ++i) {
    IsoReport two = classify_isomorphism(
        2, {ModuleKind::divergence_free, i}, {ModuleKind::euler_multiples, i + 2});
    CHECK(two.verdict == IsoClass::iso_sl_only);
    CHECK(two.dim_a == i + 3);
    CHECK(two.dim_b == i + 3);
    CHECK(two.weight_a.cartan == two.weight_b.cartan);
    CHECK(two.weight_a.euler_scalar == i);
    CHECK(two.weight_b.euler_scalar == i + 2);

    IsoReport three = classify_isomorphism(
        3, {ModuleKind::divergence_free, i}, {ModuleKind::euler_multiples, i + 2});
    CHECK(three.verdict == IsoClass::non_iso);
  }
}

TEST_CASE("only matching weights are isomorphic", "[reptheory]") {
  for (int n = 2; n <= 3; ++n) {
    CHECK(classify_isomorphism(n, {ModuleKind::euler_multiples, 1},
                               {ModuleKind::euler_multiples, 2})
              .verdict == IsoClass::non_iso);
    CHECK(classify_isomorphism(n, {ModuleKind::divergence_free, 1},
                               {ModuleKind::divergence_free, 3})
              .verdict == IsoClass::non_iso);
    CHECK(classify_isomorphism(n, {ModuleKind::divergence_free, 2},
                               {ModuleKind::divergence_free, 2})
              .verdict == IsoClass::iso_sl_and_gl);
    CHECK(classify_isomorphism(n, {ModuleKind::divergence_free, 1},
                               {ModuleKind::euler_multiples, 1})
              .verdict == IsoClass::non_iso);
  }
  CHECK_THROWS_AS(
      classify_isomorphism(2, {ModuleKind::divergence_free, -1}, {ModuleKind::euler_multiples, 1}),
      std::invalid_argument);
}

TEST_CASE("module names", "[reptheory]") {
  CHECK(module_name({ModuleKind::divergence_free, 1}) == "M[1]");
  CHECK(module_name({ModuleKind::euler_multiples, 3}) == "N[3]");
  CHECK(iso_class_name(IsoClass::iso_sl_only) == std::string("iso_sl_only"));
}
