#ifndef WNLIE_RANDOM_HPP
#define WNLIE_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "wnlie/derivation.hpp"

namespace wnlie {

/// Seeded generator for test data. Values are drawn by reducing the raw
/// 64-bit stream, so a fixed seed yields the same stream on every platform.
class Rng {
public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t raw() { return eng_(); }

  long long below(long long bound) {
    return static_cast<long long>(raw() % static_cast<uint64_t>(bound));
  }

  long long range(long long lo, long long hi) { return lo + below(hi - lo + 1); }

  /// Nonzero rational with numerator in [-bound, bound] and denominator in
  /// [1, den_bound].
  Rational rational(long long bound = 9, long long den_bound = 4) {
    long long num = range(1, bound);
    if (below(2) == 0) num = -num;
    return Rational(num, range(1, den_bound));
  }

  Monomial monomial(int n, int degree) {
    std::vector<int> exps(static_cast<size_t>(n), 0);
    for (int k = 0; k < degree; ++k) ++exps[static_cast<size_t>(below(n))];
    return Monomial::from_exponents(std::move(exps));
  }

  /// Homogeneous polynomial of the given degree with up to `terms` monomials
  /// (possibly fewer after coefficient collisions cancel nothing; zero only
  /// if terms = 0).
  Polynomial polynomial(int n, int degree, int terms) {
    Polynomial p = Polynomial::zero(n);
    for (int k = 0; k < terms; ++k) p.add_term(monomial(n, degree), rational());
    return p;
  }

  HomogeneousDerivation homogeneous_derivation(int n, int m, int terms = 4) {
    Derivation d = Derivation::zero(n);
    for (int k = 0; k < terms; ++k)
      d += Derivation::term(monomial(n, m + 1), static_cast<int>(range(1, n)), rational());
    return HomogeneousDerivation(std::move(d), m);
  }

  Derivation derivation(int n, int max_degree, int terms = 6) {
    Derivation d = Derivation::zero(n);
    for (int k = 0; k < terms; ++k) {
      int deg = static_cast<int>(range(-1, max_degree));
      d += Derivation::term(monomial(n, deg + 1), static_cast<int>(range(1, n)), rational());
    }
    return d;
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace wnlie

#endif  // WNLIE_RANDOM_HPP
