#ifndef WNLIE_RATIONAL_HPP
#define WNLIE_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wnlie {

/// Exact rational number. Always stored in lowest terms, denominator > 0,
/// and zero is 0/1, so structural equality is mathematical equality.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long value) : v_(value) {}         // NOLINT: implicit on purpose
  Rational(int value) : v_(value) {}          // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p" or "p/q" with an optional leading sign.
  static Rational from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v.canonicalize();
    return Rational(Raw{}, std::move(v));
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Truncates toward zero; only meaningful for integral values in practice.
  long to_long() const { return static_cast<long>(v_.get_num().get_si()); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  /// In-place fused update r -= a*b, the inner step of row reduction.
  void submul(const Rational& a, const Rational& b) {
    static thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
  }
  void addmul(const Rational& a, const Rational& b) {
    static thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.v_.get_mpq_t(), b.v_.get_mpq_t());
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), tmp.get_mpq_t());
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(Raw{}, mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(Raw{}, mpq_class(1) / v_);
  }
  Rational abs() const { return Rational(Raw{}, mpq_class(::abs(v_))); }

  /// Compares |numerator| only; used for pivot selection in row reduction.
  friend int cmp_abs_numerator(const Rational& a, const Rational& b) {
    return mpz_cmpabs(mpq_numref(a.v_.get_mpq_t()), mpq_numref(b.v_.get_mpq_t()));
  }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct Raw {};
  Rational(Raw, mpq_class v) : v_(std::move(v)) {}  // already canonical
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace wnlie

#endif  // WNLIE_RATIONAL_HPP
