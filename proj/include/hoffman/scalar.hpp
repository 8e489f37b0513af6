#ifndef HOFFMAN_SCALAR_HPP
#define HOFFMAN_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hoffman {

/// Exact rational number backed by GMP.
///
/// Always held in lowest terms with a positive denominator; zero is 0/1.
/// Division by zero throws std::domain_error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);
  explicit Scalar(const mpq_class& q);

  /// Parses "3", "-2/7" or a finite decimal such as "0.25" (exactly 1/4).
  /// Throws std::invalid_argument on anything else.
  static Scalar parse(std::string_view text);

  /// Fraction form: "3", "-2/7".
  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  const mpq_class& raw() const { return q_; }

  Scalar operator-() const { return Scalar(mpq_class(-q_)); }
  Scalar& operator+=(const Scalar& o) { q_ += o.q_; return *this; }
  Scalar& operator-=(const Scalar& o) { q_ -= o.q_; return *this; }
  Scalar& operator*=(const Scalar& o) { q_ *= o.q_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_{0};
};

Scalar abs(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hoffman

#endif  // HOFFMAN_SCALAR_HPP
