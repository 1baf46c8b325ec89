#ifndef WEDGEMASS_RATIONAL_HPP_
#define WEDGEMASS_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace wedgemass {

/// Exact rational number with arbitrary-precision integer parts.
///
/// Invariants: always in lowest terms, denominator > 0, zero stored as 0/1.
/// Arithmetic never rounds; conversion to double happens only where a caller
/// explicitly asks for it.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class q);

  /// Exact promotion of the binary floating-point value (not a decimal
  /// re-parse); rejects NaN and infinities.
  static Rational from_double(double value);

  /// Parses "n" or "n/d" in base 10. Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rational from_string(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  /// Correctly-rounded conversion (mpq_get_d alone truncates; adding the
  /// exactly-computed residual lets the IEEE add round to nearest).
  double to_double() const;
  /// "n" when the denominator is 1, otherwise "n/d".
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& rhs) { q_ += rhs.q_; return *this; }
  Rational& operator-=(const Rational& rhs) { q_ -= rhs.q_; return *this; }
  Rational& operator*=(const Rational& rhs) { q_ *= rhs.q_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return mpq_equal(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = mpq_cmp(lhs.q_.get_mpq_t(), rhs.q_.get_mpq_t());
    return c <=> 0;
  }

 private:
  mpq_class q_;  // kept canonical
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace wedgemass

#endif  // WEDGEMASS_RATIONAL_HPP_
