#ifndef WEDGEMASS_POLY3_HPP_
#define WEDGEMASS_POLY3_HPP_

#include <array>
#include <compare>
#include <map>
#include <string>

#include "wedgemass/rational.hpp"

namespace wedgemass {

/// Natural coordinates of the reference wedge.
enum class Var { Xi = 0, Eta = 1, Zeta = 2 };

/// xi^a eta^b zeta^c with non-negative exponents.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int total_degree() const { return a + b + c; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then (a, b, c).
/// This is the canonical term order used for storage and debug dumps.
struct GradedLexLess {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    const int dl = lhs.total_degree(), dr = rhs.total_degree();
    if (dl != dr) return dl < dr;
    if (lhs.a != rhs.a) return lhs.a < rhs.a;
    if (lhs.b != rhs.b) return lhs.b < rhs.b;
    return lhs.c < rhs.c;
  }
};

/// Sparse trivariate polynomial in (xi, eta, zeta) with exact rational
/// coefficients. Always canonical: no stored zero coefficients, terms kept
/// in graded-lex order, so operator== is structural equality.
class Poly3 {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Poly3() = default;

  static Poly3 zero() { return Poly3(); }
  static Poly3 constant(Rational value);
  static Poly3 one() { return constant(1); }
  static Poly3 variable(Var v);
  static Poly3 term(const Monomial& m, Rational coeff);

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Monomial& m) const;

  const TermMap& terms() const { return terms_; }

  Poly3 operator-() const;
  Poly3& operator+=(const Poly3& rhs);
  Poly3& operator-=(const Poly3& rhs);
  Poly3& operator*=(const Poly3& rhs);
  Poly3& operator*=(const Rational& scale);

  friend Poly3 operator+(Poly3 lhs, const Poly3& rhs) { return lhs += rhs; }
  friend Poly3 operator-(Poly3 lhs, const Poly3& rhs) { return lhs -= rhs; }
  friend Poly3 operator*(Poly3 lhs, const Poly3& rhs) { return lhs *= rhs; }
  friend Poly3 operator*(Poly3 lhs, const Rational& scale) { return lhs *= scale; }
  friend Poly3 operator*(const Rational& scale, Poly3 rhs) { return rhs *= scale; }

  friend bool operator==(const Poly3& lhs, const Poly3& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// Exact partial derivative with respect to one natural coordinate.
  Poly3 diff(Var v) const;

  Rational eval(const Rational& xi, const Rational& eta, const Rational& zeta) const;
  double eval(double xi, double eta, double zeta) const;

  /// One term per line, graded-lex order: "<coeff> xi^a eta^b zeta^c".
  std::string dump() const;

 private:
  TermMap terms_;
};

/// Exact integral of xi^a eta^b zeta^c over the reference wedge
/// {xi >= 0, eta >= 0, xi + eta <= 1} x {-1 <= zeta <= 1}:
///   a! b! / (a+b+2)!  *  (1 + (-1)^c) / (c + 1).
Rational monomial_integral(int a, int b, int c);

/// Term-by-term exact integral of p over the reference wedge.
Rational wedge_integral(const Poly3& p);

/// Exact integral of p * q over the reference wedge without forming the
/// product polynomial.
Rational wedge_integral_product(const Poly3& p, const Poly3& q);

}  // namespace wedgemass

#endif  // WEDGEMASS_POLY3_HPP_
