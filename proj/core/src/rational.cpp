#include "wedgemass/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace wedgemass {

Rational::Rational(long numerator, long denominator) : q_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (sgn(q_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    throw std::domain_error("Rational::from_double: non-finite value");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return Rational(std::move(q));
}

Rational Rational::from_string(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("Rational::from_string: malformed rational '" +
                                 std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  mpq_class q;
  if (q.set_str(std::string(text), 10) != 0) throw bad();
  if (sgn(q.get_den()) == 0) throw bad();
  q.canonicalize();
  Rational r;
  r.q_ = std::move(q);
  return r;
}

double Rational::to_double() const {
  const double truncated = q_.get_d();
  if (!std::isfinite(truncated)) return truncated;
  const mpq_class residual = q_ - mpq_class(truncated);
  return truncated + residual.get_d();
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace wedgemass
