#include "wedgemass/poly3.hpp"

#include <sstream>
#include <stdexcept>

namespace wedgemass {
namespace {

double ipow(double base, int exp) {
  double acc = 1.0;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

Rational rpow(const Rational& base, int exp) {
  Rational acc = 1;
  for (int i = 0; i < exp; ++i) acc *= base;
  return acc;
}

}  // namespace

Poly3 Poly3::constant(Rational value) { return term(Monomial{0, 0, 0}, std::move(value)); }

Poly3 Poly3::variable(Var v) {
  Monomial m;
  switch (v) {
    case Var::Xi: m.a = 1; break;
    case Var::Eta: m.b = 1; break;
    case Var::Zeta: m.c = 1; break;
  }
  return term(m, 1);
}

Poly3 Poly3::term(const Monomial& m, Rational coeff) {
  if (m.a < 0 || m.b < 0 || m.c < 0)
    throw std::invalid_argument("Poly3::term: negative exponent");
  Poly3 p;
  if (!coeff.is_zero()) p.terms_.emplace(m, std::move(coeff));
  return p;
}

int Poly3::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.total_degree();  // graded order: last term is maximal
}

Rational Poly3::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly3 Poly3::operator-() const {
  Poly3 out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly3& Poly3::operator+=(const Poly3& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    const auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    const auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly3& Poly3::operator*=(const Poly3& rhs) {
  TermMap product;
  for (const auto& [ml, cl] : terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      const Monomial m{ml.a + mr.a, ml.b + mr.b, ml.c + mr.c};
      const auto [it, inserted] = product.try_emplace(m, cl * cr);
      if (!inserted) {
        it->second += cl * cr;
        if (it->second.is_zero()) product.erase(it);
      }
    }
  }
  terms_ = std::move(product);
  return *this;
}

Poly3& Poly3::operator*=(const Rational& scale) {
  if (scale.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scale;
  return *this;
}

Poly3 Poly3::diff(Var v) const {
  Poly3 out;
  for (const auto& [m, c] : terms_) {
    Monomial d = m;
    int exp = 0;
    switch (v) {
      case Var::Xi: exp = m.a; d.a = m.a - 1; break;
      case Var::Eta: exp = m.b; d.b = m.b - 1; break;
      case Var::Zeta: exp = m.c; d.c = m.c - 1; break;
    }
    if (exp == 0) continue;
    out.terms_.emplace(d, c * Rational(exp));
  }
  return out;
}

Rational Poly3::eval(const Rational& xi, const Rational& eta, const Rational& zeta) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_)
    acc += c * rpow(xi, m.a) * rpow(eta, m.b) * rpow(zeta, m.c);
  return acc;
}

double Poly3::eval(double xi, double eta, double zeta) const {
  double acc = 0.0;
  for (const auto& [m, c] : terms_)
    acc += c.to_double() * ipow(xi, m.a) * ipow(eta, m.b) * ipow(zeta, m.c);
  return acc;
}

std::string Poly3::dump() const {
  std::ostringstream os;
  for (const auto& [m, c] : terms_)
    os << c.str() << " xi^" << m.a << " eta^" << m.b << " zeta^" << m.c << "\n";
  return os.str();
}

Rational monomial_integral(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("monomial_integral: negative exponent");
  // triangle part: a! b! / (a+b+2)!
  mpz_class num, den;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(a));
  mpz_class bfac;
  mpz_fac_ui(bfac.get_mpz_t(), static_cast<unsigned long>(b));
  num *= bfac;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(a) + b + 2);
  Rational tri{mpq_class(num, den)};
  // zeta part over [-1, 1]: 0 for odd powers, 2/(c+1) for even
  if (c % 2 == 1) return 0;
  return tri * Rational(2, c + 1);
}

Rational wedge_integral(const Poly3& p) {
  Rational acc = 0;
  for (const auto& [m, c] : p.terms()) acc += c * monomial_integral(m.a, m.b, m.c);
  return acc;
}

Rational wedge_integral_product(const Poly3& p, const Poly3& q) {
  Rational acc = 0;
  for (const auto& [mp, cp] : p.terms()) {
    Rational inner = 0;
    for (const auto& [mq, cq] : q.terms())
      inner += cq * monomial_integral(mp.a + mq.a, mp.b + mq.b, mp.c + mq.c);
    acc += cp * inner;
  }
  return acc;
}

}  // namespace wedgemass
