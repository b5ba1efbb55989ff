#include "conelab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace conelab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  mpq_init(v_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(v_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  Rational r;
  if (mpq_set_str(r.v_, s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (mpz_sgn(mpq_denref(r.v_)) == 0)
    throw std::domain_error("rational with zero denominator: " + s);
  mpq_canonicalize(r.v_);
  return r;
}

Rational Rational::pow(long exp) const {
  if (exp == 0) return Rational(1);
  Rational base = *this;
  if (exp < 0) {
    if (base.is_zero()) throw std::domain_error("0 raised to negative power");
    base = Rational(1) / base;
    exp = -exp;
  }
  Rational acc(1);
  while (exp > 0) {
    if (exp & 1) acc *= base;
    base *= base;
    exp >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  char* raw = mpq_get_str(nullptr, 10, v_);
  std::string out(raw);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace conelab
