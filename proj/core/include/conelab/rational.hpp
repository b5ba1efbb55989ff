#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace conelab {

// Arbitrary-precision rational with value semantics. Thin wrapper over
// GMP's mpq_t; always kept in canonical form.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(int n) : Rational(static_cast<long>(n)) {}
  Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  ~Rational() { mpq_clear(v_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }

  // Parses "p", "-p", or "p/q".
  static Rational from_string(const std::string& s);

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }
  // Integer power, exp may be negative (requires nonzero base).
  Rational pow(long exp) const;

  double to_double() const { return mpq_get_d(v_); }
  std::string str() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  mpq_t v_;
};

}  // namespace conelab
