#pragma once

#include <cmath>
#include <type_traits>

#include "conelab/rational.hpp"

namespace conelab {

// Shared surface of the two scalar backends: exact rationals for
// certificates, doubles for sampling.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_int(long k) { return static_cast<double>(k); }
  static double from_ratio(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double to_double(double x) { return x; }
  static bool is_zero(double x) { return x == 0.0; }
  static int sign(double x) { return (x > 0.0) - (x < 0.0); }
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_int(long k) { return Rational(k); }
  static Rational from_ratio(long num, long den) { return Rational(num, den); }
  static double to_double(const Rational& x) { return x.to_double(); }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static int sign(const Rational& x) { return x.sign(); }
  static Rational abs(const Rational& x) { return x.abs(); }
};

template <class S>
S scalar_from_int(long k) {
  return scalar_traits<S>::from_int(k);
}

template <class S>
S scalar_from_ratio(long num, long den) {
  return scalar_traits<S>::from_ratio(num, den);
}

}  // namespace conelab
