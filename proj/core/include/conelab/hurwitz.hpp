#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conelab/algebra.hpp"
#include "conelab/scalar.hpp"

namespace conelab {

// Product of basis units f_{i+1} f_{j+1} = sign * f_{index+1}.
struct BasisProduct {
  std::int8_t sign;
  std::int8_t index;
};

namespace detail {

// Cayley-Dickson doubling R -> C -> H -> O with
// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
constexpr BasisProduct cd_mul(int level, int i, int j) {
  if (level == 0) return {1, 0};
  const int half = 1 << (level - 1);
  const bool ihi = i >= half, jhi = j >= half;
  const int il = ihi ? i - half : i;
  const int jl = jhi ? j - half : j;
  if (!ihi && !jhi) return cd_mul(level - 1, il, jl);
  if (!ihi && jhi) {
    // (a,0)(0,d) = (0, d a)
    const BasisProduct r = cd_mul(level - 1, jl, il);
    return {r.sign, static_cast<std::int8_t>(r.index + half)};
  }
  if (ihi && !jhi) {
    // (0,b)(c,0) = (0, b conj(c))
    const BasisProduct r = cd_mul(level - 1, il, jl);
    const int s = (jl == 0) ? 1 : -1;
    return {static_cast<std::int8_t>(s * r.sign), static_cast<std::int8_t>(r.index + half)};
  }
  // (0,b)(0,d) = (-conj(d) b, 0)
  const BasisProduct r = cd_mul(level - 1, jl, il);
  const int s = (jl == 0) ? 1 : -1;
  return {static_cast<std::int8_t>(-s * r.sign), r.index};
}

constexpr std::array<std::array<BasisProduct, 8>, 8> make_basis_table() {
  std::array<std::array<BasisProduct, 8>, 8> t{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) t[i][j] = cd_mul(3, i, j);
  return t;
}

inline constexpr auto kBasisTable = make_basis_table();

}  // namespace detail

constexpr BasisProduct basis_product(int i, int j) { return detail::kBasisTable[i][j]; }

// Element of one of the Hurwitz algebras R, C, H, O in the standard basis
// {f_1 = 1, f_2, ..., f_d}. Coordinates live in the chosen scalar backend.
template <class S>
class HurwitzScalar {
 public:
  explicit HurwitzScalar(Algebra a) : alg_(a) { coeffs_.fill(S(0)); }

  static HurwitzScalar zero(Algebra a) { return HurwitzScalar(a); }
  static HurwitzScalar one(Algebra a) { return unit(a, 0); }
  // k is 0-based: unit(a, 1) is f_2.
  static HurwitzScalar unit(Algebra a, int k) {
    if (k < 0 || k >= algebra_dim(a)) throw std::out_of_range("basis unit index");
    HurwitzScalar x(a);
    x.coeffs_[static_cast<std::size_t>(k)] = S(1);
    return x;
  }
  static HurwitzScalar real(Algebra a, const S& r) {
    HurwitzScalar x(a);
    x.coeffs_[0] = r;
    return x;
  }

  Algebra algebra() const { return alg_; }
  int dim() const { return algebra_dim(alg_); }

  const S& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  S& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  HurwitzScalar& operator+=(const HurwitzScalar& o) {
    check_same(o);
    for (int k = 0; k < dim(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  HurwitzScalar& operator-=(const HurwitzScalar& o) {
    check_same(o);
    for (int k = 0; k < dim(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  HurwitzScalar& operator*=(const S& r) {
    for (int k = 0; k < dim(); ++k) coeffs_[k] = coeffs_[k] * r;
    return *this;
  }
  friend HurwitzScalar operator+(HurwitzScalar a, const HurwitzScalar& b) { return a += b; }
  friend HurwitzScalar operator-(HurwitzScalar a, const HurwitzScalar& b) { return a -= b; }
  friend HurwitzScalar operator*(HurwitzScalar a, const S& r) { return a *= r; }
  friend HurwitzScalar operator*(const S& r, HurwitzScalar a) { return a *= r; }
  HurwitzScalar operator-() const {
    HurwitzScalar r(alg_);
    for (int k = 0; k < dim(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
  }

  friend HurwitzScalar operator*(const HurwitzScalar& a, const HurwitzScalar& b) {
    a.check_same(b);
    HurwitzScalar out(a.alg_);
    const int d = a.dim();
    for (int i = 0; i < d; ++i) {
      if (scalar_traits<S>::is_zero(a.coeffs_[i])) continue;
      for (int j = 0; j < d; ++j) {
        if (scalar_traits<S>::is_zero(b.coeffs_[j])) continue;
        const BasisProduct p = basis_product(i, j);
        S term = a.coeffs_[i] * b.coeffs_[j];
        if (p.sign < 0)
          out.coeffs_[p.index] -= term;
        else
          out.coeffs_[p.index] += term;
      }
    }
    return out;
  }

  friend bool operator==(const HurwitzScalar& a, const HurwitzScalar& b) {
    if (a.alg_ != b.alg_) return false;
    for (int k = 0; k < a.dim(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }
  friend bool operator!=(const HurwitzScalar& a, const HurwitzScalar& b) { return !(a == b); }

  bool is_zero() const {
    for (int k = 0; k < dim(); ++k)
      if (!scalar_traits<S>::is_zero(coeffs_[k])) return false;
    return true;
  }
  bool is_real() const {
    for (int k = 1; k < dim(); ++k)
      if (!scalar_traits<S>::is_zero(coeffs_[k])) return false;
    return true;
  }

 private:
  void check_same(const HurwitzScalar& o) const {
    if (alg_ != o.alg_) throw std::invalid_argument("algebra tag mismatch");
  }

  Algebra alg_;
  std::array<S, 8> coeffs_;
};

template <class S>
HurwitzScalar<S> conj(const HurwitzScalar<S>& x) {
  HurwitzScalar<S> r = x;
  for (int k = 1; k < x.dim(); ++k) r[k] = -r[k];
  return r;
}

template <class S>
S re(const HurwitzScalar<S>& x) {
  return x[0];
}

// Squared norm |x|^2 = sum of squared coordinates.
template <class S>
S norm2(const HurwitzScalar<S>& x) {
  S acc(0);
  for (int k = 0; k < x.dim(); ++k) acc += x[k] * x[k];
  return acc;
}

// <x,y>_D = Re(x conj(y)) = sum of coordinate products.
template <class S>
S inner(const HurwitzScalar<S>& x, const HurwitzScalar<S>& y) {
  if (x.algebra() != y.algebra()) throw std::invalid_argument("algebra tag mismatch");
  S acc(0);
  for (int k = 0; k < x.dim(); ++k) acc += x[k] * y[k];
  return acc;
}

// x^{-1} = conj(x) / |x|^2.
template <class S>
HurwitzScalar<S> inverse(const HurwitzScalar<S>& x) {
  const S n2 = norm2(x);
  if (scalar_traits<S>::is_zero(n2)) throw std::domain_error("inverse of zero");
  HurwitzScalar<S> r = conj(x);
  for (int k = 0; k < x.dim(); ++k) r[k] = r[k] / n2;
  return r;
}

template <class S>
HurwitzScalar<S> commutator(const HurwitzScalar<S>& a, const HurwitzScalar<S>& b) {
  return a * b - b * a;
}

// Associator (a, x, b) = (a x) b - a (x b); vanishes on R, C, H.
template <class S>
HurwitzScalar<S> associator(const HurwitzScalar<S>& a, const HurwitzScalar<S>& x,
                            const HurwitzScalar<S>& b) {
  return (a * x) * b - a * (x * b);
}

// Derivation of the octonions as a sum of standard generators
// D_{a,b}(x) = [[a,b], x] + 3((a x) b - a (x b)); Leibniz is checked by the
// test suite over every basis pair.
template <class S>
class OctonionDerivation {
 public:
  OctonionDerivation() = default;

  static OctonionDerivation generator(const HurwitzScalar<S>& a, const HurwitzScalar<S>& b) {
    OctonionDerivation d;
    d.add_generator(a, b);
    return d;
  }

  void add_generator(const HurwitzScalar<S>& a, const HurwitzScalar<S>& b) {
    if (a.algebra() != Algebra::O || b.algebra() != Algebra::O)
      throw std::invalid_argument("derivation generators must be octonions");
    gens_.emplace_back(a, b);
  }

  bool empty() const { return gens_.empty(); }
  const std::vector<std::pair<HurwitzScalar<S>, HurwitzScalar<S>>>& generators() const {
    return gens_;
  }

  HurwitzScalar<S> apply(const HurwitzScalar<S>& x) const {
    if (x.algebra() != Algebra::O)
      throw std::invalid_argument("octonion derivation applied to non-octonion");
    HurwitzScalar<S> out(Algebra::O);
    for (const auto& [a, b] : gens_) {
      out += commutator(commutator(a, b), x) + scalar_from_int<S>(3) * associator(a, x, b);
    }
    return out;
  }

 private:
  std::vector<std::pair<HurwitzScalar<S>, HurwitzScalar<S>>> gens_;
};

}  // namespace conelab
