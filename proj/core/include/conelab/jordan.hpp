#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "conelab/hurwitz.hpp"
#include "conelab/polyroots.hpp"
#include "conelab/rng.hpp"

namespace conelab {

// Column vector over a Hurwitz algebra.
template <class S>
class ConeVector {
 public:
  ConeVector(Algebra a, int n) : alg_(a), n_(n), comps_(static_cast<std::size_t>(n), HurwitzScalar<S>(a)) {
    if (n < 1) throw std::invalid_argument("vector size must be positive");
  }
  static ConeVector basis(Algebra a, int n, int l) {
    ConeVector v(a, n);
    v[l] = HurwitzScalar<S>::one(a);
    return v;
  }

  Algebra algebra() const { return alg_; }
  int size() const { return n_; }
  const HurwitzScalar<S>& operator[](int l) const { return comps_[static_cast<std::size_t>(l)]; }
  HurwitzScalar<S>& operator[](int l) { return comps_[static_cast<std::size_t>(l)]; }

  S norm2() const {
    S acc(0);
    for (const auto& c : comps_) acc += conelab::norm2(c);
    return acc;
  }
  bool is_zero() const {
    for (const auto& c : comps_)
      if (!c.is_zero()) return false;
    return true;
  }
  bool is_real() const {
    for (const auto& c : comps_)
      if (!c.is_real()) return false;
    return true;
  }

  ConeVector operator-(const ConeVector& o) const {
    ConeVector r = *this;
    for (int l = 0; l < n_; ++l) r[l] -= o[l];
    return r;
  }
  ConeVector operator+(const ConeVector& o) const {
    ConeVector r = *this;
    for (int l = 0; l < n_; ++l) r[l] += o[l];
    return r;
  }
  // Right scalar multiple (v x)_l = v_l x; order matters beyond C.
  ConeVector right_mul(const HurwitzScalar<S>& x) const {
    ConeVector r = *this;
    for (int l = 0; l < n_; ++l) r[l] = r[l] * x;
    return r;
  }
  ConeVector scaled(const S& r) const {
    ConeVector out = *this;
    for (int l = 0; l < n_; ++l) out[l] *= r;
    return out;
  }

 private:
  Algebra alg_;
  int n_;
  std::vector<HurwitzScalar<S>> comps_;
};

// v^* u = sum conj(v_l) u_l.
template <class S>
HurwitzScalar<S> vstar_dot(const ConeVector<S>& v, const ConeVector<S>& u) {
  if (v.algebra() != u.algebra() || v.size() != u.size())
    throw std::invalid_argument("vector shape mismatch");
  HurwitzScalar<S> acc(v.algebra());
  for (int l = 0; l < v.size(); ++l) acc += conj(v[l]) * u[l];
  return acc;
}

// Square matrix over a Hurwitz algebra, no symmetry assumed.
template <class S>
class DenseMatrix {
 public:
  DenseMatrix(Algebra a, int n)
      : alg_(a), n_(n), e_(static_cast<std::size_t>(n) * n, HurwitzScalar<S>(a)) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
  }
  static DenseMatrix identity(Algebra a, int n) {
    DenseMatrix m(a, n);
    for (int l = 0; l < n; ++l) m.at(l, l) = HurwitzScalar<S>::one(a);
    return m;
  }

  Algebra algebra() const { return alg_; }
  int size() const { return n_; }

  const HurwitzScalar<S>& at(int l, int m) const { return e_[idx(l, m)]; }
  HurwitzScalar<S>& at(int l, int m) { return e_[idx(l, m)]; }

  DenseMatrix operator+(const DenseMatrix& o) const {
    check_same(o);
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  DenseMatrix operator-(const DenseMatrix& o) const {
    check_same(o);
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  DenseMatrix operator-() const {
    DenseMatrix r = *this;
    for (auto& x : r.e_) x = -x;
    return r;
  }
  DenseMatrix scaled(const S& r) const {
    DenseMatrix out = *this;
    for (auto& x : out.e_) x *= r;
    return out;
  }

  // Entrywise product sums; each term is the two-factor product X_{lk} Y_{km}.
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    a.check_same(b);
    DenseMatrix r(a.alg_, a.n_);
    for (int l = 0; l < a.n_; ++l)
      for (int m = 0; m < a.n_; ++m) {
        HurwitzScalar<S> acc(a.alg_);
        for (int k = 0; k < a.n_; ++k) acc += a.at(l, k) * b.at(k, m);
        r.at(l, m) = acc;
      }
    return r;
  }

  DenseMatrix adjoint() const {
    DenseMatrix r(alg_, n_);
    for (int l = 0; l < n_; ++l)
      for (int m = 0; m < n_; ++m) r.at(l, m) = conj(at(m, l));
    return r;
  }

  HurwitzScalar<S> trace() const {
    HurwitzScalar<S> acc(alg_);
    for (int l = 0; l < n_; ++l) acc += at(l, l);
    return acc;
  }

  bool operator==(const DenseMatrix& o) const {
    return alg_ == o.alg_ && n_ == o.n_ && e_ == o.e_;
  }

 private:
  std::size_t idx(int l, int m) const { return static_cast<std::size_t>(l) * n_ + m; }
  void check_same(const DenseMatrix& o) const {
    if (alg_ != o.alg_ || n_ != o.n_) throw std::invalid_argument("matrix shape mismatch");
  }

  Algebra alg_;
  int n_;
  std::vector<HurwitzScalar<S>> e_;
};

// (M v)_l = sum_m M_{lm} v_m.
template <class S>
ConeVector<S> mat_vec(const DenseMatrix<S>& M, const ConeVector<S>& v) {
  if (M.algebra() != v.algebra() || M.size() != v.size())
    throw std::invalid_argument("matrix/vector shape mismatch");
  ConeVector<S> r(v.algebra(), v.size());
  for (int l = 0; l < M.size(); ++l) {
    HurwitzScalar<S> acc(v.algebra());
    for (int m = 0; m < M.size(); ++m) acc += M.at(l, m) * v[m];
    r[l] = acc;
  }
  return r;
}

// Hermitian n x n matrix over D: the ambient Jordan algebra element.
// entry(m,l) = conj(entry(l,m)) and the diagonal is real by construction.
template <class S>
class HermitianMatrix {
 public:
  HermitianMatrix(Algebra a, int n) : m_(a, n) { check_octonion_bound(a, n); }

  // Symmetrizes the input: X -> (X + X^*)/2 entrywise. For already-hermitian
  // data this is the identity (and keeps float diagonals exactly real).
  static HermitianMatrix symmetrize(const DenseMatrix<S>& raw) {
    HermitianMatrix h(raw.algebra(), raw.size());
    const S half = scalar_from_ratio<S>(1, 2);
    for (int l = 0; l < raw.size(); ++l) {
      for (int m = l; m < raw.size(); ++m) {
        HurwitzScalar<S> e = (raw.at(l, m) + conj(raw.at(m, l))) * half;
        if (l == m)
          for (int k = 1; k < e.dim(); ++k) e[k] = S(0);
        h.m_.at(l, m) = e;
        if (l != m) h.m_.at(m, l) = conj(e);
      }
    }
    return h;
  }

  // Strict constructor: rejects non-hermitian input.
  static HermitianMatrix from_dense(const DenseMatrix<S>& raw) {
    for (int l = 0; l < raw.size(); ++l) {
      if (!raw.at(l, l).is_real()) throw std::invalid_argument("non-real diagonal entry");
      for (int m = l + 1; m < raw.size(); ++m)
        if (raw.at(l, m) != conj(raw.at(m, l)))
          throw std::invalid_argument("matrix is not hermitian");
    }
    HermitianMatrix h(raw.algebra(), raw.size());
    h.m_ = raw;
    return h;
  }

  static HermitianMatrix identity(Algebra a, int n) {
    HermitianMatrix h(a, n);
    h.m_ = DenseMatrix<S>::identity(a, n);
    return h;
  }

  static HermitianMatrix basis_diag(Algebra a, int n, int l) {
    HermitianMatrix h(a, n);
    h.m_.at(l, l) = HurwitzScalar<S>::one(a);
    return h;
  }

  // E_{lm} x + E_{ml} conj(x), the hermitian off-diagonal unit in direction x.
  static HermitianMatrix basis_offdiag(Algebra a, int n, int l, int m,
                                       const HurwitzScalar<S>& x) {
    if (l == m) throw std::invalid_argument("off-diagonal basis needs l != m");
    HermitianMatrix h(a, n);
    h.m_.at(l, m) = x;
    h.m_.at(m, l) = conj(x);
    return h;
  }

  Algebra algebra() const { return m_.algebra(); }
  int size() const { return m_.size(); }
  const DenseMatrix<S>& raw() const { return m_; }
  const HurwitzScalar<S>& entry(int l, int m) const { return m_.at(l, m); }

  void set_entry(int l, int m, const HurwitzScalar<S>& x) {
    if (l == m) {
      if (!x.is_real()) throw std::invalid_argument("diagonal entries must be real");
      m_.at(l, l) = x;
    } else {
      m_.at(l, m) = x;
      m_.at(m, l) = conj(x);
    }
  }

  S trace() const {
    S acc(0);
    for (int l = 0; l < size(); ++l) acc += re(m_.at(l, l));
    return acc;
  }

  HermitianMatrix operator+(const HermitianMatrix& o) const {
    HermitianMatrix r(algebra(), size());
    r.m_ = m_ + o.m_;
    return r;
  }
  HermitianMatrix operator-(const HermitianMatrix& o) const {
    HermitianMatrix r(algebra(), size());
    r.m_ = m_ - o.m_;
    return r;
  }
  HermitianMatrix operator-() const {
    HermitianMatrix r(algebra(), size());
    r.m_ = -m_;
    return r;
  }
  HermitianMatrix scaled(const S& c) const {
    HermitianMatrix r(algebra(), size());
    r.m_ = m_.scaled(c);
    return r;
  }
  bool operator==(const HermitianMatrix& o) const { return m_ == o.m_; }

 private:
  static void check_octonion_bound(Algebra a, int n) {
    if (a == Algebra::O && n > 3)
      throw std::invalid_argument("hermitian octonion matrices need n <= 3");
  }
  DenseMatrix<S> m_;
};

// X o Y = (XY + YX)/2.
template <class S>
HermitianMatrix<S> jordan_product(const HermitianMatrix<S>& X, const HermitianMatrix<S>& Y) {
  if (X.algebra() != Y.algebra() || X.size() != Y.size())
    throw std::invalid_argument("matrix shape mismatch");
  const DenseMatrix<S> p = X.raw() * Y.raw();
  DenseMatrix<S> sym(X.algebra(), X.size());
  const S half = scalar_from_ratio<S>(1, 2);
  for (int l = 0; l < X.size(); ++l)
    for (int m = 0; m < X.size(); ++m) sym.at(l, m) = (p.at(l, m) + conj(p.at(m, l))) * half;
  return HermitianMatrix<S>::symmetrize(sym);
}

// <X, Y> = Tr(X o Y); reduces to the entrywise real inner product.
template <class S>
S trace_inner(const HermitianMatrix<S>& X, const HermitianMatrix<S>& Y) {
  if (X.algebra() != Y.algebra() || X.size() != Y.size())
    throw std::invalid_argument("matrix shape mismatch");
  S acc(0);
  for (int l = 0; l < X.size(); ++l)
    for (int m = 0; m < X.size(); ++m) acc += inner(X.entry(l, m), Y.entry(l, m));
  return acc;
}

// uu^*. For octonions the first component must be real, otherwise the result
// can leave the cone entirely; allow_any_first bypasses the guard.
template <class S>
HermitianMatrix<S> rank_one(const ConeVector<S>& u, bool allow_any_first = false) {
  if (u.algebra() == Algebra::O && !allow_any_first && !u[0].is_real())
    throw std::invalid_argument("octonion rank-one needs a real first component");
  HermitianMatrix<S> X(u.algebra(), u.size());
  for (int l = 0; l < u.size(); ++l) {
    X.set_entry(l, l, HurwitzScalar<S>::real(u.algebra(), norm2(u[l])));
    for (int m = l + 1; m < u.size(); ++m) X.set_entry(l, m, u[l] * conj(u[m]));
  }
  return X;
}

// Re(v^* (M v)) with the paper's bracketing: w = Mv first, then sum Re(conj(v_l) w_l).
template <class S>
S re_vstar_mat_v(const ConeVector<S>& v, const HermitianMatrix<S>& M) {
  const ConeVector<S> w = mat_vec(M.raw(), v);
  S acc(0);
  for (int l = 0; l < v.size(); ++l) acc += re(conj(v[l]) * w[l]);
  return acc;
}

// <uu^*, vv^*>; equals Re(v^*(uu^*)v) by the rank-one trace identity.
template <class S>
S rank_one_pairing(const ConeVector<S>& u, const ConeVector<S>& v) {
  return re_vstar_mat_v(v, rank_one(u, true));
}

// Jordan powers by repeated multiplication (power associativity).
template <class S>
std::vector<HermitianMatrix<S>> jordan_powers(const HermitianMatrix<S>& X, int upto) {
  std::vector<HermitianMatrix<S>> p;
  p.push_back(HermitianMatrix<S>::identity(X.algebra(), X.size()));
  if (upto >= 1) p.push_back(X);
  for (int k = 2; k <= upto; ++k) p.push_back(jordan_product(p.back(), X));
  return p;
}

// Characteristic polynomial of the Jordan eigenvalues via power traces and
// Newton's identities. Returns monic coefficients c so that
// chi(t) = t^n + c[1] t^{n-1} + ... + c[n]  (c[0] = 1).
template <class S>
std::vector<S> char_poly(const HermitianMatrix<S>& X) {
  const int n = X.size();
  const auto powers = jordan_powers(X, n);
  std::vector<S> ptr(static_cast<std::size_t>(n) + 1, S(0));  // power sums
  for (int k = 1; k <= n; ++k) ptr[k] = powers[static_cast<std::size_t>(k)].trace();
  std::vector<S> e(static_cast<std::size_t>(n) + 1, S(0));  // elementary symmetric
  e[0] = S(1);
  for (int k = 1; k <= n; ++k) {
    S acc(0);
    for (int i = 1; i <= k; ++i) {
      const S term = e[static_cast<std::size_t>(k - i)] * ptr[static_cast<std::size_t>(i)];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    e[k] = acc / scalar_from_int<S>(k);
  }
  std::vector<S> coeff(static_cast<std::size_t>(n) + 1, S(0));
  coeff[0] = S(1);
  for (int k = 1; k <= n; ++k) coeff[k] = (k % 2 == 1) ? -e[k] : e[k];
  return coeff;
}

// Cone membership: all Jordan eigenvalues >= -eps. Exact backend: the
// eigenvalues are real, so nonnegativity is equivalent to all elementary
// symmetric functions being nonnegative (Descartes sign pattern of chi).
template <class S>
bool cone_member(const HermitianMatrix<S>& X, double eps = 1e-9) {
  const auto coeff = char_poly(X);
  const int n = X.size();
  if constexpr (scalar_traits<S>::exact) {
    (void)eps;
    for (int k = 1; k <= n; ++k) {
      const S ek = (k % 2 == 1) ? -coeff[static_cast<std::size_t>(k)] : coeff[static_cast<std::size_t>(k)];
      if (scalar_traits<S>::sign(ek) < 0) return false;
    }
    return true;
  } else {
    std::vector<double> c(coeff.begin(), coeff.end());
    const auto roots = real_roots_monic(c);
    if (roots.empty()) return true;
    double mn = roots[0];
    for (double r : roots) mn = std::min(mn, r);
    return mn >= -eps;
  }
}

// Smallest Jordan eigenvalue (double backend).
inline double min_jordan_eigenvalue(const HermitianMatrix<double>& X) {
  const auto coeff = char_poly(X);
  const auto roots = real_roots_monic(coeff);
  double mn = roots.empty() ? 0.0 : roots[0];
  for (double r : roots) mn = std::min(mn, r);
  return mn;
}

// Orthogonality cases for nonzero octonion pairs with real first components.
enum class OrthogonalCase { Case1 = 1, Case2 = 2, Case3 = 3, None = 0 };

template <class S>
OrthogonalCase orthogonal_pair_classify(const ConeVector<S>& u, const ConeVector<S>& v,
                                        double eps = 1e-9) {
  if (u.algebra() != Algebra::O || u.size() != 3 || v.size() != 3)
    throw std::invalid_argument("classification is for octonion 3-vectors");
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("zero vector");
  if (!u[0].is_real() || !v[0].is_real())
    throw std::invalid_argument("first components must be real");
  auto near_zero = [&](const HurwitzScalar<S>& x) {
    if constexpr (scalar_traits<S>::exact) {
      return x.is_zero();
    } else {
      S acc(0);
      for (int k = 0; k < x.dim(); ++k) acc += x[k] * x[k];
      return scalar_traits<S>::to_double(acc) <= eps * eps;
    }
  };
  const bool u2_zero = near_zero(u[1]);
  const bool u3_zero = near_zero(u[2]);
  if (u2_zero && u3_zero) {
    if (near_zero(v[0])) return OrthogonalCase::Case1;
    return OrthogonalCase::None;
  }
  const HurwitzScalar<S> u1v1 = u[0] * v[0];
  if (u2_zero) {
    // v_3 = -u_1 v_1 conj(u_3)^{-1}
    const HurwitzScalar<S> want = -(u1v1 * inverse(conj(u[2])));
    if (near_zero(v[2] - want)) return OrthogonalCase::Case2;
    return OrthogonalCase::None;
  }
  const HurwitzScalar<S> inv_cu2 = inverse(conj(u[1]));
  const HurwitzScalar<S> want =
      -(u1v1 * inv_cu2) - (inv_cu2 * conj(u[2])) * v[2];
  if (near_zero(v[1] - want)) return OrthogonalCase::Case3;
  return OrthogonalCase::None;
}

// Deterministic sampler for unit-norm pairs with <uu^*, vv^*> = 0.
// Associative tags project v against u; the octonion branch draws u with
// u_2 != 0 and reconstructs v_2 (case 3 of the classification).
inline std::pair<ConeVector<double>, ConeVector<double>> sample_orthogonal_pair(
    int n, Algebra alg, std::uint64_t seed, std::uint64_t index = 0) {
  SampleRng rng(seed, index);
  const int d = algebra_dim(alg);
  auto draw_scalar = [&](bool real_only) {
    HurwitzScalar<double> x(alg);
    x[0] = rng.gaussian();
    if (!real_only)
      for (int k = 1; k < d; ++k) x[k] = rng.gaussian();
    return x;
  };
  auto normalize = [](ConeVector<double>& w) {
    const double nn = std::sqrt(w.norm2());
    for (int l = 0; l < w.size(); ++l) w[l] *= 1.0 / nn;
  };
  if (alg != Algebra::O) {
    ConeVector<double> u(alg, n), v(alg, n);
    for (;;) {
      for (int l = 0; l < n; ++l) u[l] = draw_scalar(false);
      if (u.norm2() > 1e-12) break;
    }
    for (;;) {
      for (int l = 0; l < n; ++l) v[l] = draw_scalar(false);
      // v <- v - u s with conj(s) = (v^* u)/|u|^2 makes v^* u = 0.
      const HurwitzScalar<double> s = conj(vstar_dot(v, u)) * (1.0 / u.norm2());
      v = v - u.right_mul(s);
      if (v.norm2() > 1e-12) break;
    }
    normalize(u);
    normalize(v);
    return {u, v};
  }
  if (n != 3) throw std::invalid_argument("octonion sampling needs n = 3");
  ConeVector<double> u(alg, 3), v(alg, 3);
  for (;;) {
    u[0] = draw_scalar(true);
    u[1] = draw_scalar(false);
    u[2] = draw_scalar(false);
    if (norm2(u[1]) > 1e-6) break;
  }
  v[0] = draw_scalar(true);
  v[2] = draw_scalar(false);
  const HurwitzScalar<double> inv_cu2 = inverse(conj(u[1]));
  v[1] = -(u[0] * v[0]) * inv_cu2 - (inv_cu2 * conj(u[2])) * v[2];
  normalize(u);
  normalize(v);
  return {u, v};
}

}  // namespace conelab
