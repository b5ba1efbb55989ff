// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <complex>
#include <vector>

#include "conelab/jordan.hpp"
#include "conelab/rational.hpp"
#include "conelab/rng.hpp"

namespace conelab::oracle {

// Cofactor-expansion determinant over any commutative ring.
template <class S>
S det_cofactor(const std::vector<std::vector<S>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return S(1);
  if (n == 1) return m[0][0];
  S acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<S>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<S> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    const S term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

// Truncated-series matrix exponential with pre-scaling; independent of the
// Pade implementation.
inline Eigen::MatrixXd expm_series(const Eigen::MatrixXd& A) {
  const double nrm = A.cwiseAbs().colwise().sum().maxCoeff();
  int k = 0;
  Eigen::MatrixXd M = A;
  while (M.cwiseAbs().colwise().sum().maxCoeff() > 0.25) {
    M /= 2.0;
    ++k;
  }
  (void)nrm;
  const int N = static_cast<int>(A.rows());
  Eigen::MatrixXd R = Eigen::MatrixXd::Identity(N, N);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(N, N);
  for (int i = 1; i <= 30; ++i) {
    term = (term * M) / static_cast<double>(i);
    R += term;
  }
  for (int i = 0; i < k; ++i) R = R * R;
  return R;
}

// Complex-matrix embedding of H_n(D) for associative D. R and C embed as
// themselves; a quaternion z + w j maps to [[z, w], [-conj(w), conj(z)]].
inline Eigen::MatrixXcd complex_embedding(const HermitianMatrix<double>& X) {
  const int n = X.size();
  using C = std::complex<double>;
  switch (X.algebra()) {
    case Algebra::R:
    case Algebra::C: {
      Eigen::MatrixXcd M(n, n);
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          const auto& e = X.entry(l, m);
          M(l, m) = C(e[0], X.algebra() == Algebra::C ? e[1] : 0.0);
        }
      return M;
    }
    case Algebra::H: {
      Eigen::MatrixXcd M(2 * n, 2 * n);
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          const auto& e = X.entry(l, m);
          const C z(e[0], e[1]), w(e[2], e[3]);
          M(2 * l, 2 * m) = z;
          M(2 * l, 2 * m + 1) = w;
          M(2 * l + 1, 2 * m) = -std::conj(w);
          M(2 * l + 1, 2 * m + 1) = std::conj(z);
        }
      return M;
    }
    case Algebra::O:
      throw std::invalid_argument("octonions admit no associative embedding");
  }
  throw std::invalid_argument("bad algebra");
}

inline double min_eig_embedding(const HermitianMatrix<double>& X) {
  const Eigen::MatrixXcd M = complex_embedding(X);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M);
  return es.eigenvalues().minCoeff();
}

inline double min_eig_real_sym(const std::vector<std::vector<double>>& Y) {
  const int n = static_cast<int>(Y.size());
  Eigen::MatrixXd M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M(i, j) = Y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
  return es.eigenvalues().minCoeff();
}

// ---- random data ----------------------------------------------------------

inline HurwitzScalar<double> random_scalar(Algebra alg, SampleRng& rng, bool real_only = false) {
  HurwitzScalar<double> x(alg);
  x[0] = rng.gaussian();
  if (!real_only)
    for (int k = 1; k < algebra_dim(alg); ++k) x[k] = rng.gaussian();
  return x;
}

inline HurwitzScalar<Rational> random_scalar_exact(Algebra alg, SampleRng& rng,
                                                   bool real_only = false) {
  HurwitzScalar<Rational> x(alg);
  const int d = real_only ? 1 : algebra_dim(alg);
  for (int k = 0; k < d; ++k) x[k] = Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4));
  return x;
}

inline HermitianMatrix<double> random_hermitian(Algebra alg, int n, SampleRng& rng) {
  HermitianMatrix<double> X(alg, n);
  for (int l = 0; l < n; ++l) {
    X.set_entry(l, l, HurwitzScalar<double>::real(alg, rng.gaussian()));
    for (int m = l + 1; m < n; ++m) X.set_entry(l, m, random_scalar(alg, rng));
  }
  return X;
}

inline HermitianMatrix<Rational> random_hermitian_exact(Algebra alg, int n, SampleRng& rng) {
  HermitianMatrix<Rational> X(alg, n);
  for (int l = 0; l < n; ++l) {
    X.set_entry(l, l,
                HurwitzScalar<Rational>::real(alg, Rational(rng.uniform_int(-9, 9), rng.uniform_int(1, 4))));
    for (int m = l + 1; m < n; ++m) X.set_entry(l, m, random_scalar_exact(alg, rng));
  }
  return X;
}

// Random cone element: the Jordan square of a random hermitian matrix.
inline HermitianMatrix<double> random_cone_element(Algebra alg, int n, SampleRng& rng) {
  const auto Y = random_hermitian(alg, n, rng);
  return jordan_product(Y, Y);
}

// ---- exact rank (for the derivation-dimension sandwich) --------------------

inline std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows.size() && lead < cols; ++lead) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][lead].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const Rational inv = Rational(1) / rows[r][lead];
    for (std::size_t c = lead; c < cols; ++c) rows[r][c] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][lead].is_zero()) continue;
      const Rational f = rows[i][lead];
      for (std::size_t c = lead; c < cols; ++c) rows[i][c] -= f * rows[r][c];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace conelab::oracle
