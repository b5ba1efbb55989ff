#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelab/jordan.hpp"

namespace conelab {

// Orthonormal basis of H_n(D) under the trace inner product:
// E_ll for l < n, then (E_lm f_k + E_ml conj(f_k))/sqrt(2) for l < m, k < d.
std::vector<HermitianMatrix<double>> jordan_basis(int n, Algebra alg);

inline int jordan_space_dim(int n, Algebra alg) {
  return n + algebra_dim(alg) * n * (n - 1) / 2;
}

Eigen::VectorXd coords(const HermitianMatrix<double>& X);
HermitianMatrix<double> from_coords(int n, Algebra alg, const Eigen::VectorXd& c);

// Linear operator on H_n(D) stored as a real matrix over the orthonormal
// basis; adjoints are plain transposes.
class ConeMap {
 public:
  ConeMap(int n, Algebra alg, std::string label = "");
  ConeMap(int n, Algebra alg, Eigen::MatrixXd m, std::string label = "");

  static ConeMap identity(int n, Algebra alg);

  int n() const { return n_; }
  Algebra algebra() const { return alg_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  Eigen::MatrixXd& matrix() { return m_; }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  HermitianMatrix<double> apply(const HermitianMatrix<double>& X) const;

  ConeMap operator*(const ConeMap& o) const;
  ConeMap operator+(const ConeMap& o) const;
  ConeMap scaled(double c) const;

 private:
  int n_;
  Algebra alg_;
  Eigen::MatrixXd m_;
  std::string label_;
};

// Operator matrix of a linear function on H_n(D), column by column.
ConeMap from_function(const std::function<HermitianMatrix<double>(const HermitianMatrix<double>&)>& f,
                      int n, Algebra alg, std::string label = "");

// L(x): Y -> x o Y.
ConeMap l_op(const HermitianMatrix<double>& x);

// Quadratic representation P(x) = 2 L(x)^2 - L(x^2).
ConeMap quadratic_rep(const HermitianMatrix<double>& x);

// exp(t A) by scaling-and-squaring with the degree-13 Pade approximant.
// Throws on non-finite results (extreme t * ||A||).
ConeMap expm(const ConeMap& A, double t = 1.0);

// X -> H X + X H^* (+ A_D(X) for octonions). H is any n x n matrix over D;
// for octonions Tr(H) must be real and D may be supplied.
ConeMap lie_map(const DenseMatrix<double>& H,
                const OctonionDerivation<double>* D = nullptr);

// Entrywise lift of an octonion derivation to H_3(O).
template <class S>
HermitianMatrix<S> apply_derivation_lift(const OctonionDerivation<S>& D,
                                         const HermitianMatrix<S>& X) {
  if (X.algebra() != Algebra::O) throw std::invalid_argument("derivation lift needs octonion entries");
  DenseMatrix<S> out(X.algebra(), X.size());
  for (int l = 0; l < X.size(); ++l)
    for (int m = 0; m < X.size(); ++m) out.at(l, m) = D.apply(X.raw().at(l, m));
  return HermitianMatrix<S>::symmetrize(out);
}

template <class S>
HermitianMatrix<S> apply_lie_hypothesis(const DenseMatrix<S>& H, const OctonionDerivation<S>* D,
                                        const HermitianMatrix<S>& X) {
  DenseMatrix<S> raw = H * X.raw() + X.raw() * H.adjoint();
  HermitianMatrix<S> out = HermitianMatrix<S>::symmetrize(raw);
  if (D != nullptr && !D->empty()) out = out + apply_derivation_lift(*D, X);
  return out;
}

struct PairWitness {
  ConeVector<double> u;
  ConeVector<double> v;
  double value;
};

// Report of a sampled orthogonal-pair check.
struct SampleCheckReport {
  std::string check;
  int n = 0;
  Algebra alg = Algebra::R;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  double min_value = 0.0;
  double max_abs = 0.0;
  bool pass = false;
  std::optional<PairWitness> witness;
};

// Schneider-Vidyasagar sampler: <A(uu^*), vv^*> over orthogonal idempotent
// pairs; pass iff the minimum stays above -eps. A witness below -eps
// certifies A outside s(C); passing is evidence only.
SampleCheckReport check_sv_condition(const ConeMap& A, std::size_t samples, std::uint64_t seed,
                                     double eps = 1e-9);

// Group-membership sampler: pass iff |<A(uu^*), vv^*>| <= eps on all sampled
// orthogonal pairs.
SampleCheckReport check_lie_condition(const ConeMap& A, std::size_t samples, std::uint64_t seed,
                                      double eps = 1e-9);

enum class DerivationSpace { Octonions, AlbertAlgebra };

// Dimension of the derivation algebra: nullity of the Leibniz system,
// computed by exact modular rank over two primes.
int derivation_dimension(DerivationSpace space);

// Same machinery for any H_n(D): solutions of A(X o Y) = A(X) o Y + X o A(Y).
int jordan_derivation_dimension(int n, Algebra alg);

}  // namespace conelab
