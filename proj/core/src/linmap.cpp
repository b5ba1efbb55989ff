#include "conelab/linmap.hpp"

#include <cmath>
#include <stdexcept>

#include "conelab/parallel.hpp"

namespace conelab {

namespace {
constexpr double kSqrtHalf = 0.70710678118654752440;
}

std::vector<HermitianMatrix<double>> jordan_basis(int n, Algebra alg) {
  std::vector<HermitianMatrix<double>> basis;
  basis.reserve(static_cast<std::size_t>(jordan_space_dim(n, alg)));
  for (int l = 0; l < n; ++l) basis.push_back(HermitianMatrix<double>::basis_diag(alg, n, l));
  const int d = algebra_dim(alg);
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m)
      for (int k = 0; k < d; ++k) {
        auto x = HurwitzScalar<double>::unit(alg, k);
        x *= kSqrtHalf;
        basis.push_back(HermitianMatrix<double>::basis_offdiag(alg, n, l, m, x));
      }
  return basis;
}

Eigen::VectorXd coords(const HermitianMatrix<double>& X) {
  const int n = X.size();
  const int d = algebra_dim(X.algebra());
  Eigen::VectorXd c(jordan_space_dim(n, X.algebra()));
  int i = 0;
  for (int l = 0; l < n; ++l) c[i++] = re(X.entry(l, l));
  const double sqrt2 = 1.0 / kSqrtHalf;
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m)
      for (int k = 0; k < d; ++k) c[i++] = sqrt2 * X.entry(l, m)[k];
  return c;
}

HermitianMatrix<double> from_coords(int n, Algebra alg, const Eigen::VectorXd& c) {
  if (c.size() != jordan_space_dim(n, alg)) throw std::invalid_argument("coordinate size mismatch");
  HermitianMatrix<double> X(alg, n);
  const int d = algebra_dim(alg);
  int i = 0;
  for (int l = 0; l < n; ++l) X.set_entry(l, l, HurwitzScalar<double>::real(alg, c[i++]));
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m) {
      HurwitzScalar<double> x(alg);
      for (int k = 0; k < d; ++k) x[k] = kSqrtHalf * c[i++];
      X.set_entry(l, m, x);
    }
  return X;
}

ConeMap::ConeMap(int n, Algebra alg, std::string label)
    : n_(n), alg_(alg), m_(Eigen::MatrixXd::Zero(jordan_space_dim(n, alg), jordan_space_dim(n, alg))),
      label_(std::move(label)) {}

ConeMap::ConeMap(int n, Algebra alg, Eigen::MatrixXd m, std::string label)
    : n_(n), alg_(alg), m_(std::move(m)), label_(std::move(label)) {
  if (m_.rows() != m_.cols() || m_.rows() != jordan_space_dim(n, alg))
    throw std::invalid_argument("operator matrix has wrong dimension");
}

ConeMap ConeMap::identity(int n, Algebra alg) {
  const int N = jordan_space_dim(n, alg);
  return ConeMap(n, alg, Eigen::MatrixXd::Identity(N, N), "identity");
}

HermitianMatrix<double> ConeMap::apply(const HermitianMatrix<double>& X) const {
  if (X.size() != n_ || X.algebra() != alg_) throw std::invalid_argument("operand shape mismatch");
  return from_coords(n_, alg_, m_ * coords(X));
}

ConeMap ConeMap::operator*(const ConeMap& o) const {
  if (n_ != o.n_ || alg_ != o.alg_) throw std::invalid_argument("operator shape mismatch");
  return ConeMap(n_, alg_, m_ * o.m_);
}

ConeMap ConeMap::operator+(const ConeMap& o) const {
  if (n_ != o.n_ || alg_ != o.alg_) throw std::invalid_argument("operator shape mismatch");
  return ConeMap(n_, alg_, m_ + o.m_);
}

ConeMap ConeMap::scaled(double c) const { return ConeMap(n_, alg_, c * m_); }

ConeMap from_function(const std::function<HermitianMatrix<double>(const HermitianMatrix<double>&)>& f,
                      int n, Algebra alg, std::string label) {
  const auto basis = jordan_basis(n, alg);
  const int N = static_cast<int>(basis.size());
  Eigen::MatrixXd m(N, N);
  for (int j = 0; j < N; ++j) m.col(j) = coords(f(basis[static_cast<std::size_t>(j)]));
  return ConeMap(n, alg, std::move(m), std::move(label));
}

ConeMap l_op(const HermitianMatrix<double>& x) {
  return from_function([&](const HermitianMatrix<double>& y) { return jordan_product(x, y); },
                       x.size(), x.algebra(), "L");
}

ConeMap quadratic_rep(const HermitianMatrix<double>& x) {
  const ConeMap L = l_op(x);
  const ConeMap L2 = l_op(jordan_product(x, x));
  return ConeMap(x.size(), x.algebra(), 2.0 * (L.matrix() * L.matrix()) - L2.matrix(), "P");
}

ConeMap expm(const ConeMap& A, double t) {
  // Higham's degree-13 Pade coefficients.
  static const double b[14] = {64764752532480000.0,
                               32382376266240000.0,
                               7771770303897600.0,
                               1187353796428800.0,
                               129060195264000.0,
                               10559470521600.0,
                               670442572800.0,
                               33522128640.0,
                               1323241920.0,
                               40840800.0,
                               960960.0,
                               16380.0,
                               182.0,
                               1.0};
  const double theta13 = 5.371920351148152;

  Eigen::MatrixXd M = t * A.matrix();
  const double nrm = M.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int s = 0;
  if (nrm > theta13) s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
  if (s > 0) M /= std::pow(2.0, s);

  const int N = static_cast<int>(M.rows());
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N, N);
  const Eigen::MatrixXd M2 = M * M;
  const Eigen::MatrixXd M4 = M2 * M2;
  const Eigen::MatrixXd M6 = M4 * M2;
  const Eigen::MatrixXd U =
      M * (M6 * (b[13] * M6 + b[11] * M4 + b[9] * M2) + b[7] * M6 + b[5] * M4 + b[3] * M2 + b[1] * I);
  const Eigen::MatrixXd V =
      M6 * (b[12] * M6 + b[10] * M4 + b[8] * M2) + b[6] * M6 + b[4] * M4 + b[2] * M2 + b[0] * I;
  Eigen::MatrixXd R = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < s; ++k) R = R * R;
  if (!R.allFinite()) throw std::overflow_error("operator exponential overflowed");
  return ConeMap(A.n(), A.algebra(), std::move(R), "exp");
}

ConeMap lie_map(const DenseMatrix<double>& H, const OctonionDerivation<double>* D) {
  const Algebra alg = H.algebra();
  if (alg == Algebra::O) {
    const auto t = H.trace();
    for (int k = 1; k < 8; ++k)
      if (std::fabs(t[k]) > 1e-9)
        throw std::invalid_argument("octonion lie map needs a real trace");
  } else if (D != nullptr && !D->empty()) {
    throw std::invalid_argument("derivation term is octonion-only");
  }
  return from_function(
      [&H, D](const HermitianMatrix<double>& X) { return apply_lie_hypothesis(H, D, X); },
      H.size(), alg, "lie");
}

namespace {

SampleCheckReport run_pair_check(const ConeMap& A, std::size_t samples, std::uint64_t seed,
                                 double eps, bool lie_mode, const char* name) {
  const int n = A.n();
  const Algebra alg = A.algebra();
  auto value_at = [&](std::size_t i) {
    const auto [u, v] = sample_orthogonal_pair(n, alg, seed, i);
    const double val = trace_inner(A.apply(rank_one(u, true)), rank_one(v, true));
    return lie_mode ? -std::fabs(val) : val;
  };
  const MinReduce r = parallel_min(samples, value_at);

  SampleCheckReport rep;
  rep.check = name;
  rep.n = n;
  rep.alg = alg;
  rep.samples = samples;
  rep.seed = seed;
  rep.eps = eps;
  if (samples == 0) {
    rep.pass = true;
    return rep;
  }
  const auto [wu, wv] = sample_orthogonal_pair(n, alg, seed, r.argmin);
  const double raw = trace_inner(A.apply(rank_one(wu, true)), rank_one(wv, true));
  if (lie_mode) {
    rep.max_abs = -r.min_value;
    rep.min_value = raw;
    rep.pass = rep.max_abs <= eps;
    if (!rep.pass) rep.witness = PairWitness{wu, wv, raw};
  } else {
    rep.min_value = r.min_value;
    rep.max_abs = std::fabs(r.min_value);
    rep.pass = r.min_value >= -eps;
    if (!rep.pass) rep.witness = PairWitness{wu, wv, raw};
  }
  return rep;
}

}  // namespace

SampleCheckReport check_sv_condition(const ConeMap& A, std::size_t samples, std::uint64_t seed,
                                     double eps) {
  return run_pair_check(A, samples, seed, eps, false, "sv_condition");
}

SampleCheckReport check_lie_condition(const ConeMap& A, std::size_t samples, std::uint64_t seed,
                                      double eps) {
  return run_pair_check(A, samples, seed, eps, true, "lie_condition");
}

}  // namespace conelab
