#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conelab/linmap.hpp"

namespace conelab {

// The structured generator on H_n(D): diagonal image
// (x_22 - x_11, (n-1)^2 (x_33 - x_22), ..., (n-1)^2 (x_11 - x_nn)),
// first row/column off-diagonals scaled by -p, all others by -q, with
// p = (n-2)(n^2-n-1)/2 and q = (n-1)(n^2-n-1).
class ExoticGenerator {
 public:
  static ExoticGenerator build(int n, Algebra alg);

  int n() const { return n_; }
  Algebra algebra() const { return alg_; }

  Rational p_exact() const { return Rational(static_cast<long>(n_ - 2) * (nn1()), 2); }
  Rational q_exact() const { return Rational(static_cast<long>(n_ - 1) * nn1()); }
  long r_coeff() const { return static_cast<long>(n_) * (n_ - 1) * (n_ - 3); }
  long s_coeff() const { return static_cast<long>(n_) * (n_ - 1); }
  long t_coeff() const { return static_cast<long>(n_ - 1) * (n_ - 1); }
  double p() const { return p_exact().to_double(); }
  double q() const { return q_exact().to_double(); }

  template <class S>
  HermitianMatrix<S> apply(const HermitianMatrix<S>& X) const {
    if (X.size() != n_ || X.algebra() != alg_) throw std::invalid_argument("operand shape mismatch");
    const S pc = scalar_from_ratio<S>(static_cast<long>(n_ - 2) * nn1(), 2);
    const S qc = scalar_from_int<S>(static_cast<long>(n_ - 1) * nn1());
    const S tc = scalar_from_int<S>(t_coeff());
    HermitianMatrix<S> out(alg_, n_);
    for (int l = 0; l < n_; ++l) {
      const S next = re(X.entry((l + 1) % n_, (l + 1) % n_));
      S diag = next - re(X.entry(l, l));
      if (l > 0) diag = diag * tc;
      out.set_entry(l, l, HurwitzScalar<S>::real(alg_, diag));
      for (int m = l + 1; m < n_; ++m) {
        const S& c = (l == 0) ? pc : qc;
        out.set_entry(l, m, -(X.entry(l, m) * c));
      }
    }
    return out;
  }

  ConeMap as_cone_map() const;

 private:
  ExoticGenerator(int n, Algebra alg) : n_(n), alg_(alg) {}
  long nn1() const { return static_cast<long>(n_) * n_ - n_ - 1; }

  int n_;
  Algebra alg_;
};

// Re(v^* B(uu^*) v) evaluated directly from the generator formula.
template <class S>
S quadratic_form_direct(const ExoticGenerator& B, const ConeVector<S>& u, const ConeVector<S>& v) {
  return re_vstar_mat_v(v, B.apply(rank_one(u, true)));
}

// The associative simplification valid when v^* u = 0:
// |u_2|^2|v_1|^2 - n(n-1)|u_1|^2|v_1|^2 + n(n-1)(n-2) sum |u_l|^2|v_l|^2
// + (n-1)^2 sum |u_{l+1}|^2|v_l|^2   (cyclic indices).
template <class S>
S quadratic_form_orthogonal(const ExoticGenerator& B, const ConeVector<S>& u,
                            const ConeVector<S>& v) {
  if (!is_associative(B.algebra()))
    throw std::invalid_argument("simplified branch needs an associative algebra");
  const int n = B.n();
  const long nl = n;
  S acc = norm2(u[1]) * norm2(v[0]);
  acc -= scalar_from_int<S>(nl * (nl - 1)) * norm2(u[0]) * norm2(v[0]);
  S sum1(0), sum2(0);
  for (int l = 1; l < n; ++l) {
    sum1 += norm2(u[l]) * norm2(v[l]);
    sum2 += norm2(u[(l + 1) % n]) * norm2(v[l]);
  }
  acc += scalar_from_int<S>(nl * (nl - 1) * (nl - 2)) * sum1;
  acc += scalar_from_int<S>((nl - 1) * (nl - 1)) * sum2;
  return acc;
}

// Quadratic form with automatic branch choice: the simplified expression for
// associative tags with v^*u = 0, the direct evaluation otherwise.
template <class S>
S quadratic_form(const ExoticGenerator& B, const ConeVector<S>& u, const ConeVector<S>& v) {
  if (is_associative(B.algebra())) {
    const HurwitzScalar<S> vu = vstar_dot(v, u);
    if constexpr (scalar_traits<S>::exact) {
      if (vu.is_zero()) return quadratic_form_orthogonal(B, u, v);
    } else {
      if (norm2(vu) <= 1e-24) return quadratic_form_orthogonal(B, u, v);
    }
  }
  return quadratic_form_direct(B, u, v);
}

// Y_u for u with all components nonzero: diagonal
// |u_2|^2/|u_1|^2 + r + t |u_{l+1}|^2/|u_l|^2, constant off-diagonal
// |u_2|^2/|u_1|^2 - s; real symmetric of size n-1.
template <class S>
std::vector<std::vector<S>> reduce_Yu(const ExoticGenerator& B, const ConeVector<S>& u) {
  const int n = B.n();
  if (u.size() != n) throw std::invalid_argument("vector size mismatch");
  for (int l = 0; l < n; ++l)
    if (scalar_traits<S>::is_zero(norm2(u[l])))
      throw std::domain_error("Y_u requires all components nonzero");
  const S rho = norm2(u[1]) / norm2(u[0]);
  const S rr = scalar_from_int<S>(B.r_coeff());
  const S ss = scalar_from_int<S>(B.s_coeff());
  const S tt = scalar_from_int<S>(B.t_coeff());
  std::vector<std::vector<S>> Y(static_cast<std::size_t>(n - 1),
                                std::vector<S>(static_cast<std::size_t>(n - 1), rho - ss));
  for (int l = 1; l < n; ++l) {
    const S ratio = norm2(u[(l + 1) % n]) / norm2(u[l]);
    Y[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(l - 1)] = rho + rr + tt * ratio;
  }
  return Y;
}

// det of the matrix with diagonal a and constant off-diagonal b:
// prod(a_l - b) + b * sum_l prod_{m != l} (a_m - b).
template <class S>
S det_pattern(const std::vector<S>& a, const S& b) {
  S prod(1);
  for (const auto& al : a) prod = prod * (al - b);
  S sum(0);
  for (std::size_t l = 0; l < a.size(); ++l) {
    S partial(1);
    for (std::size_t m = 0; m < a.size(); ++m)
      if (m != l) partial = partial * (a[m] - b);
    sum += partial;
  }
  return prod + b * sum;
}

// Criterion for sum 1/(a + c_l alpha_l) <= 1 over all positive alpha with
// prod alpha = 1: a >= n-1 and (c_1...c_n)^{1/n} >= n-a, stated exactly as
// a >= n-1 and (a >= n or prod c >= (n-a)^n).
template <class S>
bool ha_condition(const S& a, const std::vector<S>& c) {
  const long n = static_cast<long>(c.size());
  if (scalar_traits<S>::sign(a) <= 0) throw std::domain_error("ha_condition needs a > 0");
  for (const auto& cl : c)
    if (scalar_traits<S>::sign(cl) <= 0) throw std::domain_error("ha_condition needs c > 0");
  if (a < scalar_from_int<S>(n - 1)) return false;
  if (!(a < scalar_from_int<S>(n))) return true;
  S geo(1);
  for (const auto& cl : c) geo = geo * cl;
  S gap = scalar_from_int<S>(n) - a;
  S gap_pow(1);
  for (long k = 0; k < n; ++k) gap_pow = gap_pow * gap;
  return !(geo < gap_pow);
}

template <class S>
S ha_inequality(const S& a, const std::vector<S>& c, const std::vector<S>& alpha) {
  if (c.size() != alpha.size()) throw std::invalid_argument("size mismatch");
  if (scalar_traits<S>::sign(a) <= 0) throw std::domain_error("ha_inequality needs a > 0");
  S acc(0);
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (scalar_traits<S>::sign(c[l]) <= 0 || scalar_traits<S>::sign(alpha[l]) <= 0)
      throw std::domain_error("ha_inequality needs positive inputs");
    acc += S(1) / (a + c[l] * alpha[l]);
  }
  return acc;
}

enum class VerifyMode { Sampled, Exact };

struct VerifyCheck {
  std::string name;
  double min_value = 0.0;
  bool pass = false;
  long count = 0;
};

struct VerifyReport {
  std::string mode;
  int n = 0;
  Algebra alg = Algebra::R;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double eps = 0.0;
  double component_floor = 0.0;  // exact path stays away from the Y_u boundary
  double min_value = 0.0;
  bool pass = false;
  std::vector<VerifyCheck> checks;
  std::optional<PairWitness> witness;
};

// Cross-positivity verification. Sampled mode: minimum of the quadratic form
// over seeded orthogonal pairs. Exact mode: the structured reduction
// (submatrix bound, det Y_u via the determinant pattern, the z-substitution
// inequality) for associative tags, the three-case analysis for octonions.
VerifyReport verify_cross_positive(const ExoticGenerator& B, VerifyMode mode, std::size_t budget,
                                   std::uint64_t seed, double eps = 1e-9);

struct OrbitPoint {
  double t = 0.0;
  double min_eigenvalue = 0.0;
  bool cone_member = false;
};

// e^{tB} X0 along a nonnegative increasing t grid; X0 must be in the cone.
std::vector<OrbitPoint> semigroup_orbit(const ExoticGenerator& B,
                                        const HermitianMatrix<double>& X0,
                                        const std::vector<double>& t_grid);

}  // namespace conelab
