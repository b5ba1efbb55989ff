#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "conelab/exotic.hpp"
#include "conelab/rational.hpp"

namespace conelab {

using HurQ = HurwitzScalar<Rational>;
using VecQ = ConeVector<Rational>;
using MatQ = DenseMatrix<Rational>;
using HermQ = HermitianMatrix<Rational>;
using JordanOp = std::function<HermQ(const HermQ&)>;

// Complex number over an exact scalar; the center of every Hurwitz algebra
// embeds here, which is all the Y_l determinant needs.
template <class S>
struct ComplexPair {
  S re = S(0);
  S im = S(0);
  ComplexPair() = default;
  ComplexPair(S r) : re(std::move(r)) {}
  ComplexPair(S r, S i) : re(std::move(r)), im(std::move(i)) {}
  friend ComplexPair operator+(const ComplexPair& a, const ComplexPair& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexPair operator-(const ComplexPair& a, const ComplexPair& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexPair operator*(const ComplexPair& a, const ComplexPair& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexPair operator-() const { return {-re, -im}; }
  ComplexPair conjugate() const { return {re, -im}; }
  S abs2() const { return re * re + im * im; }
  friend bool operator==(const ComplexPair& a, const ComplexPair& b) {
    return a.re == b.re && a.im == b.im;
  }
};

using CQ = ComplexPair<Rational>;

// Is M a (possibly zero) real multiple of a primitive idempotent:
// M^2 = Tr(M) M exactly.
bool is_idempotent_multiple(const HermQ& M);

// Forced value of v^* H u for any splitting A = lie part + positive part,
// assuming <uu^*, vv^*> = 0, Re(v^* A(uu^*) v) = 0, and that
// (v + u x)(v + u x)^* stays a multiple of an idempotent along the line.
// Associative tags: v^* A(uu^*) u / |u|^2. Octonions: real u, v only.
HurQ zeros_constraint(const JordanOp& A, const VecQ& u, const VecQ& v);

// The structured family: u_l = 1 for l outside S, u_l = x inside (S uses
// 0-based component indices drawn from {1, ..., n-1}), v = u - n e_1.
std::pair<VecQ, VecQ> structured_vectors(int n, Algebra alg, const std::set<int>& S,
                                         const HurQ& x);

// A linear relation sum coeff_{(row,col)} H_{row,col} = rhs with real
// rational coefficients (the unknowns are full algebra elements).
struct LinearRelation {
  std::vector<std::pair<std::pair<int, int>, Rational>> terms;
  HurQ rhs;
  std::string label;

  explicit LinearRelation(Algebra alg) : rhs(HurQ::zero(alg)) {}
  HurQ evaluate(const MatQ& H) const;
  void add_term(int row, int col, const Rational& c);
  LinearRelation scaled(const Rational& c) const;
  LinearRelation minus(const LinearRelation& o) const;
  // Drops terms whose entries are already forced to zero; records nothing.
  LinearRelation without_entries(const std::set<std::pair<int, int>>& zeroed) const;
};

struct ForcedHRelations {
  std::vector<LinearRelation> family_equations;   // raw (uSx)/(vSx) rows, x = -1
  std::vector<LinearRelation> off_diagonal_zero;  // h_{12} = ... = h_{n1} = 0
  LinearRelation h1;                              // the diagonal budget relation
  ForcedHRelations(Algebra alg) : h1(alg) {}
};

// Runs the x = -1 subset family and eliminates to the superdiagonal zeros
// plus the h_1 relation.
ForcedHRelations forced_h_relations(const ExoticGenerator& B);

// One certificate step with its replay status.
struct CertificateStep {
  std::string kind;
  std::string description;
  bool verified = false;
};

struct Certificate {
  int n = 0;
  Algebra alg = Algebra::R;
  std::vector<CertificateStep> steps;
  Rational residual;
  bool indecomposable = false;
  bool inconclusive = false;
  bool all_verified = false;
};

// The full constraint pipeline in exact arithmetic: column sparsity, the
// subset family, center constraints, the Y_l determinant forcing, and the
// final substitution leaving residual n - 2.
Certificate indecomposability_certificate(int n, Algebra alg);

// Replays a certificate against the generator: reruns the pipeline and
// compares every recorded step.
bool replay_certificate(const Certificate& cert);

// det Y_l under the h_1 relation, both via the closed form
// -n^{n-3} (n-1)^{n-3} (n-2)^{n-4} |h_l - h_1 + (n-2)(n^2-n+1)/2|^2
// and via explicit construction, conjugation by R, and the determinant
// pattern; throws if the two routes disagree or the h_1 relation fails.
// h holds n central scalars, l is the 1-based index in {2..n}.
Rational yl_determinant(const std::vector<CQ>& h, int l, int n);

// LP falsifier data.
struct LpPair {
  VecQ u, v;
};

struct LpConstraint {
  std::vector<Rational> coeffs;  // over flat H coordinates (row*n+col)*d + k
  Rational rhs;
  bool equality = false;
  std::string label;
};

struct FarkasWitness {
  std::vector<Rational> multipliers;  // aligned with the constraint list
};

struct LpReport {
  enum class Status { Feasible, Infeasible, NumericalFailure };
  Status status = Status::NumericalFailure;
  int n = 0;
  Algebra alg = Algebra::R;
  std::size_t constraint_count = 0;
  std::size_t equality_count = 0;
  bool structural_forcing_used = false;
  std::optional<MatQ> H;
  std::optional<FarkasWitness> witness;
  std::vector<LpConstraint> constraints;
  bool replay_ok = false;
};

// Linear feasibility over the Lie part H: pairs meeting the zero-pair
// preconditions contribute exact equality rows via zeros_constraint, all
// others the necessary inequality Re(v^*(A - H. - .H^*)(uu^*)v) >= 0.
// Infeasibility comes with a rational Farkas witness, feasibility with an
// explicit H; both are replay-verified. Associative algebras only.
//
// Pair constraints alone can never be jointly infeasible: H = -T I satisfies
// every sampled inequality once T is large (non-orthogonal pairs gain
// 2T(u^T v)^2, orthogonal ones do not see H). with_structural_forcing adds
// the determinant-forced equalities h_l = h_1 - (n-2)(n^2-n+1)/2, which are
// valid necessary conditions exactly when A is the structured generator;
// the flag verifies that structure (and the two-route determinant identity)
// before emitting anything, so other maps fall back to the pair LP.
LpReport attempt_decomposition_lp(const JordanOp& A, int n, Algebra alg,
                                  const std::vector<LpPair>& pairs,
                                  bool with_structural_forcing = false);

// Deterministic small-integer pairs for the LP (entries in [-4, 4]).
std::vector<LpPair> sample_lp_pairs(int n, Algebra alg, std::size_t count, std::uint64_t seed);

// The equality-bearing pair family used by the certificate, exposed so the
// LP can seed its constraint list the same way.
std::vector<LpPair> structured_pair_family(int n, Algebra alg);

}  // namespace conelab
