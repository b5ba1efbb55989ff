#include <doctest.h>

#include "conelab/exotic.hpp"
#include "conelab/linmap.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {
using HurD = HurwitzScalar<double>;
using HermD = HermitianMatrix<double>;
const Algebra kAll[] = {Algebra::R, Algebra::C, Algebra::H, Algebra::O};

DenseMatrix<double> random_square(Algebra a, int n, SampleRng& rng, bool real_trace = false) {
  DenseMatrix<double> H(a, n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      H.at(l, m) = oracle::random_scalar(a, rng, real_trace && l == m);
  return H;
}
}  // namespace

TEST_CASE("orthonormal basis dimensions and Gram matrix") {
  CHECK(jordan_basis(2, Algebra::R).size() == 3);
  CHECK(jordan_basis(3, Algebra::O).size() == 27);
  CHECK(jordan_space_dim(3, Algebra::O) == 27);
  CHECK(jordan_space_dim(6, Algebra::H) == 66);
  for (Algebra a : kAll) {
    const int n = (a == Algebra::O) ? 3 : 3;
    const auto basis = jordan_basis(n, a);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) {
        const double want = (i == j) ? 1.0 : 0.0;
        CHECK(trace_inner(basis[i], basis[j]) == doctest::Approx(want).epsilon(1e-12));
      }
  }
}

TEST_CASE("from_function and apply round-trip") {
  SampleRng rng(7, 0);
  for (Algebra a : kAll) {
    const int n = 3;
    // a linear map assembled from structure operations
    const auto W = oracle::random_hermitian(a, n, rng);
    auto f = [&](const HermD& X) { return jordan_product(W, X); };
    const ConeMap A = from_function(f, n, a);
    for (int i = 0; i < 20; ++i) {
      const auto X = oracle::random_hermitian(a, n, rng);
      const auto direct = f(X);
      const auto via = A.apply(X);
      CHECK(trace_inner(direct - via, direct - via) < 1e-24);
    }
    // identity and zero maps
    const ConeMap I = from_function([](const HermD& X) { return X; }, n, a);
    CHECK((I.matrix() - Eigen::MatrixXd::Identity(I.dim(), I.dim())).norm() < 1e-12);
    const ConeMap Z = from_function([&](const HermD& X) { return X - X; }, n, a);
    CHECK(Z.matrix().norm() == 0.0);
  }
}

TEST_CASE("quadratic representation") {
  // P(I) = id
  const auto I3 = HermD::identity(Algebra::R, 3);
  const ConeMap PI = quadratic_rep(I3);
  CHECK((PI.matrix() - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);

  // P(W) with W = diag(1,-1,1): an involution, P(W)^2 = id, and
  // P(W) e_1 e_1^* = W e_1 e_1^* W.
  HermD W(Algebra::R, 3);
  W.set_entry(0, 0, HurD::real(Algebra::R, 1.0));
  W.set_entry(1, 1, HurD::real(Algebra::R, -1.0));
  W.set_entry(2, 2, HurD::real(Algebra::R, 1.0));
  const ConeMap PW = quadratic_rep(W);
  CHECK(((PW * PW).matrix() - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
  const auto E11 = HermD::basis_diag(Algebra::R, 3, 0);
  const auto lhs = PW.apply(E11);
  const auto WEW = HermitianMatrix<double>::symmetrize(W.raw() * E11.raw() * W.raw());
  CHECK(trace_inner(lhs - WEW, lhs - WEW) < 1e-24);

  // P(diag(2,1,1)) e_1 e_1^* = 4 e_1 e_1^*
  HermD D2(Algebra::R, 3);
  D2.set_entry(0, 0, HurD::real(Algebra::R, 2.0));
  D2.set_entry(1, 1, HurD::real(Algebra::R, 1.0));
  D2.set_entry(2, 2, HurD::real(Algebra::R, 1.0));
  const auto img = quadratic_rep(D2).apply(E11);
  const auto want = E11.scaled(4.0);
  CHECK(trace_inner(img - want, img - want) < 1e-24);
}

TEST_CASE("operator exponential against the series oracle") {
  SampleRng rng(11, 0);
  for (Algebra a : {Algebra::R, Algebra::C}) {
    const int n = 3;
    ConeMap A(n, a);
    for (int i = 0; i < A.dim(); ++i)
      for (int j = 0; j < A.dim(); ++j) A.matrix()(i, j) = rng.gaussian();
    for (double t : {0.0, 0.3, 1.0, 4.0, -2.0}) {
      const ConeMap E = expm(A, t);
      const Eigen::MatrixXd want = oracle::expm_series(t * A.matrix());
      CHECK((E.matrix() - want).norm() < 1e-10 * std::max(1.0, want.norm()));
    }
    // semigroup law
    const ConeMap E1 = expm(A, 0.7), E2 = expm(A, 0.8), E3 = expm(A, 1.5);
    CHECK(((E1 * E2).matrix() - E3.matrix()).norm() < 1e-8 * E3.matrix().norm());
    // expm(0) = I
    CHECK((expm(A, 0.0).matrix() - Eigen::MatrixXd::Identity(A.dim(), A.dim())).norm() < 1e-14);
  }
}

TEST_CASE("exponential of a lie map is the matrix flow e^H X e^{H*}") {
  SampleRng rng(13, 1);
  const int n = 3;
  const auto H = random_square(Algebra::R, n, rng);
  const ConeMap A = lie_map(H);
  const ConeMap E = expm(A, 1.0);
  Eigen::MatrixXd Hm(n, n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) Hm(l, m) = re(H.at(l, m));
  const Eigen::MatrixXd eH = oracle::expm_series(Hm);
  for (int i = 0; i < 10; ++i) {
    const auto X = oracle::random_hermitian(Algebra::R, n, rng);
    Eigen::MatrixXd Xm(n, n);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) Xm(l, m) = re(X.entry(l, m));
    const Eigen::MatrixXd want = eH * Xm * eH.transpose();
    const auto got = E.apply(X);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m)
        CHECK(re(got.entry(l, m)) == doctest::Approx(want(l, m)).epsilon(1e-8));
  }
}

TEST_CASE("lie maps: examples and the group membership checker") {
  SampleRng rng(17, 0);
  // H = I gives A(X) = 2X
  const auto I = DenseMatrix<double>::identity(Algebra::R, 3);
  const ConeMap A2 = lie_map(I);
  CHECK((A2.matrix() - 2.0 * Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);

  // skew-hermitian H over C: a commutator, hence a Jordan derivation
  {
    DenseMatrix<double> Hs(Algebra::C, 3);
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m) Hs.at(l, m) = oracle::random_scalar(Algebra::C, rng);
    DenseMatrix<double> skew = Hs - Hs.adjoint();
    const ConeMap D = lie_map(skew);
    for (int i = 0; i < 10; ++i) {
      const auto X = oracle::random_hermitian(Algebra::C, 3, rng);
      const auto Y = oracle::random_hermitian(Algebra::C, 3, rng);
      const auto lhs = D.apply(jordan_product(X, Y));
      const auto rhs = jordan_product(D.apply(X), Y) + jordan_product(X, D.apply(Y));
      CHECK(trace_inner(lhs - rhs, lhs - rhs) < 1e-18);
    }
  }

  // octonion: zero H with a derivation term annihilates real matrices
  {
    OctonionDerivation<double> D;
    D.add_generator(HurD::unit(Algebra::O, 1), HurD::unit(Algebra::O, 2));
    const ConeMap AD = lie_map(DenseMatrix<double>(Algebra::O, 3), &D);
    HermD X(Algebra::O, 3);
    X.set_entry(0, 0, HurD::real(Algebra::O, 2.0));
    X.set_entry(0, 1, HurD::real(Algebra::O, -1.5));
    X.set_entry(1, 2, HurD::real(Algebra::O, 0.5));
    const auto img = AD.apply(X);
    CHECK(trace_inner(img, img) < 1e-20);
  }

  // octonion H must have a real trace
  {
    DenseMatrix<double> H(Algebra::O, 3);
    H.at(0, 0) = HurD::unit(Algebra::O, 3);
    CHECK_THROWS_AS((void)lie_map(H), std::invalid_argument);
  }

  // lie maps pass the zero-pairing check; sampled per algebra
  for (Algebra a : kAll) {
    const int n = 3;
    for (int trial = 0; trial < 5; ++trial) {
      const auto H = random_square(a, n, rng, a == Algebra::O);
      const auto rep = check_lie_condition(lie_map(H), 300, 555 + trial);
      CHECK(rep.pass);
    }
  }
}

TEST_CASE("derivation-form maps pass the zero-pairing check") {
  SampleRng rng(19, 2);
  for (Algebra a : kAll) {
    const int n = 3;
    const auto Y1 = oracle::random_hermitian(a, n, rng);
    const auto Z1 = oracle::random_hermitian(a, n, rng);
    const auto Wm = oracle::random_hermitian(a, n, rng);
    const ConeMap LY = l_op(Y1), LZ = l_op(Z1), LW = l_op(Wm);
    const ConeMap A(n, a, LY.matrix() * LZ.matrix() - LZ.matrix() * LY.matrix() + LW.matrix());
    const auto rep = check_lie_condition(A, 400, 777);
    CHECK(rep.pass);
  }
}

TEST_CASE("octonion derivation lift is a Jordan derivation") {
  SampleRng rng(23, 3);
  OctonionDerivation<Rational> D;
  D.add_generator(oracle::random_scalar_exact(Algebra::O, rng),
                  oracle::random_scalar_exact(Algebra::O, rng));
  for (int i = 0; i < 15; ++i) {
    const auto X = oracle::random_hermitian_exact(Algebra::O, 3, rng);
    const auto Y = oracle::random_hermitian_exact(Algebra::O, 3, rng);
    const auto lhs = apply_derivation_lift(D, jordan_product(X, Y));
    const auto rhs = jordan_product(apply_derivation_lift(D, X), Y) +
                     jordan_product(X, apply_derivation_lift(D, Y));
    CHECK((lhs == rhs));
  }
}

TEST_CASE("sv sampler: positive and negative controls") {
  const int n = 3;
  const Algebra a = Algebra::R;
  const ConeMap I = ConeMap::identity(n, a);
  CHECK(check_sv_condition(I, 500, 3).pass);

  // -id is in g(C): all orthogonal-pair values vanish, so the sampler cannot
  // reject it (min stays 0).
  const auto neg = check_sv_condition(I.scaled(-1.0), 500, 3);
  CHECK(neg.pass);
  CHECK(std::fabs(neg.min_value) < 1e-9);

  // (Tr X) I - 2X = ((Tr X) I - X) + lie_map(-I/2) lies in End + g, so it
  // passes; on orthogonal unit pairs its value is exactly 1.
  const ConeMap TrMinus2 = from_function(
      [&](const HermD& X) {
        return HermD::identity(a, n).scaled(X.trace()) - X.scaled(2.0);
      },
      n, a);
  const auto tr_rep = check_sv_condition(TrMinus2, 500, 3);
  CHECK(tr_rep.pass);
  CHECK(tr_rep.min_value == doctest::Approx(1.0).epsilon(1e-9));

  // genuinely failing: X -> -(Tr X) I
  const ConeMap NegTr = from_function(
      [&](const HermD& X) { return HermD::identity(a, n).scaled(-X.trace()); }, n, a);
  const auto bad = check_sv_condition(NegTr, 500, 3);
  CHECK(!bad.pass);
  CHECK(bad.witness.has_value());
  CHECK(bad.witness->value < -0.5);

  // and the negated structured generator
  const ConeMap B = ExoticGenerator::build(n, a).as_cone_map();
  CHECK(!check_sv_condition(B.scaled(-1.0), 2000, 3).pass);
}

TEST_CASE("lie checker rejects the structured generator with a witness") {
  for (Algebra a : kAll) {
    const ConeMap B = ExoticGenerator::build(3, a).as_cone_map();
    const auto rep = check_lie_condition(B, 2000, 9);
    CHECK(!rep.pass);
    CHECK(rep.witness.has_value());
    CHECK(std::fabs(rep.witness->value) > 1e-6);
  }
  const ConeMap Z(3, Algebra::R);
  CHECK(check_lie_condition(Z, 100, 1).pass);
}

TEST_CASE("one-parameter groups from lie maps preserve the cone both ways") {
  SampleRng rng(29, 4);
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::O}) {
    const int n = 3;
    const auto H = random_square(a, n, rng, a == Algebra::O);
    const ConeMap A = lie_map(H);
    for (double t : {-1.0, -0.1, 0.1, 1.0}) {
      const ConeMap E = expm(A, t);
      for (int i = 0; i < 25; ++i) {
        const auto X = oracle::random_cone_element(a, n, rng);
        const auto Y = E.apply(X);
        CHECK(min_jordan_eigenvalue(Y) > -1e-8 * std::max(1.0, std::sqrt(trace_inner(Y, Y))));
      }
    }
  }
}

TEST_CASE("derivation algebra dimensions") {
  CHECK(derivation_dimension(DerivationSpace::Octonions) == 14);
  CHECK(derivation_dimension(DerivationSpace::AlbertAlgebra) == 52);
  // analogous system for H_2(R): commutators with 2x2 skew matrices
  CHECK(jordan_derivation_dimension(2, Algebra::R) == 1);
  CHECK(jordan_derivation_dimension(3, Algebra::R) == 3);  // so(3)
}

TEST_CASE("derivation dimension sandwich: explicit independent derivations") {
  // Lower bound for Der(O): the 21 generators D_{f_i, f_j} span a space of
  // dimension exactly 14; each satisfies Leibniz exactly.
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) {
      const auto D = OctonionDerivation<Rational>::generator(
          HurwitzScalar<Rational>::unit(Algebra::O, i), HurwitzScalar<Rational>::unit(Algebra::O, j));
      std::vector<Rational> row;
      row.reserve(64);
      for (int c = 0; c < 8; ++c) {
        const auto img = D.apply(HurwitzScalar<Rational>::unit(Algebra::O, c));
        for (int b = 0; b < 8; ++b) row.push_back(img[b]);
      }
      rows.push_back(std::move(row));
    }
  CHECK(oracle::rational_rank(rows) == 14);
}
