#include <doctest.h>

#include "conelab/hurwitz.hpp"
#include "oracles.hpp"

using namespace conelab;

namespace {
const Algebra kAll[] = {Algebra::R, Algebra::C, Algebra::H, Algebra::O};
using HurD = HurwitzScalar<double>;
using HurQ = HurwitzScalar<Rational>;
}  // namespace

TEST_CASE("basis products pinned by the rank-one remark matrix") {
  // f_2 f_3 = f_4, f_2 f_7 = -f_8, f_3 f_7 = -f_5 (1-based), plus f_k^2 = -1.
  CHECK(basis_product(1, 2).sign == 1);
  CHECK(basis_product(1, 2).index == 3);
  CHECK(basis_product(1, 6).sign == -1);
  CHECK(basis_product(1, 6).index == 7);
  CHECK(basis_product(2, 6).sign == -1);
  CHECK(basis_product(2, 6).index == 4);
  for (int k = 1; k < 8; ++k) {
    CHECK(basis_product(k, k).sign == -1);
    CHECK(basis_product(k, k).index == 0);
  }
  // quaternion triple i j = k, j k = i, k i = j
  CHECK(basis_product(2, 3).index == 1);
  CHECK(basis_product(2, 3).sign == 1);
  CHECK(basis_product(3, 1).index == 2);
  CHECK(basis_product(3, 1).sign == 1);
}

TEST_CASE("identity element and squares") {
  for (Algebra a : kAll) {
    SampleRng rng(42, static_cast<std::uint64_t>(a));
    const HurD one = HurD::one(a);
    const HurD x = oracle::random_scalar(a, rng);
    CHECK((one * x == x));
    CHECK((x * one == x));
    if (algebra_dim(a) > 1) {
      const HurD f2 = HurD::unit(a, 1);
      CHECK((f2 * f2 == -one));
      CHECK((conj(f2) == -f2));
    }
  }
}

TEST_CASE("algebra tag mismatch is rejected") {
  const HurD a = HurD::one(Algebra::C);
  const HurD b = HurD::one(Algebra::H);
  CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
  CHECK_THROWS_AS((void)inner(a, b), std::invalid_argument);
}

TEST_CASE("inverse: x * x^{-1} = 1, and inverse of zero throws") {
  HurQ x(Algebra::O);
  x[0] = Rational(1);
  x[1] = Rational(1);
  x[4] = Rational(1);  // 1 + f_2 + f_5
  CHECK(norm2(x) == Rational(3));
  CHECK((x * inverse(x) == HurQ::one(Algebra::O)));
  CHECK((inverse(x) * x == HurQ::one(Algebra::O)));
  CHECK_THROWS_AS((void)inverse(HurQ::zero(Algebra::O)), std::domain_error);
}

TEST_CASE("hurwitz identity suite on random tuples") {
  for (Algebra a : kAll) {
    for (int i = 0; i < 500; ++i) {
      SampleRng rng(7, static_cast<std::uint64_t>(i) * 4 + static_cast<std::uint64_t>(a));
      const HurD x = oracle::random_scalar(a, rng);
      const HurD y = oracle::random_scalar(a, rng);
      const HurD z = oracle::random_scalar(a, rng);
      const double tol = 1e-10;
      // x conj(x) = |x|^2 both ways
      CHECK(norm2((x * conj(x)) - HurD::real(a, norm2(x))) < tol);
      CHECK(norm2((conj(x) * x) - HurD::real(a, norm2(x))) < tol);
      // conj(xy) = conj(y) conj(x)
      CHECK(norm2(conj(x * y) - conj(y) * conj(x)) < tol);
      // <conj x, conj y> = <x, y>
      CHECK(inner(conj(x), conj(y)) == doctest::Approx(inner(x, y)).epsilon(1e-12));
      // <xy, z> = <y, conj(x) z> = <x, z conj(y)>
      CHECK(inner(x * y, z) == doctest::Approx(inner(y, conj(x) * z)).epsilon(1e-10));
      CHECK(inner(x * y, z) == doctest::Approx(inner(x, z * conj(y))).epsilon(1e-10));
      // x(conj(x) y) = |x|^2 y and (x conj(y)) y = |y|^2 x
      CHECK(norm2(x * (conj(x) * y) - y * norm2(x)) < tol * (1 + norm2(x) * norm2(y)));
      CHECK(norm2((x * conj(y)) * y - x * norm2(y)) < tol * (1 + norm2(x) * norm2(y)));
      // composition law |xy| = |x||y|
      CHECK(norm2(x * y) == doctest::Approx(norm2(x) * norm2(y)).epsilon(1e-10));
      // Re(xy) = Re(yx), Re((xy)z) = Re(x(yz))
      CHECK(re(x * y) == doctest::Approx(re(y * x)).epsilon(1e-12));
      CHECK(re((x * y) * z) == doctest::Approx(re(x * (y * z))).epsilon(1e-10));
    }
  }
}

TEST_CASE("exact identity suite on rational tuples") {
  for (Algebra a : kAll) {
    for (int i = 0; i < 40; ++i) {
      SampleRng rng(11, static_cast<std::uint64_t>(i) * 4 + static_cast<std::uint64_t>(a));
      const HurQ x = oracle::random_scalar_exact(a, rng);
      const HurQ y = oracle::random_scalar_exact(a, rng);
      const HurQ z = oracle::random_scalar_exact(a, rng);
      CHECK((x * conj(x) == HurQ::real(a, norm2(x))));
      CHECK((conj(x * y) == conj(y) * conj(x)));
      CHECK(inner(conj(x), conj(y)) == inner(x, y));
      CHECK(inner(x * y, z) == inner(y, conj(x) * z));
      CHECK(inner(x * y, z) == inner(x, z * conj(y)));
      CHECK((x * (conj(x) * y) == y * norm2(x)));
      CHECK(((x * conj(y)) * y == x * norm2(y)));
      CHECK(norm2(x * y) == norm2(x) * norm2(y));
      CHECK(re(x * y) == re(y * x));
      CHECK(re((x * y) * z) == re(x * (y * z)));
    }
  }
}

TEST_CASE("octonion specifics: Re(conj(x)((xy)z)), Moufang, alternativity") {
  const Algebra O = Algebra::O;
  for (int i = 0; i < 200; ++i) {
    SampleRng rng(13, static_cast<std::uint64_t>(i));
    const HurQ x = oracle::random_scalar_exact(O, rng);
    const HurQ y = oracle::random_scalar_exact(O, rng);
    const HurQ z = oracle::random_scalar_exact(O, rng);
    CHECK(re(conj(x) * ((x * y) * z)) == norm2(x) * re(y * z));
    // Moufang law (xy)(zx) = x((yz)x)
    CHECK(((x * y) * (z * x) == x * ((y * z) * x)));
    // alternative laws
    CHECK((x * (x * y) == (x * x) * y));
    CHECK(((y * x) * x == y * (x * x)));
  }
  // a specific nonzero associator: (f_2, f_3, f_5)
  const HurQ f2 = HurQ::unit(O, 1), f3 = HurQ::unit(O, 2), f5 = HurQ::unit(O, 4);
  CHECK(!associator(f2, f3, f5).is_zero());
}

TEST_CASE("associativity holds for R, C, H") {
  for (Algebra a : {Algebra::R, Algebra::C, Algebra::H}) {
    for (int i = 0; i < 100; ++i) {
      SampleRng rng(17, static_cast<std::uint64_t>(i) * 4 + static_cast<std::uint64_t>(a));
      const HurQ x = oracle::random_scalar_exact(a, rng);
      const HurQ y = oracle::random_scalar_exact(a, rng);
      const HurQ z = oracle::random_scalar_exact(a, rng);
      CHECK(associator(x, y, z).is_zero());
    }
  }
}

TEST_CASE("octonion derivations: D(1) = 0, Re D = 0, antisymmetry, Leibniz") {
  const Algebra O = Algebra::O;
  SampleRng rng(19, 0);
  const HurQ a = oracle::random_scalar_exact(O, rng);
  const HurQ b = oracle::random_scalar_exact(O, rng);
  const auto D = OctonionDerivation<Rational>::generator(a, b);

  CHECK(D.apply(HurQ::one(O)).is_zero());
  CHECK(OctonionDerivation<Rational>::generator(a, a).apply(b).is_zero());

  const auto Dff = OctonionDerivation<Rational>::generator(HurQ::unit(O, 1), HurQ::unit(O, 2));
  CHECK(re(Dff.apply(HurQ::unit(O, 3))) == Rational(0));

  // exact Leibniz on every basis pair, plus D(conj x) = -D(x) and Re D = 0
  for (int i = 0; i < 8; ++i) {
    const HurQ fi = HurQ::unit(O, i);
    CHECK(re(D.apply(fi)) == Rational(0));
    CHECK((D.apply(conj(fi)) == -D.apply(fi)));
    for (int j = 0; j < 8; ++j) {
      const HurQ fj = HurQ::unit(O, j);
      CHECK((D.apply(fi * fj) == D.apply(fi) * fj + fi * D.apply(fj)));
    }
  }
  CHECK_THROWS_AS((void)D.apply(HurQ::one(Algebra::H)), std::invalid_argument);
}

TEST_CASE("derivations applied to random octonions keep Leibniz") {
  const Algebra O = Algebra::O;
  for (int i = 0; i < 50; ++i) {
    SampleRng rng(23, static_cast<std::uint64_t>(i));
    OctonionDerivation<Rational> D;
    D.add_generator(oracle::random_scalar_exact(O, rng), oracle::random_scalar_exact(O, rng));
    D.add_generator(oracle::random_scalar_exact(O, rng), oracle::random_scalar_exact(O, rng));
    const HurQ x = oracle::random_scalar_exact(O, rng);
    const HurQ y = oracle::random_scalar_exact(O, rng);
    CHECK((D.apply(x * y) == D.apply(x) * y + x * D.apply(y)));
  }
}
