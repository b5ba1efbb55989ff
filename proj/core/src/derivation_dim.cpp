#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "conelab/linmap.hpp"
#include "conelab/rational.hpp"

namespace conelab {

namespace {

// Incremental row-echelon rank over Z/p.
class ModRank {
 public:
  ModRank(std::uint64_t p, std::size_t cols) : p_(p), cols_(cols), pivot_(cols, -1) {}

  void add_row(std::vector<std::uint64_t> row) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (row[j] == 0) continue;
      const int pr = pivot_[j];
      if (pr >= 0) {
        // row -= row[j] * rows_[pr]
        const std::uint64_t f = p_ - row[j];
        const auto& pv = rows_[static_cast<std::size_t>(pr)];
        for (std::size_t k = j; k < cols_; ++k) {
          if (pv[k] == 0) continue;
          row[k] = (row[k] + f * pv[k]) % p_;
        }
      } else {
        const std::uint64_t inv = mod_inverse(row[j]);
        for (std::size_t k = j; k < cols_; ++k) row[k] = (row[k] * inv) % p_;
        pivot_[j] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
    }
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::uint64_t mod_inverse(std::uint64_t a) const {
    // Fermat: p is prime.
    std::uint64_t r = 1, b = a, e = p_ - 2;
    while (e) {
      if (e & 1) r = (r * b) % p_;
      b = (b * b) % p_;
      e >>= 1;
    }
    return r;
  }

  std::uint64_t p_;
  std::size_t cols_;
  std::vector<int> pivot_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

std::uint64_t to_mod(long v, std::uint64_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return static_cast<std::uint64_t>(r);
}

constexpr std::uint64_t kPrimes[2] = {2147483647ULL, 2147483629ULL};

// Rank of an integer matrix given as sparse rows, maximized over two primes.
std::size_t integer_rank(const std::vector<std::vector<std::pair<int, long>>>& rows,
                         std::size_t cols) {
  std::size_t best = 0;
  for (std::uint64_t p : kPrimes) {
    ModRank mr(p, cols);
    std::vector<std::uint64_t> dense(cols, 0);
    for (const auto& r : rows) {
      std::fill(dense.begin(), dense.end(), 0);
      for (const auto& [j, v] : r)
        dense[static_cast<std::size_t>(j)] = (dense[static_cast<std::size_t>(j)] + to_mod(v, p)) % p;
      bool any = false;
      for (std::uint64_t x : dense) any = any || (x != 0);
      if (any) mr.add_row(dense);
    }
    best = std::max(best, mr.rank());
  }
  return best;
}

// Leibniz system for derivations of the octonion algebra itself:
// unknowns D[b][c], the f_{b+1}-coefficient of D(f_{c+1}).
int octonion_derivation_dimension() {
  const int d = 8;
  auto var = [&](int b, int c) { return b * d + c; };
  std::vector<std::vector<std::pair<int, long>>> rows;
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const BasisProduct pij = basis_product(i, j);
      for (int b = 0; b < d; ++b) {
        std::vector<std::pair<int, long>> row;
        row.emplace_back(var(b, pij.index), static_cast<long>(pij.sign));
        for (int c = 0; c < d; ++c) {
          const BasisProduct cj = basis_product(c, j);
          if (cj.index == b) row.emplace_back(var(c, i), -static_cast<long>(cj.sign));
          const BasisProduct ic = basis_product(i, c);
          if (ic.index == b) row.emplace_back(var(c, j), -static_cast<long>(ic.sign));
        }
        rows.push_back(std::move(row));
      }
    }
  const std::size_t rank = integer_rank(rows, static_cast<std::size_t>(d) * d);
  return d * d - static_cast<int>(rank);
}

}  // namespace

int jordan_derivation_dimension(int n, Algebra alg) {
  // Unnormalized basis keeps the structure constants rational: E_ll, then
  // E_lm f_k + E_ml conj(f_k). Nullity is basis-independent.
  const int d = algebra_dim(alg);
  const int N = jordan_space_dim(n, alg);
  std::vector<HermitianMatrix<Rational>> basis;
  basis.reserve(static_cast<std::size_t>(N));
  for (int l = 0; l < n; ++l) basis.push_back(HermitianMatrix<Rational>::basis_diag(alg, n, l));
  std::vector<std::array<int, 3>> off_index;
  for (int l = 0; l < n; ++l)
    for (int m = l + 1; m < n; ++m)
      for (int k = 0; k < d; ++k) {
        basis.push_back(HermitianMatrix<Rational>::basis_offdiag(
            alg, n, l, m, HurwitzScalar<Rational>::unit(alg, k)));
        off_index.push_back({l, m, k});
      }

  // Expansion of a hermitian matrix in that basis.
  auto expand = [&](const HermitianMatrix<Rational>& X) {
    std::vector<Rational> c(static_cast<std::size_t>(N));
    int i = 0;
    for (int l = 0; l < n; ++l) c[static_cast<std::size_t>(i++)] = re(X.entry(l, l));
    for (const auto& [l, m, k] : off_index) c[static_cast<std::size_t>(i++)] = X.entry(l, m)[k];
    return c;
  };

  // Structure constants of the Jordan product, scaled by 4 to integers.
  std::vector<std::vector<std::vector<std::pair<int, long>>>> prod(
      static_cast<std::size_t>(N),
      std::vector<std::vector<std::pair<int, long>>>(static_cast<std::size_t>(N)));
  const Rational four(4);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      const auto c = expand(jordan_product(basis[static_cast<std::size_t>(a)],
                                           basis[static_cast<std::size_t>(b)]));
      std::vector<std::pair<int, long>> sparse;
      for (int r = 0; r < N; ++r) {
        const Rational scaled = c[static_cast<std::size_t>(r)] * four;
        if (scaled.is_zero()) continue;
        sparse.emplace_back(r, std::lround(scaled.to_double()));
      }
      prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = sparse;
      prod[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = std::move(sparse);
    }

  auto var = [&](int r, int c) { return r * N + c; };
  std::vector<std::vector<std::pair<int, long>>> rows;
  rows.reserve(static_cast<std::size_t>(N) * N * N / 2);
  for (int a = 0; a < N; ++a)
    for (int b = a; b < N; ++b) {
      for (int r = 0; r < N; ++r) {
        std::vector<std::pair<int, long>> row;
        for (const auto& [c, v] : prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          row.emplace_back(var(r, c), v);
        for (int c = 0; c < N; ++c) {
          for (const auto& [rr, v] : prod[static_cast<std::size_t>(c)][static_cast<std::size_t>(b)])
            if (rr == r) row.emplace_back(var(c, a), -v);
          for (const auto& [rr, v] : prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
            if (rr == r) row.emplace_back(var(c, b), -v);
        }
        rows.push_back(std::move(row));
      }
    }
  const std::size_t rank = integer_rank(rows, static_cast<std::size_t>(N) * N);
  return N * N - static_cast<int>(rank);
}

int derivation_dimension(DerivationSpace space) {
  switch (space) {
    case DerivationSpace::Octonions:
      return octonion_derivation_dimension();
    case DerivationSpace::AlbertAlgebra:
      return jordan_derivation_dimension(3, Algebra::O);
  }
  throw std::invalid_argument("unknown derivation space");
}

}  // namespace conelab
