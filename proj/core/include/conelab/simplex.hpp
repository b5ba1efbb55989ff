#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "conelab/scalar.hpp"

namespace conelab {

// Dense two-phase primal simplex with Bland's rule for
//   min c^T w  s.t.  A w = b,  w >= 0.
// Exact over Rational; the double instantiation uses a small pivot tolerance.
template <class S>
struct SimplexResult {
  enum class Status { Optimal, Infeasible, Unbounded, Failure };
  Status status = Status::Failure;
  std::vector<S> primal;  // length k
  std::vector<S> dual;    // length m, duals of the equality rows
  S objective = S(0);
  int iterations = 0;
};

template <class S>
SimplexResult<S> simplex_solve(std::vector<std::vector<S>> A, std::vector<S> b, std::vector<S> c,
                               int max_iterations = 100000) {
  const std::size_t m = A.size();
  const std::size_t k = m ? A[0].size() : c.size();
  if (b.size() != m || c.size() != k) throw std::invalid_argument("simplex shape mismatch");

  auto is_neg = [](const S& x) {
    if constexpr (scalar_traits<S>::exact)
      return scalar_traits<S>::sign(x) < 0;
    else
      return x < -1e-11;
  };
  auto is_pos = [&](const S& x) { return is_neg(-x); };

  std::vector<bool> flipped(m, false);
  for (std::size_t i = 0; i < m; ++i)
    if (is_neg(b[i])) {
      flipped[i] = true;
      b[i] = -b[i];
      for (auto& x : A[i]) x = -x;
    }

  const std::size_t total = k + m;
  std::vector<std::vector<S>> T(m, std::vector<S>(total, S(0)));
  std::vector<S> rhs = b;
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) T[i][j] = A[i][j];
    T[i][k + i] = S(1);
    basis[i] = k + i;
  }

  SimplexResult<S> res;
  auto pivot = [&](std::size_t pr, std::size_t pc) {
    const S piv = T[pr][pc];
    for (std::size_t j = 0; j < total; ++j) T[pr][j] = T[pr][j] / piv;
    rhs[pr] = rhs[pr] / piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr) continue;
      const S f = T[i][pc];
      if (scalar_traits<S>::is_zero(f)) continue;
      for (std::size_t j = 0; j < total; ++j) T[i][j] = T[i][j] - f * T[pr][j];
      rhs[i] = rhs[i] - f * rhs[pr];
    }
    basis[pr] = pc;
  };

  auto run_phase = [&](const std::vector<S>& cost, bool allow_artificial) -> bool {
    for (;;) {
      if (++res.iterations > max_iterations) return false;
      // Reduced costs with Bland's entering rule: smallest eligible index.
      std::size_t enter = total;
      for (std::size_t j = 0; j < total; ++j) {
        if (j >= k && !allow_artificial) break;
        bool basic = false;
        for (std::size_t i = 0; i < m; ++i) basic = basic || basis[i] == j;
        if (basic) continue;
        S red = cost[j];
        for (std::size_t i = 0; i < m; ++i)
          if (!scalar_traits<S>::is_zero(T[i][j])) red -= cost[basis[i]] * T[i][j];
        if (is_neg(red)) {
          enter = j;
          break;
        }
      }
      if (enter == total) return true;  // optimal for this phase
      std::size_t leave = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (!is_pos(T[i][enter])) continue;
        if (leave == m) {
          leave = i;
          continue;
        }
        const S lhs = rhs[i] * T[leave][enter];
        const S rhsv = rhs[leave] * T[i][enter];
        if (lhs < rhsv || (lhs == rhsv && basis[i] < basis[leave])) leave = i;
      }
      if (leave == m) {
        res.status = SimplexResult<S>::Status::Unbounded;
        return true;
      }
      pivot(leave, enter);
    }
  };

  // Phase 1: minimize the artificial sum.
  std::vector<S> c1(total, S(0));
  for (std::size_t j = k; j < total; ++j) c1[j] = S(1);
  res.status = SimplexResult<S>::Status::Optimal;
  if (!run_phase(c1, true)) {
    res.status = SimplexResult<S>::Status::Failure;
    return res;
  }
  if (res.status == SimplexResult<S>::Status::Unbounded) {
    res.status = SimplexResult<S>::Status::Failure;  // phase 1 is always bounded
    return res;
  }
  S art(0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= k) art += rhs[i];
  if (is_pos(art)) {
    res.status = SimplexResult<S>::Status::Infeasible;
    res.objective = art;
    return res;
  }
  // Drive lingering zero-level artificials out where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (!scalar_traits<S>::is_zero(T[i][j])) {
        pivot(i, j);
        break;
      }
    }
  }

  // Phase 2.
  std::vector<S> c2(total, S(0));
  for (std::size_t j = 0; j < k; ++j) c2[j] = c[j];
  res.status = SimplexResult<S>::Status::Optimal;
  if (!run_phase(c2, false)) {
    res.status = SimplexResult<S>::Status::Failure;
    return res;
  }
  if (res.status == SimplexResult<S>::Status::Unbounded) return res;

  res.primal.assign(k, S(0));
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < k) res.primal[basis[i]] = rhs[i];
  res.objective = S(0);
  for (std::size_t j = 0; j < k; ++j) res.objective += c[j] * res.primal[j];
  // Duals from the artificial block: B^{-1} e_i is that tableau column.
  res.dual.assign(m, S(0));
  for (std::size_t i = 0; i < m; ++i) {
    S y(0);
    for (std::size_t r = 0; r < m; ++r) {
      const std::size_t bj = basis[r];
      if (bj < k && !scalar_traits<S>::is_zero(T[r][k + i])) y += c[bj] * T[r][k + i];
    }
    res.dual[i] = flipped[i] ? -y : y;
  }
  return res;
}

}  // namespace conelab
