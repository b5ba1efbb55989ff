#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace conelab {

// Horner evaluation of a monic polynomial given coefficients in descending
// powers, coeff[0] = 1.
inline double poly_eval(const std::vector<double>& coeff, double t) {
  double acc = 0.0;
  for (double c : coeff) acc = acc * t + c;
  return acc;
}

// All real roots of a monic polynomial whose roots are known to be real
// (characteristic polynomials of Jordan algebra elements). Recurses through
// the derivative: between consecutive critical points the polynomial is
// monotone, so bisection finds every root.
inline std::vector<double> real_roots_monic(const std::vector<double>& coeff) {
  const std::size_t deg = coeff.size() - 1;
  if (deg == 0) return {};
  if (deg == 1) return {-coeff[1]};

  double maxc = 0.0;
  for (std::size_t k = 1; k < coeff.size(); ++k) maxc = std::max(maxc, std::fabs(coeff[k]));
  const double bound = 1.0 + maxc;  // Cauchy bound

  std::vector<double> deriv(deg);
  for (std::size_t k = 0; k < deg; ++k)
    deriv[k] = coeff[k] * static_cast<double>(deg - k) / static_cast<double>(deg);
  const std::vector<double> crit = real_roots_monic(deriv);

  std::vector<double> cuts;
  cuts.push_back(-bound);
  for (double c : crit)
    if (c > -bound && c < bound) cuts.push_back(c);
  cuts.push_back(bound);
  std::sort(cuts.begin(), cuts.end());

  const double scale = std::max(1.0, maxc);
  std::vector<double> roots;
  auto push_root = [&](double r) {
    if (!roots.empty() && std::fabs(roots.back() - r) <= 1e-12 * std::max(1.0, std::fabs(r)))
      return;
    roots.push_back(r);
  };
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    double lo = cuts[i], hi = cuts[i + 1];
    double flo = poly_eval(coeff, lo), fhi = poly_eval(coeff, hi);
    // Clamp near-zero endpoint values: double roots sit exactly at critical
    // points and bisection cannot see a sign change across them.
    const double tiny = 1e-11 * scale;
    if (std::fabs(flo) <= tiny) {
      push_root(lo);
      continue;
    }
    if (std::fabs(fhi) <= tiny && i + 2 == cuts.size()) push_root(hi);
    if (flo * fhi > 0.0) continue;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = poly_eval(coeff, mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
      if (hi - lo <= 1e-15 * std::max(1.0, std::fabs(lo))) break;
    }
    push_root(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace conelab
