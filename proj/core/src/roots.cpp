#include "espectra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "espectra/error.hpp"

namespace espectra {

namespace {

using cd = std::complex<double>;

// p(z) and p'(z) by Horner; coefficients in increasing powers.
void horner(std::span<const cd> c, cd z, cd& p, cd& dp) {
  p = 0.0;
  dp = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
}

}  // namespace

std::vector<cd> aberth_roots(std::span<const cd> coeffs, const RootOptions& options) {
  std::size_t hi = coeffs.size();
  while (hi > 0 && coeffs[hi - 1] == cd(0.0)) --hi;
  if (hi == 0) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  std::size_t lo = 0;
  while (coeffs[lo] == cd(0.0)) ++lo;

  std::vector<cd> roots(lo, cd(0.0));
  std::vector<cd> c(coeffs.begin() + static_cast<std::ptrdiff_t>(lo), coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  const cd lead = c.back();
  for (auto& v : c) v /= lead;
  if (n == 1) {
    roots.push_back(-c[0]);
    return roots;
  }

  // circle through the geometric mean of the root moduli, randomly rotated
  const double radius = std::pow(std::abs(c[0]), 1.0 / static_cast<double>(n));
  double bound = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    bound = std::max(bound, std::pow(std::abs(c[k]), 1.0 / static_cast<double>(n - k)));
  }
  const double r0 = radius > 0.0 ? radius : std::max(bound, 1.0);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double offset = angle(rng);
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = offset + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    z[k] = std::polar(r0, th);
  }

  std::vector<bool> done(n, false);
  for (int it = 0; it < options.max_iterations; ++it) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      cd p;
      cd dp;
      horner(c, z[k], p, dp);
      if (p == cd(0.0)) {
        done[k] = true;
        continue;
      }
      const cd ratio = dp == cd(0.0) ? cd(1e-3 * (1.0 + std::abs(z[k]))) : p / dp;
      cd sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const cd w = ratio / (1.0 - ratio * sum);
      z[k] -= w;
      if (std::abs(w) <= options.tolerance * std::max(1.0, std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

std::vector<cd> polynomial_roots(const UniPoly& p, const RootOptions& options) {
  const std::vector<cd> c = p.to_complex();
  std::vector<cd> roots = aberth_roots(c, options);
  const UniPoly dp = p.derivative();
  for (auto& z : roots) {
    const cd v = p.evaluate(z);
    const cd dv = dp.evaluate(z);
    if (dv == cd(0.0)) continue;
    const cd polished = z - v / dv;
    if (std::abs(p.evaluate(polished)) <= std::abs(v)) z = polished;
  }
  return roots;
}

}  // namespace espectra
