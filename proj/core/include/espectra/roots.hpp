#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "espectra/uni_poly.hpp"

namespace espectra {

struct RootOptions {
  int max_iterations = 200;
  double tolerance = 1e-14;
  std::uint64_t seed = 0x5eedULL;
};

/// All complex roots of sum_k coeffs[k] t^k by Aberth-Ehrlich simultaneous
/// iteration from a randomly rotated circle.  Leading zeros are ignored;
/// exact zero roots are split off first.
std::vector<std::complex<double>> aberth_roots(std::span<const std::complex<double>> coeffs,
                                               const RootOptions& options = {});

/// Roots of an exact polynomial: Aberth on the double image of the
/// coefficients, then one Newton step per root against the same polynomial.
std::vector<std::complex<double>> polynomial_roots(const UniPoly& p, const RootOptions& options = {});

}  // namespace espectra
