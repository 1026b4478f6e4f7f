#pragma once

#include <cstdint>
#include <string>

#include "espectra/spectra.hpp"
#include "espectra/tensor.hpp"

namespace espectra::cli {

enum class GenerateKind { Random, Fermat, Tangent };

GenerateKind parse_kind(const std::string& text);

struct GenerateOptions {
  GenerateKind kind = GenerateKind::Random;
  unsigned n = 1;
  unsigned d = 3;
  std::uint64_t seed = 1;
  /// Gaussian-integer coefficients for kind = random.
  bool complex = false;
  /// Coefficients are drawn from [-range, range].
  int range = 9;
};

/// Deterministic for fixed options.
///  - random: integer coefficients; for n <= 2 resampled until f is regular,
///    non-deficient and has a nonzero gradient resultant.
///  - fermat: sum a_i x_i^d with nonzero integers a_i.
///  - tangent (n <= 2): n = 1 solves f(1, i) = 0 for the x1^d coefficient;
///    n = 2 builds L h + |x|^2 k with L the tangent line of the isotropic
///    conic at a rational point, so f|Q has a double root there.
SymmetricTensor generate_tensor(const GenerateOptions& options);

FermatSpec generate_fermat(unsigned n, unsigned d, std::uint64_t seed, int range = 9);

/// Whether the random-kind acceptance test holds for f.
bool is_generic(const SymmetricTensor& f);

}  // namespace espectra::cli
