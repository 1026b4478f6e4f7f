#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "espectra/cli/generate.hpp"
#include "espectra/tensor.hpp"
#include "espectra/tensor_json.hpp"

namespace espectra::test {

inline std::string fixture(const std::string& name) { return std::string(ESPECTRA_FIXTURE_DIR) + "/" + name; }

inline SymmetricTensor random_tensor(unsigned n, unsigned d, std::uint64_t seed, bool complex = false) {
  cli::GenerateOptions o;
  o.n = n;
  o.d = d;
  o.seed = seed;
  o.complex = complex;
  return cli::generate_tensor(o);
}

inline SymmetricTensor tangent_tensor(unsigned n, unsigned d, std::uint64_t seed) {
  cli::GenerateOptions o;
  o.kind = cli::GenerateKind::Tangent;
  o.n = n;
  o.d = d;
  o.seed = seed;
  return cli::generate_tensor(o);
}

inline SymmetricTensor paper_cubic() { return load_tensor(fixture("paper_cubic.json")); }

inline ExactScalar q(long num, long den = 1) { return ExactScalar(mpq_class(num, den)); }
inline ExactScalar gi(long re, long im) { return {mpq_class(re), mpq_class(im)}; }

/// Rotation matrix of the integer quaternion (w, x, y, z), exact over Q.
inline std::vector<std::vector<ExactScalar>> rational_rotation(long w, long x, long y, long z) {
  const mpq_class s(w * w + x * x + y * y + z * z);
  auto e = [&](long v) { return ExactScalar(mpq_class(v) / s); };
  return {{e(w * w + x * x - y * y - z * z), e(2 * (x * y - w * z)), e(2 * (x * z + w * y))},
          {e(2 * (x * y + w * z)), e(w * w - x * x + y * y - z * z), e(2 * (y * z - w * x))},
          {e(2 * (x * z - w * y)), e(2 * (y * z + w * x)), e(w * w - x * x - y * y + z * z)}};
}

inline std::vector<std::vector<ExactScalar>> random_rotation(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-5, 5);
  for (;;) {
    const long w = dist(rng), x = dist(rng), y = dist(rng), z = dist(rng);
    if (w * w + x * x + y * y + z * z > 0) return rational_rotation(w, x, y, z);
  }
}

/// Largest relative distance in a greedy nearest-neighbour matching of two
/// equal-size multisets; infinity on a size mismatch.
inline double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& v : a) {
    auto best = std::min_element(b.begin(), b.end(), [&](auto p, auto r) { return std::abs(p - v) < std::abs(r - v); });
    worst = std::max(worst, std::abs(*best - v) / (1.0 + std::abs(v)));
    b.erase(best);
  }
  return worst;
}

}  // namespace espectra::test
