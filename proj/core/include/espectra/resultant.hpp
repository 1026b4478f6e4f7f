#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "espectra/exact_scalar.hpp"
#include "espectra/multi_poly.hpp"
#include "espectra/uni_poly.hpp"

namespace espectra {

/// Largest Macaulay matrix the engine will eliminate.
inline constexpr std::size_t kMaxMacaulaySize = 3000;

/// Square homogeneous system f_1..f_m in m variables together with the
/// classical Macaulay layout at the critical degree D = sum(d_i - 1) + 1.
///
/// Rows and columns are both indexed by the degree-D monomials in
/// GrlexOrder.  The row of monomial x^a multiplies f_i by x^a / x_i^(d_i),
/// where i is the first index with x_i^(d_i) | x^a, so the diagonal holds
/// the coefficient of x_i^(d_i) in f_i and the unit system x_i^(d_i) has
/// the identity matrix.  The denominator minor keeps the monomials
/// divisible by x_i^(d_i) for at least two indices.
class MacaulaySystem {
 public:
  explicit MacaulaySystem(std::vector<MultiPoly> forms);

  const std::vector<MultiPoly>& forms() const { return forms_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }
  unsigned critical_degree() const { return critical_degree_; }
  const std::vector<Exponent>& columns() const { return columns_; }
  /// Form used by each row (same indexing as columns()).
  const std::vector<std::size_t>& row_forms() const { return row_forms_; }
  /// Columns of the denominator minor M'.
  const std::vector<std::size_t>& minor_columns() const { return minor_columns_; }
  std::size_t size() const { return columns_.size(); }

  std::vector<std::vector<ExactScalar>> numerator_matrix() const;
  std::vector<std::vector<ExactScalar>> denominator_matrix() const;

 private:
  std::vector<MultiPoly> forms_;
  std::vector<unsigned> degrees_;
  unsigned critical_degree_ = 0;
  std::vector<Exponent> columns_;
  std::vector<std::size_t> row_forms_;
  std::vector<std::size_t> minor_columns_;
};

/// Resultant of two binary forms as the Sylvester determinant.
ExactScalar sylvester_resultant(const BinaryForm& p, const BinaryForm& q);
ExactScalar sylvester_resultant(const MultiPoly& p, const MultiPoly& q);

/// det(M) / det(M') with the sign calibrated on the unit system of the same
/// degree profile.  Throws Error(DenominatorSingular) when det(M') = 0.
ExactScalar macaulay_resultant(const MacaulaySystem& sys);

struct ResultantValue {
  ExactScalar value;
  bool sign_normalized = true;
  /// "zero-form", "macaulay", "macaulay-sheared", "macaulay-permuted" or
  /// "perturbed".
  std::string route;
};

/// Normalized resultant that never gives up on a singular denominator
/// minor: it retries after unimodular changes of coordinates, then after
/// reordering the forms (the sign change of a reordering is known), and
/// finally evaluates Res(f_i + s x_i^(d_i)) at several s and interpolates
/// to s = 0.
ResultantValue resultant(const std::vector<MultiPoly>& forms);

/// Forms whose coefficients are affine in a parameter:
/// form_k(lambda) = constant_part[k] + lambda * lambda_part[k].
struct LambdaSystem {
  std::vector<MultiPoly> constant_part;
  std::vector<MultiPoly> lambda_part;

  std::size_t size() const { return constant_part.size(); }
  std::vector<MultiPoly> at(const ExactScalar& lambda) const;
  /// Degree of each form; a zero constant part takes the lambda part's degree.
  std::vector<unsigned> degrees() const;
};

struct ParametricOptions {
  /// Re-evaluate one additional node and compare with the interpolant.
  bool verify_extra_node = true;
  /// Nodes that may be skipped after a singular denominator.
  std::size_t max_skipped_nodes = 32;
  /// 0 = read ESPECTRA_THREADS (default: hardware concurrency).
  unsigned threads = 0;
};

struct ParametricResult {
  UniPoly poly;
  std::vector<ExactScalar> nodes;
  std::vector<ExactScalar> values;
  std::size_t skipped_nodes = 0;
  bool all_samples_zero = false;
};

/// Interpolates lambda -> Res(system(lambda)) at degree_bound + 1 integer
/// nodes 0, 1, -1, 2, -2, ...  Throws Error(DegreeBoundTooSmall) when the
/// extra verification node disagrees with the interpolant.
ParametricResult parametric_resultant(const LambdaSystem& system, unsigned degree_bound,
                                      const ParametricOptions& options = {});

/// Unique polynomial of degree < nodes.size() through (nodes[k], values[k]).
UniPoly interpolate(const std::vector<ExactScalar>& nodes, const std::vector<ExactScalar>& values);

/// The k-th interpolation node: 0, 1, -1, 2, -2, ...
ExactScalar interpolation_node(std::size_t k);

/// Number of worker threads from ESPECTRA_THREADS, at least 1.
unsigned configured_threads();

/// Runs body(0..count-1) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace espectra
