#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "espectra/echar.hpp"
#include "espectra/exact_scalar.hpp"
#include "espectra/tensor.hpp"

namespace espectra {

/// E-eigenpair: grad f(x) / d = lambda x with <x,x> = sum x_i^2 = 1.
struct EigenPair {
  std::complex<double> lambda;
  ComplexVector x;
  double residual = 0.0;
};

/// max_i |(1/d) df/dx_i(x) - lambda x_i|
double eigen_residual(const SymmetricTensor& f, std::complex<double> lambda, const ComplexVector& x);

/// Chooses the representative of {x, -x} whose first nonzero component has
/// positive real part (positive imaginary part on ties).  For odd d the
/// eigenvalue flips with x.
void canonicalize(EigenPair& pair, unsigned degree);

struct PairCheck {
  double norm_defect = 0.0;  // |<x,x> - 1|
  double residual = 0.0;
  double identity_defect = 0.0;  // |lambda - f(x)| / (1 + |lambda|)
  bool ok(double tol = 1e-8) const { return norm_defect <= tol && residual <= tol && identity_defect <= tol; }
};

PairCheck check_pair(const SymmetricTensor& f, const EigenPair& pair);

/// n = 1 via the roots of D(f) = x1 df/dx2 - x2 df/dx1.  One pair per
/// sign-class; throws IsotropicRoot when a root of D(f) is isotropic.
std::vector<EigenPair> binary_eigenpairs(const SymmetricTensor& f);

struct RecoveryOptions {
  int starts = 32;
  /// Batches of `starts` per root; batches after the first only run for
  /// roots that no pair covers yet.
  int rounds = 4;
  int iterations = 100;
  double damping = 0.5;
  double success_tol = 1e-10;
  double report_tol = 1e-8;
  std::uint64_t seed = 0x5eedULL;
  /// 0 = configured_threads()
  unsigned threads = 0;
};

struct Recovery {
  std::vector<EigenPair> pairs;
  /// Distinct roots of psi for which no start converged.
  std::vector<std::complex<double>> failed;
  /// Roots of psi, repeated by multiplicity.
  std::vector<std::complex<double>> roots;
};

/// Roots of psi by Aberth iteration, then x per root by damped Gauss-Newton
/// on (grad f(x)/d - lambda x, <x,x> - 1) from random starts and a joint
/// Newton polish in (x, lambda).  Pairs are deduplicated by sign-class.
Recovery eigenpairs_from_charpoly(const SymmetricTensor& f, const ECharPoly& psi, const RecoveryOptions& options = {});

struct FermatSpec {
  std::vector<ExactScalar> a;
  unsigned d = 3;

  SymmetricTensor tensor() const { return SymmetricTensor::fermat(a, d); }
};

/// Unnormalized vector y for one support subset and root-of-unity choice:
/// y_(k_l) = eps^(alpha_l) prod_(m != l) xi_(k_m) with xi_k = a_k^(1/(d-2))
/// (principal branch), eps = exp(2 pi i / (d-2)) and alpha_1 = 0.
struct FermatVector {
  std::uint64_t support = 0;
  ComplexVector y;
  /// prod of a_k over the support
  std::complex<double> prod_a;
};

/// All (support, arrangement) vectors, d >= 3.
std::vector<FermatVector> fermat_vectors(const FermatSpec& spec);

struct FermatEnumeration {
  std::vector<EigenPair> pairs;
  /// Support subsets (as bit masks) whose constructed vector was isotropic.
  std::vector<std::uint64_t> isotropic;
};

/// Closed-form eigenpairs of sum a_i x_i^d: one per support subset
/// k_1 < ... < k_j and per choice of (d-2)-th roots of unity on k_2..k_j.
FermatEnumeration fermat_eigenpairs(const FermatSpec& spec);

/// Product of one lambda per sign-class.
std::complex<double> product_of_eigenvalues(const std::vector<EigenPair>& pairs);

}  // namespace espectra
