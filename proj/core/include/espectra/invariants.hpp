#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "espectra/echar.hpp"
#include "espectra/exact_scalar.hpp"
#include "espectra/spectra.hpp"
#include "espectra/tensor.hpp"

namespace espectra {

struct InvariantReport {
  unsigned n = 0;
  unsigned d = 0;
  mpz_class N;
  mpz_class phi;
  mpz_class delta0;
  std::vector<mpz_class> alpha;
  std::vector<mpz_class> beta;
};

/// N, phi = (n+1)(d-1)^n - N, the alpha_k and beta_k sums and
/// delta0 = 2 sum_k alpha_k d^k.  Asserts alpha = beta and
/// 2 phi = (d-2) delta0 before returning.
InvariantReport invariant_report(unsigned n, unsigned d);

mpz_class alpha_coefficient(unsigned n, unsigned k);
mpz_class beta_coefficient(unsigned n, unsigned k);

struct BinaryInvariants {
  ExactScalar b0;
  ExactScalar bd;
  ExactScalar qdisc;
};

/// b_0 = f(1, i), b_d = f(1, -i), qdisc = b_0 b_d.
BinaryInvariants binary_q_discriminant(const SymmetricTensor& f);

/// Resultant of dg/ds and dg/dt for the conic restriction g of a ternary
/// form; vanishes iff g has a repeated root.  Throws DegenerateRestriction
/// when g vanishes identically.
ExactScalar ternary_q_discriminant_proxy(const SymmetricTensor& f);

/// Res((1/d) grad f).
ExactScalar gradient_resultant(const SymmetricTensor& f);

enum class Verdict { Pass, Fail, HypothesisFailed };
const char* to_string(Verdict v);

struct MainTheoremReport {
  unsigned n = 0;
  unsigned d = 0;
  Verdict verdict = Verdict::Fail;
  std::string detail;
  ECharPoly psi;
  std::optional<DeficitCertificate> certificate;
  bool irregular = false;

  ExactScalar c0;
  ExactScalar c_top;
  ExactScalar res;
  /// n = 1: qdisc; n = 2: the conic proxy; otherwise 1.
  ExactScalar disc;

  /// |(-1)^N c_0 / c_top|
  double lhs = 0.0;
  double rhs = 0.0;
  /// n = 1 or d = 2: of the product identity.  n = 2 ratio mode: of
  /// |c_0 / Res^k| = 1.
  double relative_error = 0.0;
  /// Whether the checked identity holds in exact arithmetic.
  bool exact_match = false;

  /// c_0 / Res (even d) or c_0 / Res^2 (odd d).
  ExactScalar constant_ratio;
  /// c_top / disc^p with p = (d-2)/2 (even) or d-2 (odd).
  ExactScalar leading_ratio;
};

/// Checks the product formula for the eigenvalues of f against its exact
/// characteristic polynomial.  n = 1 compares
/// |c_0 / c_top| |qdisc|^((d-2)/2) with |Res| (odd d: the squared version
/// against the doubled polynomial).  n = 2 reports the constant and leading
/// ratios and requires the proxy to be nonzero.  Deficient or irregular f
/// give Verdict::HypothesisFailed.
MainTheoremReport verify_main_theorem(const SymmetricTensor& f, const ParametricOptions& options = {});

/// c_0 / Res or c_0 / Res^2 for one sample.
ExactScalar constant_term_ratio(const SymmetricTensor& f, const ParametricOptions& options = {});

/// Common value of constant_term_ratio over the samples; throws
/// RatioMismatch naming the first disagreeing pair.
ExactScalar constant_term_ratio(const std::vector<SymmetricTensor>& samples, const ParametricOptions& options = {});

/// The product over support subsets and root-of-unity arrangements of
/// sum_l y_l^2 (subsets of size one contribute 1).
std::complex<double> fermat_h_polynomial(const FermatSpec& spec);

}  // namespace espectra
