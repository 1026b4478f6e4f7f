#pragma once

#include <complex>
#include <optional>

#include <gmpxx.h>

#include "espectra/resultant.hpp"
#include "espectra/tensor.hpp"
#include "espectra/uni_poly.hpp"

namespace espectra {

enum class Parity { Even, Odd };

inline Parity parity_of(unsigned d) { return d % 2 == 0 ? Parity::Even : Parity::Odd; }
const char* to_string(Parity p);

/// Generic number of E-eigenvalues: n + 1 for d = 2, otherwise
/// ((d-1)^(n+1) - 1) / (d - 2).
mpz_class expected_eigenvalue_count(unsigned n, unsigned d);

/// F_i = (1/d) df/dx_i - lambda |x|^(d-2) x_i,  i = 1..n+1.
LambdaSystem build_even_system(const SymmetricTensor& f);

/// Variables (x_0, x_1..x_(n+1)):
/// x_0^2 - |x|^2 and (1/d) df/dx_i - lambda x_0^(d-2) x_i.
LambdaSystem build_odd_system(const SymmetricTensor& f);

/// build_even_system or build_odd_system by the parity of d.
LambdaSystem build_system(const SymmetricTensor& f);

struct ECharPoly {
  UniPoly psi;
  Parity parity = Parity::Even;
  /// N for even d, 2N for odd d.
  unsigned n_expected = 0;
  bool deficient = false;
  bool identically_zero = false;

  /// c_k, zero past the degree.
  ExactScalar coeff(unsigned k) const { return psi.coeff(k); }
};

ECharPoly e_char_poly(const SymmetricTensor& f, const ParametricOptions& options = {});

/// Wraps a polynomial obtained from some other system (e.g. a fixture in a
/// different coordinate system) with the flags e_char_poly would set.
ECharPoly make_echar(UniPoly psi, Parity parity, unsigned n_expected, bool all_samples_zero);

/// n = 1: grad f vanishes at (1, i) or (1, -i).  n = 2: the partials restricted
/// to the isotropic conic share a root.  Throws UnsupportedDimension otherwise.
bool is_irregular(const SymmetricTensor& f);

struct DeficitCertificate {
  ComplexVector x;
  std::complex<double> lambda;
  double residual = 0.0;
  /// Exact lambda when the isotropic point is rational over Q(i).
  std::optional<ExactScalar> exact_lambda;
};

/// An isotropic eigenvector (<x,x> = 0, |x|_inf = 1), if one exists.  n = 1
/// tests b_0 = f(1, i) and b_d = f(1, -i) exactly; n = 2 looks for a repeated
/// root of the conic restriction g(s, t) via gcd(dg/ds, dg/dt).
std::optional<DeficitCertificate> find_deficit_solution(const SymmetricTensor& f);

/// max(|grad f(x)/d - lambda x|_inf, |<x,x>|)
double deficit_residual(const SymmetricTensor& f, std::complex<double> lambda, const ComplexVector& x);

}  // namespace espectra
