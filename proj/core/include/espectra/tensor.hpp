#pragma once

#include <complex>
#include <span>
#include <vector>

#include "espectra/multi_poly.hpp"
#include "espectra/uni_poly.hpp"

namespace espectra {

using ComplexVector = std::vector<std::complex<double>>;

/// A symmetric tensor of order d on C^(n+1), stored as its homogeneous
/// polynomial f(x) = <T, x^d>.  Construction rejects non-homogeneous input.
class SymmetricTensor {
 public:
  SymmetricTensor(MultiPoly poly, unsigned degree);

  /// Binary form from coefficients a_0..a_d in the binomial convention
  /// f = sum_j C(d,j) a_j x1^(d-j) x2^j.
  static SymmetricTensor binary_binomial(const std::vector<ExactScalar>& a);
  /// a_1 x_1^d + ... + a_m x_m^d
  static SymmetricTensor fermat(const std::vector<ExactScalar>& a, unsigned degree);
  /// (x_1^2 + ... + x_m^2)^(d/2), d even.
  static SymmetricTensor norm_power(std::size_t n_vars, unsigned degree);

  const MultiPoly& poly() const { return poly_; }
  unsigned degree() const { return degree_; }
  /// Projective dimension n; the tensor lives on n + 1 variables.
  std::size_t n() const { return poly_.n_vars() - 1; }
  std::size_t n_vars() const { return poly_.n_vars(); }
  bool is_real() const { return poly_.is_real(); }

  SymmetricTensor scaled(const ExactScalar& t) const { return {poly_ * t, degree_}; }
  /// f(A x) for a square matrix A (row-major, exact entries).
  SymmetricTensor linear_change(const std::vector<std::vector<ExactScalar>>& a) const;

  friend bool operator==(const SymmetricTensor& a, const SymmetricTensor& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  MultiPoly poly_;
  unsigned degree_;
};

/// (df/dx_1, ..., df/dx_(n+1)); each component homogeneous of degree d - 1.
std::vector<MultiPoly> gradient(const SymmetricTensor& f);

std::complex<double> evaluate(const MultiPoly& p, std::span<const std::complex<double>> point);

/// |<grad f(x), x> - d f(x)|.
double euler_check(const SymmetricTensor& f, std::span<const std::complex<double>> point);

/// The conic parametrization (s^2 - t^2, i(s^2 + t^2), 2st) of the
/// isotropic quadric x1^2 + x2^2 + x3^2 = 0.
std::vector<MultiPoly> conic_parametrization();
ComplexVector conic_point(std::complex<double> s, std::complex<double> t);

/// g(s, t) = f(conic_parametrization(s, t)), a binary form of degree 2d.
/// Requires n = 2; any degree d >= 1 is accepted.
BinaryForm restrict_to_conic(const SymmetricTensor& f);
BinaryForm restrict_to_conic(const MultiPoly& p, unsigned degree);

}  // namespace espectra
