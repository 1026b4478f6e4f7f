#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "espectra/exact_scalar.hpp"
#include "espectra/multi_poly.hpp"

namespace espectra {

/// Dense univariate polynomial; coeffs()[k] multiplies t^k and the last
/// stored coefficient is nonzero (the zero polynomial stores nothing).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ExactScalar> coeffs);

  static UniPoly constant(const ExactScalar& c) { return UniPoly({c}); }
  /// t - root
  static UniPoly linear_factor(const ExactScalar& root) { return UniPoly({-root, ExactScalar(1)}); }

  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  ExactScalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : ExactScalar(); }
  const ExactScalar& leading() const { return coeffs_.back(); }

  ExactScalar evaluate(const ExactScalar& t) const;
  std::complex<double> evaluate(std::complex<double> t) const;
  std::vector<std::complex<double>> to_complex() const;

  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const ExactScalar& c);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division over Q(i): returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<ExactScalar> coeffs_;
};

/// Rescales p by a rational so that the real and imaginary parts of all
/// coefficients are coprime integers and the leading coefficient's first
/// nonzero part is positive.  Returns the zero polynomial unchanged.
UniPoly primitive_part(const UniPoly& p);

/// Monic gcd over Q(i); gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Yun's square-free factorization: p = c * prod_k factors[k]^(k+1) with
/// monic, square-free, pairwise coprime factors (some may be constant 1).
std::vector<UniPoly> squarefree_factors(const UniPoly& p);

/// Binary form of fixed degree D: coeffs()[k] multiplies x1^(D-k) x2^k.
/// Unlike UniPoly the degree is part of the value, so roots at x1 = 0 are
/// represented by vanishing trailing coefficients.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(unsigned degree, std::vector<ExactScalar> coeffs);

  static BinaryForm from_multipoly(const MultiPoly& p);
  static BinaryForm zero(unsigned degree) { return BinaryForm(degree, {}); }

  unsigned degree() const { return degree_; }
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  ExactScalar coeff(unsigned k) const { return k <= degree_ ? coeffs_[k] : ExactScalar(); }
  bool is_zero() const;

  MultiPoly to_multipoly() const;
  /// Dehomogenization at x1 = 1, as a polynomial in u = x2 / x1.
  UniPoly dehomogenize() const;
  /// Multiplicity of the root (x1 : x2) = (0 : 1).
  unsigned multiplicity_at_infinity() const;

  BinaryForm derivative_x1() const;
  BinaryForm derivative_x2() const;

  ExactScalar evaluate(const ExactScalar& x1, const ExactScalar& x2) const;
  std::complex<double> evaluate(std::complex<double> x1, std::complex<double> x2) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  unsigned degree_ = 0;
  std::vector<ExactScalar> coeffs_;  // size degree_ + 1
};

/// Greatest common divisor of binary forms, normalized so that its
/// dehomogenized part is monic; a zero input is ignored.  The result has
/// positive degree iff the inputs share a projective root.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

}  // namespace espectra
