#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "espectra/exact_scalar.hpp"

namespace espectra {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded order: lower total degree first; within one degree the
/// lexicographically larger exponent first (x1^d precedes x1^(d-1) x2).
struct GrlexOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of total degree `degree` in `n_vars` variables, in
/// GrlexOrder.
std::vector<Exponent> monomials_of_degree(std::size_t n_vars, unsigned degree);

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, ExactScalar, GrlexOrder>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t n_vars) : n_vars_(n_vars) {}

  static MultiPoly constant(std::size_t n_vars, const ExactScalar& c);
  static MultiPoly variable(std::size_t n_vars, std::size_t index);
  static MultiPoly monomial(Exponent exp, const ExactScalar& c);
  /// x_1^2 + ... + x_n^2 over the given variable range [first, first+count).
  static MultiPoly sum_of_squares(std::size_t n_vars, std::size_t first, std::size_t count);

  std::size_t n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  ExactScalar coeff(const Exponent& e) const;
  /// Adds c to the coefficient of e, dropping the term if it cancels.
  void add_term(const Exponent& e, const ExactScalar& c);

  /// Largest total degree of a term; -1 for the zero polynomial.
  int degree() const;
  /// Degree if every term has the same total degree (zero polynomial: nullopt).
  std::optional<unsigned> homogeneous_degree() const;
  bool is_homogeneous() const;
  bool is_real() const;

  MultiPoly derivative(std::size_t var) const;
  MultiPoly pow(unsigned e) const;
  /// Replaces variable k by images[k]; all images share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  /// Re-embeds into a ring with more variables, mapping variable k to
  /// variable offset + k.
  MultiPoly embed(std::size_t new_n_vars, std::size_t offset) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  ExactScalar evaluate(std::span<const ExactScalar> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const ExactScalar& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const ExactScalar& c) { return a *= c; }
  friend MultiPoly operator*(const ExactScalar& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::size_t n_vars_ = 0;
  TermMap terms_;
};

/// Compiled form for repeated double-precision evaluation.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const MultiPoly& p);

  std::complex<double> operator()(std::span<const std::complex<double>> point) const;
  std::size_t n_vars() const { return n_vars_; }

 private:
  std::size_t n_vars_ = 0;
  std::vector<std::complex<double>> coeffs_;
  std::vector<Exponent> exps_;
};

}  // namespace espectra
