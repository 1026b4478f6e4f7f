#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace espectra {

/// Gaussian rational a + b*i with a, b arbitrary-precision rationals.
/// Pure rationals are the im == 0 subring.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  ExactScalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static ExactScalar i() { return {mpq_class(0), mpq_class(1)}; }

  /// Parses "p/q" or an integer; throws Error(ParseError) on malformed input.
  static mpq_class parse_rational(std::string_view text);
  static ExactScalar parse(std::string_view re, std::string_view im = "0");
  /// Inverse of to_string: "3/2", "-5*i", "1+2*i", "i".
  static ExactScalar from_string(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2, i.e. |z|^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  ExactScalar inverse() const;
  ExactScalar pow(unsigned e) const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return {-re_, -im_}; }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Human-readable form such as "3/2", "-5*i", "1+2*i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

/// Gaussian integer; the ring in which fraction-free elimination runs.
struct GaussianInteger {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  friend GaussianInteger operator*(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianInteger operator-(const GaussianInteger& a, const GaussianInteger& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianInteger operator-(const GaussianInteger& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianInteger& a, const GaussianInteger& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// a / b where b divides a exactly in Z[i].
GaussianInteger divide_exact(const GaussianInteger& a, const GaussianInteger& b);
/// a / b where b divides a exactly in Z.
mpz_class divide_exact(const mpz_class& a, const mpz_class& b);

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline bool is_zero(const GaussianInteger& v) { return v.is_zero(); }

mpz_class binomial(unsigned long n, unsigned long k);

}  // namespace espectra
