#include "espectra/exact_scalar.hpp"

#include <cctype>
#include <sstream>

#include "espectra/error.hpp"

namespace espectra {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::DenominatorSingular: return "DENOMINATOR_SINGULAR";
    case ErrorCode::MatrixTooLarge: return "MATRIX_TOO_LARGE";
    case ErrorCode::ResampleExhausted: return "RESAMPLE_EXHAUSTED";
    case ErrorCode::DegreeBoundTooSmall: return "DEGREE_BOUND_TOO_SMALL";
    case ErrorCode::UnsupportedDimension: return "UNSUPPORTED_DIMENSION";
    case ErrorCode::DegenerateRestriction: return "DEGENERATE_RESTRICTION";
    case ErrorCode::IsotropicRoot: return "ISOTROPIC_ROOT";
    case ErrorCode::RecoveryFailed: return "RECOVERY_FAILED";
    case ErrorCode::ZeroCoefficient: return "ZERO_COEFFICIENT";
    case ErrorCode::NormZero: return "NORM_ZERO";
    case ErrorCode::HypothesisFailed: return "HYPOTHESIS_FAILED";
    case ErrorCode::RatioMismatch: return "RATIO_MISMATCH";
  }
  return "UNKNOWN";
}

mpq_class ExactScalar::parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  const auto slash = s.find('/');
  auto valid_int = [](std::string_view part, bool allow_sign) {
    std::size_t start = 0;
    if (allow_sign && !part.empty() && part.front() == '-') start = 1;
    if (part.size() <= start) return false;
    for (std::size_t k = start; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    }
    return true;
  };
  const std::string_view sv(s);
  const bool ok = slash == std::string::npos
                      ? valid_int(sv, true)
                      : valid_int(sv.substr(0, slash), true) && valid_int(sv.substr(slash + 1), false);
  if (!ok) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  mpq_class q;
  q.set_str(s, 10);
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

ExactScalar ExactScalar::parse(std::string_view re, std::string_view im) {
  return {parse_rational(re), parse_rational(im)};
}

ExactScalar ExactScalar::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return {re_ / n, -im_ / n};
}

ExactScalar ExactScalar::pow(unsigned e) const {
  ExactScalar result(1);
  ExactScalar base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

ExactScalar ExactScalar::from_string(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty() || s.back() != 'i') return {parse_rational(s), mpq_class(0)};
  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  const std::size_t split = s.find_last_of("+-");
  std::string re = "0";
  std::string im = s;
  if (split != std::string::npos && split > 0) {
    re = s.substr(0, split);
    im = s.substr(split);
  }
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_rational(re), parse_rational(im)};
}

std::string ExactScalar::to_string() const {
  if (is_real()) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  if (im_ == 1) {
    out += "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    out += im_.get_str() + "*i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.to_string(); }

GaussianInteger divide_exact(const GaussianInteger& a, const GaussianInteger& b) {
  if (sgn(b.im) == 0) {
    GaussianInteger q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return q;
  }
  const mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  GaussianInteger q;
  mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
  return q;
}

mpz_class divide_exact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace espectra
