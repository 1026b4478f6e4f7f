#include "espectra/echar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "espectra/error.hpp"
#include "espectra/roots.hpp"

namespace espectra {

namespace {

using cd = std::complex<double>;

ExactScalar inverse_degree(unsigned d) { return ExactScalar(mpq_class(1, d)); }

// Index of the largest |x_k|, first one on ties.
std::size_t dominant_index(const ComplexVector& x) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (std::abs(x[k]) > std::abs(x[best]) * (1.0 + 1e-12)) best = k;
  }
  return best;
}

std::size_t dominant_index(const std::vector<ExactScalar>& x) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < x.size(); ++k) {
    if (x[k].norm() > x[best].norm()) best = k;
  }
  return best;
}

// Certificate for an exact isotropic point: lambda from the dominant component.
DeficitCertificate exact_certificate(const SymmetricTensor& f, const std::vector<ExactScalar>& x) {
  const auto grad = gradient(f);
  const std::size_t k = dominant_index(x);
  const ExactScalar lambda = grad[k].evaluate(std::span<const ExactScalar>(x)) * inverse_degree(f.degree()) / x[k];
  DeficitCertificate cert;
  cert.x.reserve(x.size());
  for (const auto& v : x) cert.x.push_back((v / x[k]).to_complex());
  cert.exact_lambda = lambda / x[k].pow(f.degree() - 2);
  cert.lambda = cert.exact_lambda->to_complex();
  cert.residual = deficit_residual(f, cert.lambda, cert.x);
  return cert;
}

DeficitCertificate numeric_certificate(const SymmetricTensor& f, ComplexVector x) {
  const std::size_t k = dominant_index(x);
  const cd pivot = x[k];
  for (auto& v : x) v /= pivot;
  const auto grad = gradient(f);
  DeficitCertificate cert;
  cert.lambda = grad[k].evaluate(std::span<const cd>(x)) / static_cast<double>(f.degree());
  cert.x = std::move(x);
  cert.residual = deficit_residual(f, cert.lambda, cert.x);
  return cert;
}

std::vector<ExactScalar> exact_conic_point(const ExactScalar& s, const ExactScalar& t) {
  return {s * s - t * t, ExactScalar::i() * (s * s + t * t), ExactScalar(2) * s * t};
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

mpz_class expected_eigenvalue_count(unsigned n, unsigned d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "eigenvalue count needs d >= 2");
  if (d == 2) return mpz_class(n + 1);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), d - 1, n + 1);
  return (p - 1) / (d - 2);
}

LambdaSystem build_even_system(const SymmetricTensor& f) {
  const unsigned d = f.degree();
  if (d % 2 != 0 || d < 2) throw Error(ErrorCode::InvalidArgument, "even system needs even d >= 2");
  const std::size_t m = f.n_vars();
  const MultiPoly norm_power = MultiPoly::sum_of_squares(m, 0, m).pow((d - 2) / 2);
  const auto grad = gradient(f);
  LambdaSystem sys;
  for (std::size_t i = 0; i < m; ++i) {
    sys.constant_part.push_back(grad[i] * inverse_degree(d));
    sys.lambda_part.push_back(-(norm_power * MultiPoly::variable(m, i)));
  }
  return sys;
}

LambdaSystem build_odd_system(const SymmetricTensor& f) {
  const unsigned d = f.degree();
  if (d % 2 == 0 || d < 3) throw Error(ErrorCode::InvalidArgument, "odd system needs odd d >= 3");
  const std::size_t m = f.n_vars() + 1;
  const MultiPoly x0 = MultiPoly::variable(m, 0);
  const auto grad = gradient(f);
  LambdaSystem sys;
  sys.constant_part.push_back(x0 * x0 - MultiPoly::sum_of_squares(m, 1, m - 1));
  sys.lambda_part.emplace_back(m);
  const MultiPoly x0_power = x0.pow(d - 2);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    sys.constant_part.push_back(grad[i].embed(m, 1) * inverse_degree(d));
    sys.lambda_part.push_back(-(x0_power * MultiPoly::variable(m, i + 1)));
  }
  return sys;
}

LambdaSystem build_system(const SymmetricTensor& f) {
  return f.degree() % 2 == 0 ? build_even_system(f) : build_odd_system(f);
}

ECharPoly make_echar(UniPoly psi, Parity parity, unsigned n_expected, bool all_samples_zero) {
  ECharPoly out;
  out.deficient = psi.degree() < static_cast<int>(n_expected);
  out.identically_zero = all_samples_zero || psi.is_zero();
  out.psi = std::move(psi);
  out.parity = parity;
  out.n_expected = n_expected;
  return out;
}

ECharPoly e_char_poly(const SymmetricTensor& f, const ParametricOptions& options) {
  const unsigned d = f.degree();
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "E-characteristic polynomial needs d >= 2");
  const mpz_class count = expected_eigenvalue_count(static_cast<unsigned>(f.n()), d);
  const Parity parity = parity_of(d);
  const mpz_class bound = parity == Parity::Even ? count : 2 * count;
  if (!bound.fits_uint_p()) throw Error(ErrorCode::MatrixTooLarge, "degree bound " + bound.get_str() + " too large");
  ParametricResult res = parametric_resultant(build_system(f), static_cast<unsigned>(bound.get_ui()), options);
  return make_echar(std::move(res.poly), parity, static_cast<unsigned>(bound.get_ui()), res.all_samples_zero);
}

bool is_irregular(const SymmetricTensor& f) {
  const auto grad = gradient(f);
  if (f.n() == 1) {
    for (const ExactScalar& y : {ExactScalar::i(), -ExactScalar::i()}) {
      const std::vector<ExactScalar> p{ExactScalar(1), y};
      if (grad[0].evaluate(std::span<const ExactScalar>(p)).is_zero() &&
          grad[1].evaluate(std::span<const ExactScalar>(p)).is_zero()) {
        return true;
      }
    }
    return false;
  }
  if (f.n() != 2) throw Error(ErrorCode::UnsupportedDimension, "regularity test needs n <= 2");
  if (f.degree() == 1) return false;
  std::vector<BinaryForm> parts;
  for (const auto& g : grad) parts.push_back(restrict_to_conic(g, f.degree() - 1));
  if (std::all_of(parts.begin(), parts.end(), [](const BinaryForm& b) { return b.is_zero(); })) return true;
  BinaryForm common = gcd(gcd(parts[0], parts[1]), parts[2]);
  return common.degree() > 0;
}

double deficit_residual(const SymmetricTensor& f, cd lambda, const ComplexVector& x) {
  const auto grad = gradient(f);
  const double d = f.degree();
  double r = 0.0;
  cd q = 0.0;
  for (std::size_t k = 0; k < grad.size(); ++k) {
    r = std::max(r, std::abs(grad[k].evaluate(std::span<const cd>(x)) / d - lambda * x[k]));
    q += x[k] * x[k];
  }
  return std::max(r, std::abs(q));
}

std::optional<DeficitCertificate> find_deficit_solution(const SymmetricTensor& f) {
  if (f.n() == 1) {
    // b_0 = f(1, i), b_d = f(1, -i)
    for (const ExactScalar& y : {ExactScalar::i(), -ExactScalar::i()}) {
      const std::vector<ExactScalar> p{ExactScalar(1), y};
      if (f.poly().evaluate(std::span<const ExactScalar>(p)).is_zero()) return exact_certificate(f, p);
    }
    return std::nullopt;
  }
  if (f.n() != 2) throw Error(ErrorCode::UnsupportedDimension, "deficit search needs n <= 2");

  const BinaryForm g = restrict_to_conic(f);
  if (g.is_zero()) return exact_certificate(f, exact_conic_point(ExactScalar(1), ExactScalar(0)));
  const BinaryForm h = gcd(g.derivative_x1(), g.derivative_x2());
  if (h.degree() == 0) return std::nullopt;

  std::vector<DeficitCertificate> found;
  if (h.multiplicity_at_infinity() > 0) {
    found.push_back(exact_certificate(f, exact_conic_point(ExactScalar(0), ExactScalar(1))));
  }
  const UniPoly affine = h.dehomogenize();
  if (affine.degree() == 1) {
    const ExactScalar u = -affine.coeff(0) / affine.coeff(1);
    found.push_back(exact_certificate(f, exact_conic_point(ExactScalar(1), u)));
  } else if (affine.degree() > 1) {
    for (const cd u : polynomial_roots(affine)) found.push_back(numeric_certificate(f, conic_point(1.0, u)));
  }
  if (found.empty()) return std::nullopt;
  return *std::min_element(found.begin(), found.end(),
                           [](const auto& a, const auto& b) { return a.residual < b.residual; });
}

}  // namespace espectra
