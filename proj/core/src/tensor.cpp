#include "espectra/tensor.hpp"

#include <cmath>

#include "espectra/error.hpp"

namespace espectra {

SymmetricTensor::SymmetricTensor(MultiPoly poly, unsigned degree) : poly_(std::move(poly)), degree_(degree) {
  if (poly_.n_vars() == 0) throw Error(ErrorCode::InvalidArgument, "tensor needs at least one variable");
  if (degree_ == 0) throw Error(ErrorCode::InvalidArgument, "tensor degree must be positive");
  for (const auto& [e, c] : poly_.terms()) {
    if (total_degree(e) != degree_) {
      throw Error(ErrorCode::NotHomogeneous,
                  "term of degree " + std::to_string(total_degree(e)) + " in a degree-" +
                      std::to_string(degree_) + " tensor");
    }
  }
}

SymmetricTensor SymmetricTensor::binary_binomial(const std::vector<ExactScalar>& a) {
  if (a.size() < 2) throw Error(ErrorCode::InvalidArgument, "binary form needs degree >= 1");
  const auto d = static_cast<unsigned>(a.size() - 1);
  MultiPoly p(2);
  for (unsigned j = 0; j <= d; ++j) p.add_term({d - j, j}, a[j] * ExactScalar(mpq_class(binomial(d, j))));
  return {std::move(p), d};
}

SymmetricTensor SymmetricTensor::fermat(const std::vector<ExactScalar>& a, unsigned degree) {
  MultiPoly p(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    Exponent e(a.size(), 0);
    e[k] = degree;
    p.add_term(e, a[k]);
  }
  return {std::move(p), degree};
}

SymmetricTensor SymmetricTensor::norm_power(std::size_t n_vars, unsigned degree) {
  if (degree % 2 != 0) throw Error(ErrorCode::InvalidArgument, "norm power needs even degree");
  return {MultiPoly::sum_of_squares(n_vars, 0, n_vars).pow(degree / 2), degree};
}

SymmetricTensor SymmetricTensor::linear_change(const std::vector<std::vector<ExactScalar>>& a) const {
  const std::size_t m = n_vars();
  if (a.size() != m) throw Error(ErrorCode::InvalidArgument, "linear change: matrix size mismatch");
  std::vector<MultiPoly> images;
  images.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (a[r].size() != m) throw Error(ErrorCode::InvalidArgument, "linear change: matrix must be square");
    MultiPoly row(m);
    for (std::size_t c = 0; c < m; ++c) {
      Exponent e(m, 0);
      e[c] = 1;
      row.add_term(e, a[r][c]);
    }
    images.push_back(std::move(row));
  }
  return {poly_.substitute(images), degree_};
}

std::vector<MultiPoly> gradient(const SymmetricTensor& f) {
  std::vector<MultiPoly> g;
  g.reserve(f.n_vars());
  for (std::size_t k = 0; k < f.n_vars(); ++k) g.push_back(f.poly().derivative(k));
  return g;
}

std::complex<double> evaluate(const MultiPoly& p, std::span<const std::complex<double>> point) {
  return p.evaluate(point);
}

double euler_check(const SymmetricTensor& f, std::span<const std::complex<double>> point) {
  const auto grad = gradient(f);
  std::complex<double> inner = 0.0;
  for (std::size_t k = 0; k < grad.size(); ++k) inner += grad[k].evaluate(point) * point[k];
  return std::abs(inner - static_cast<double>(f.degree()) * f.poly().evaluate(point));
}

std::vector<MultiPoly> conic_parametrization() {
  const MultiPoly s2 = MultiPoly::monomial({2, 0}, ExactScalar(1));
  const MultiPoly t2 = MultiPoly::monomial({0, 2}, ExactScalar(1));
  const MultiPoly st = MultiPoly::monomial({1, 1}, ExactScalar(2));
  return {s2 - t2, (s2 + t2) * ExactScalar::i(), st};
}

ComplexVector conic_point(std::complex<double> s, std::complex<double> t) {
  const std::complex<double> i(0.0, 1.0);
  return {s * s - t * t, i * (s * s + t * t), 2.0 * s * t};
}

BinaryForm restrict_to_conic(const MultiPoly& p, unsigned degree) {
  if (p.n_vars() != 3) throw Error(ErrorCode::UnsupportedDimension, "conic restriction needs n = 2");
  const MultiPoly g = p.substitute(conic_parametrization());
  std::vector<ExactScalar> c(2 * degree + 1);
  for (const auto& [e, v] : g.terms()) c[e[1]] = v;
  return {2 * degree, std::move(c)};
}

BinaryForm restrict_to_conic(const SymmetricTensor& f) { return restrict_to_conic(f.poly(), f.degree()); }

}  // namespace espectra
