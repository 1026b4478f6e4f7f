#include "espectra/bareiss.hpp"

#include <algorithm>

#include "espectra/error.hpp"

namespace espectra {

namespace {

mpz_class row_denominator_lcm(const std::vector<ExactScalar>& row) {
  mpz_class l(1);
  for (const auto& v : row) {
    if (v.is_zero()) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().get_den_mpz_t());
  }
  return l;
}

mpz_class scaled_integer(const mpq_class& q, const mpz_class& l) {
  return divide_exact(mpz_class(l * q.get_num()), q.get_den());
}

}  // namespace

ExactScalar exact_determinant(const std::vector<std::vector<ExactScalar>>& rows) {
  const std::size_t n = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  }
  if (n == 0) return ExactScalar(1);
  const bool real = std::all_of(rows.begin(), rows.end(), [](const auto& r) {
    return std::all_of(r.begin(), r.end(), [](const ExactScalar& v) { return v.is_real(); });
  });
  mpz_class scale(1);
  if (real) {
    SquareMatrix<mpz_class> m(n);
    for (std::size_t i = 0; i < n; ++i) {
      const mpz_class l = row_denominator_lcm(rows[i]);
      scale *= l;
      for (std::size_t j = 0; j < n; ++j) {
        if (!rows[i][j].is_zero()) m(i, j) = scaled_integer(rows[i][j].re(), l);
      }
    }
    const mpz_class det = bareiss_determinant(std::move(m));
    return ExactScalar(mpq_class(det, scale));
  }
  SquareMatrix<GaussianInteger> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const mpz_class l = row_denominator_lcm(rows[i]);
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) {
      const ExactScalar& v = rows[i][j];
      if (v.is_zero()) continue;
      m(i, j) = {scaled_integer(v.re(), l), scaled_integer(v.im(), l)};
    }
  }
  const GaussianInteger det = bareiss_determinant(std::move(m));
  return ExactScalar(mpq_class(det.re, scale), mpq_class(det.im, scale));
}

}  // namespace espectra
