#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "espectra/exact_scalar.hpp"

namespace espectra {

/// Dense row-major square matrix over an exact ring.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

namespace detail {

// a <- (a * pivot - left * top) / prev, all exact.
inline void bareiss_update(mpz_class& a, const mpz_class& pivot, const mpz_class& left, const mpz_class& top,
                           const mpz_class& prev, mpz_class& scratch) {
  mpz_mul(scratch.get_mpz_t(), a.get_mpz_t(), pivot.get_mpz_t());
  mpz_submul(scratch.get_mpz_t(), left.get_mpz_t(), top.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
}

inline void bareiss_update(GaussianInteger& a, const GaussianInteger& pivot, const GaussianInteger& left,
                           const GaussianInteger& top, const GaussianInteger& prev, GaussianInteger& /*scratch*/) {
  a = divide_exact(a * pivot - left * top, prev);
}

inline void bareiss_scale(mpz_class& a, const mpz_class& pivot, const mpz_class& prev, mpz_class& scratch) {
  mpz_mul(scratch.get_mpz_t(), a.get_mpz_t(), pivot.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
}

inline void bareiss_scale(GaussianInteger& a, const GaussianInteger& pivot, const GaussianInteger& prev,
                          GaussianInteger& /*scratch*/) {
  a = divide_exact(a * pivot, prev);
}

inline GaussianInteger ring_one(const GaussianInteger*) { return {mpz_class(1), mpz_class(0)}; }
inline mpz_class ring_one(const mpz_class*) { return mpz_class(1); }

}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination.  Every intermediate
/// entry is a minor of the input, so all divisions are exact.
template <typename T>
T bareiss_determinant(SquareMatrix<T> m) {
  const std::size_t n = m.size();
  const T one = detail::ring_one(static_cast<const T*>(nullptr));
  if (n == 0) return one;
  T prev = one;
  T scratch;
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = n;
    for (std::size_t r = k; r < n; ++r) {
      if (!is_zero(m(r, k))) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == n) return T();
    if (pivot_row != k) {
      m.swap_rows(pivot_row, k);
      negate = !negate;
    }
    const T pivot = m(k, k);
    const bool trivial_scale = pivot == prev;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (is_zero(m(r, k))) {
        if (trivial_scale) continue;
        for (std::size_t c = k + 1; c < n; ++c) {
          if (!is_zero(m(r, c))) detail::bareiss_scale(m(r, c), pivot, prev, scratch);
        }
        continue;
      }
      const T left = m(r, k);
      for (std::size_t c = k + 1; c < n; ++c) {
        if (is_zero(m(k, c))) {
          if (!is_zero(m(r, c)) && !trivial_scale) detail::bareiss_scale(m(r, c), pivot, prev, scratch);
        } else {
          detail::bareiss_update(m(r, c), pivot, left, m(k, c), prev, scratch);
        }
      }
      m(r, k) = T();
    }
    prev = pivot;
  }
  T det = m(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Exact determinant of a Gaussian-rational matrix: each row is scaled to
/// Gaussian integers, eliminated fraction-free, and the row scalings are
/// divided back out.  Real input stays on the integer path.
ExactScalar exact_determinant(const std::vector<std::vector<ExactScalar>>& rows);

}  // namespace espectra
