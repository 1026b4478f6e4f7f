#include "espectra/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "espectra/bareiss.hpp"
#include "espectra/error.hpp"

namespace espectra {

namespace {

std::vector<unsigned> degrees_of(const std::vector<MultiPoly>& forms) {
  std::vector<unsigned> d;
  d.reserve(forms.size());
  for (const auto& f : forms) {
    const auto hd = f.homogeneous_degree();
    if (!hd) {
      throw Error(f.is_zero() ? ErrorCode::InvalidArgument : ErrorCode::NotHomogeneous,
                  f.is_zero() ? "zero form has no degree" : "form is not homogeneous");
    }
    d.push_back(*hd);
  }
  return d;
}

std::size_t count_monomials(std::size_t n_vars, unsigned degree) {
  // C(degree + n_vars - 1, n_vars - 1), saturating well above the guardrail
  mpz_class c = binomial(degree + n_vars - 1, n_vars - 1);
  if (c > mpz_class(static_cast<unsigned long>(kMaxMacaulaySize) * 1000UL)) return kMaxMacaulaySize * 1000;
  return c.get_ui();
}

ExactScalar raw_ratio(const MacaulaySystem& sys) {
  const ExactScalar den = exact_determinant(sys.denominator_matrix());
  if (den.is_zero()) throw Error(ErrorCode::DenominatorSingular, "Macaulay denominator minor is singular");
  const ExactScalar num = exact_determinant(sys.numerator_matrix());
  return num / den;
}

int calibration_sign(const std::vector<unsigned>& degrees) {
  static std::mutex mu;
  static std::map<std::vector<unsigned>, int> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(degrees); it != cache.end()) return it->second;
  }
  const std::size_t m = degrees.size();
  std::vector<MultiPoly> unit;
  for (std::size_t i = 0; i < m; ++i) {
    Exponent e(m, 0);
    e[i] = degrees[i];
    unit.push_back(MultiPoly::monomial(e, ExactScalar(1)));
  }
  const ExactScalar v = raw_ratio(MacaulaySystem(unit));
  int sign = 0;
  if (v == ExactScalar(1)) sign = 1;
  if (v == ExactScalar(-1)) sign = -1;
  if (sign == 0) throw Error(ErrorCode::InvalidArgument, "unit system calibration is not +-1: " + v.to_string());
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(degrees, sign);
  return sign;
}

int permutation_sign(const std::vector<std::size_t>& perm) {
  int sign = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// forms composed with L U, both unitriangular with small integer entries
// depending on k, so det = 1.
std::vector<MultiPoly> shear(const std::vector<MultiPoly>& forms, unsigned k) {
  const std::size_t m = forms.size();
  auto entry = [k](std::size_t i, std::size_t j) { return static_cast<long>((3 * i + 5 * j + 7 * k) % 5) - 2; };
  std::vector<std::vector<long>> a(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t t = 0; t <= std::min(i, j); ++t) {
        const long l = t == i ? 1 : entry(i, t);
        const long u = t == j ? 1 : entry(j, t) + 1;
        a[i][j] += l * u;
      }
    }
  }
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < m; ++i) {
    MultiPoly row(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (a[i][j] != 0) row += MultiPoly::variable(m, j) * ExactScalar(a[i][j]);
    }
    images.push_back(std::move(row));
  }
  std::vector<MultiPoly> out;
  out.reserve(m);
  for (const auto& f : forms) out.push_back(f.substitute(images));
  return out;
}

ExactScalar perturbed_resultant(const std::vector<MultiPoly>& forms, const std::vector<unsigned>& degrees) {
  const std::size_t m = forms.size();
  // degree of Res(f_i + s x_i^d_i) in s is at most sum_i prod_{j != i} d_j
  unsigned long bound = 0;
  for (std::size_t i = 0; i < m; ++i) {
    unsigned long p = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) p *= degrees[j];
    }
    bound += p;
  }
  std::vector<ExactScalar> nodes;
  std::vector<ExactScalar> values;
  std::size_t skipped = 0;
  for (long s = 1; nodes.size() < bound + 1; ++s) {
    std::vector<MultiPoly> shifted = forms;
    for (std::size_t i = 0; i < m; ++i) {
      Exponent e(m, 0);
      e[i] = degrees[i];
      shifted[i].add_term(e, ExactScalar(s));
    }
    if (std::any_of(shifted.begin(), shifted.end(), [](const MultiPoly& f) { return f.is_zero(); })) {
      values.emplace_back();
      nodes.emplace_back(s);
      continue;
    }
    try {
      values.push_back(macaulay_resultant(MacaulaySystem(shifted)));
      nodes.emplace_back(s);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DenominatorSingular || ++skipped > 64) throw;
    }
  }
  return interpolate(nodes, values).coeff(0);
}

}  // namespace

MacaulaySystem::MacaulaySystem(std::vector<MultiPoly> forms) : forms_(std::move(forms)) {
  const std::size_t m = forms_.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "empty system");
  for (const auto& f : forms_) {
    if (f.n_vars() != m) throw Error(ErrorCode::InvalidArgument, "system must have as many forms as variables");
  }
  degrees_ = degrees_of(forms_);
  for (unsigned d : degrees_) {
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "forms must have positive degree");
  }
  critical_degree_ = 1;
  for (unsigned d : degrees_) critical_degree_ += d - 1;
  if (count_monomials(m, critical_degree_) > kMaxMacaulaySize) {
    throw Error(ErrorCode::MatrixTooLarge, "Macaulay matrix exceeds " + std::to_string(kMaxMacaulaySize) + " rows");
  }
  columns_ = monomials_of_degree(m, critical_degree_);
  row_forms_.reserve(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const Exponent& a = columns_[c];
    std::size_t first = m;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i] >= degrees_[i]) {
        if (first == m) first = i;
        ++hits;
      }
    }
    row_forms_.push_back(first);
    if (hits >= 2) minor_columns_.push_back(c);
  }
}

std::vector<std::vector<ExactScalar>> MacaulaySystem::numerator_matrix() const {
  const std::size_t n = columns_.size();
  std::map<Exponent, std::size_t, GrlexOrder> index;
  for (std::size_t c = 0; c < n; ++c) index.emplace(columns_[c], c);
  std::vector<std::vector<ExactScalar>> rows(n, std::vector<ExactScalar>(n));
  Exponent shifted(forms_.size());
  for (std::size_t r = 0; r < n; ++r) {
    const std::size_t i = row_forms_[r];
    Exponent mult = columns_[r];
    mult[i] -= degrees_[i];
    for (const auto& [e, c] : forms_[i].terms()) {
      for (std::size_t k = 0; k < e.size(); ++k) shifted[k] = mult[k] + e[k];
      rows[r][index.at(shifted)] = c;
    }
  }
  return rows;
}

std::vector<std::vector<ExactScalar>> MacaulaySystem::denominator_matrix() const {
  const auto full = numerator_matrix();
  std::vector<std::vector<ExactScalar>> rows;
  rows.reserve(minor_columns_.size());
  for (std::size_t r : minor_columns_) {
    std::vector<ExactScalar> row;
    row.reserve(minor_columns_.size());
    for (std::size_t c : minor_columns_) row.push_back(full[r][c]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ExactScalar sylvester_resultant(const BinaryForm& p, const BinaryForm& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::InvalidArgument, "sylvester resultant of a zero form");
  const unsigned a = p.degree();
  const unsigned b = q.degree();
  if (a == 0 || b == 0) throw Error(ErrorCode::InvalidArgument, "sylvester resultant needs positive degrees");
  const std::size_t n = a + b;
  std::vector<std::vector<ExactScalar>> rows(n, std::vector<ExactScalar>(n));
  for (unsigned r = 0; r < b; ++r) {
    for (unsigned k = 0; k <= a; ++k) rows[r][r + k] = p.coeff(k);
  }
  for (unsigned r = 0; r < a; ++r) {
    for (unsigned k = 0; k <= b; ++k) rows[b + r][r + k] = q.coeff(k);
  }
  return exact_determinant(rows);
}

ExactScalar sylvester_resultant(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::InvalidArgument, "sylvester resultant of a zero form");
  return sylvester_resultant(BinaryForm::from_multipoly(p), BinaryForm::from_multipoly(q));
}

ExactScalar macaulay_resultant(const MacaulaySystem& sys) {
  const ExactScalar v = raw_ratio(sys);
  return calibration_sign(sys.degrees()) == 1 ? v : -v;
}

ResultantValue resultant(const std::vector<MultiPoly>& forms) {
  if (std::any_of(forms.begin(), forms.end(), [](const MultiPoly& f) { return f.is_zero(); })) {
    return {ExactScalar(), true, "zero-form"};
  }
  const std::vector<unsigned> degrees = degrees_of(forms);
  const bool odd_product = std::all_of(degrees.begin(), degrees.end(), [](unsigned d) { return d % 2 == 1; });

  try {
    return {macaulay_resultant(MacaulaySystem(forms)), true, "macaulay"};
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DenominatorSingular) throw;
  }
  // A unimodular change of coordinates leaves Res unchanged and usually
  // makes a sparse system's minor regular.
  for (unsigned k = 1; k <= 4; ++k) {
    try {
      return {macaulay_resultant(MacaulaySystem(shear(forms, k))), true, "macaulay-sheared"};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DenominatorSingular) throw;
    }
  }

  std::vector<std::size_t> perm(forms.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t attempts = 0;
  while (attempts < 6 && std::next_permutation(perm.begin(), perm.end())) {
    std::vector<MultiPoly> permuted;
    permuted.reserve(forms.size());
    for (std::size_t k : perm) permuted.push_back(forms[k]);
    try {
      ExactScalar v = macaulay_resultant(MacaulaySystem(std::move(permuted)));
      // swapping two forms multiplies Res by (-1)^(d_1 ... d_m)
      if (odd_product && permutation_sign(perm) == -1) v = -v;
      return {std::move(v), true, "macaulay-permuted"};
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DenominatorSingular) throw;
    }
    ++attempts;
  }

  return {perturbed_resultant(forms, degrees), true, "perturbed"};
}

std::vector<MultiPoly> LambdaSystem::at(const ExactScalar& lambda) const {
  if (constant_part.size() != lambda_part.size()) throw Error(ErrorCode::InvalidArgument, "lambda system shape mismatch");
  std::vector<MultiPoly> out;
  out.reserve(size());
  for (std::size_t k = 0; k < size(); ++k) out.push_back(constant_part[k] + lambda_part[k] * lambda);
  return out;
}

std::vector<unsigned> LambdaSystem::degrees() const {
  std::vector<unsigned> d;
  for (std::size_t k = 0; k < size(); ++k) {
    const MultiPoly& p = constant_part[k].is_zero() ? lambda_part[k] : constant_part[k];
    const auto hd = p.homogeneous_degree();
    if (!hd) throw Error(ErrorCode::NotHomogeneous, "lambda system form is not homogeneous");
    d.push_back(*hd);
  }
  return d;
}

ExactScalar interpolation_node(std::size_t k) {
  const long half = static_cast<long>((k + 1) / 2);
  return ExactScalar(k % 2 == 1 ? half : -half);
}

UniPoly interpolate(const std::vector<ExactScalar>& nodes, const std::vector<ExactScalar>& values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) throw Error(ErrorCode::InvalidArgument, "interpolation size mismatch");
  if (n == 0) return {};
  std::vector<ExactScalar> dd = values;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
      if (i == j) break;
    }
  }
  UniPoly p = UniPoly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * UniPoly::linear_factor(nodes[i]) + UniPoly::constant(dd[i]);
  }
  return p;
}

unsigned configured_threads() {
  if (const char* env = std::getenv("ESPECTRA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), count);
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

ParametricResult parametric_resultant(const LambdaSystem& system, unsigned degree_bound,
                                      const ParametricOptions& options) {
  const std::size_t needed = degree_bound + 1 + (options.verify_extra_node ? 1 : 0);
  const unsigned threads = options.threads == 0 ? configured_threads() : options.threads;

  ParametricResult out;
  std::size_t next_node = 0;
  while (out.nodes.size() < needed) {
    const std::size_t batch = needed - out.nodes.size();
    std::vector<std::optional<ExactScalar>> values(batch);
    parallel_for(batch, threads, [&](std::size_t k) {
      try {
        values[k] = resultant(system.at(interpolation_node(next_node + k))).value;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::DenominatorSingular) throw;
      }
    });
    for (std::size_t k = 0; k < batch; ++k) {
      if (values[k]) {
        out.nodes.push_back(interpolation_node(next_node + k));
        out.values.push_back(std::move(*values[k]));
      } else if (++out.skipped_nodes > options.max_skipped_nodes) {
        throw Error(ErrorCode::ResampleExhausted, "too many singular interpolation nodes");
      }
    }
    next_node += batch;
  }

  const std::vector<ExactScalar> nodes(out.nodes.begin(), out.nodes.begin() + degree_bound + 1);
  const std::vector<ExactScalar> vals(out.values.begin(), out.values.begin() + degree_bound + 1);
  out.all_samples_zero = std::all_of(out.values.begin(), out.values.end(), [](const ExactScalar& v) { return v.is_zero(); });
  out.poly = interpolate(nodes, vals);
  if (options.verify_extra_node) {
    if (out.poly.evaluate(out.nodes.back()) != out.values.back()) {
      throw Error(ErrorCode::DegreeBoundTooSmall,
                  "interpolant of degree <= " + std::to_string(degree_bound) + " misses the verification node");
    }
  }
  return out;
}

}  // namespace espectra
