#include "espectra/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "espectra/error.hpp"

namespace espectra {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool GrlexOrder::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void enumerate(std::size_t pos, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[pos] = k;
    enumerate(pos + 1, remaining - k, cur, out);
  }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t n_vars, unsigned degree) {
  std::vector<Exponent> out;
  if (n_vars == 0) return out;
  Exponent cur(n_vars, 0);
  enumerate(0, degree, cur, out);
  return out;
}

MultiPoly MultiPoly::constant(std::size_t n_vars, const ExactScalar& c) {
  MultiPoly p(n_vars);
  p.add_term(Exponent(n_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Exponent e(n_vars, 0);
  e[index] = 1;
  return monomial(std::move(e), ExactScalar(1));
}

MultiPoly MultiPoly::monomial(Exponent exp, const ExactScalar& c) {
  MultiPoly p(exp.size());
  p.add_term(exp, c);
  return p;
}

MultiPoly MultiPoly::sum_of_squares(std::size_t n_vars, std::size_t first, std::size_t count) {
  MultiPoly p(n_vars);
  for (std::size_t k = first; k < first + count; ++k) {
    Exponent e(n_vars, 0);
    e[k] = 2;
    p.add_term(e, ExactScalar(1));
  }
  return p;
}

ExactScalar MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ExactScalar() : it->second;
}

void MultiPoly::add_term(const Exponent& e, const ExactScalar& c) {
  if (e.size() != n_vars_) throw Error(ErrorCode::InvalidArgument, "exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

std::optional<unsigned> MultiPoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const unsigned lo = total_degree(terms_.begin()->first);
  const unsigned hi = total_degree(terms_.rbegin()->first);
  if (lo != hi) return std::nullopt;
  return lo;
}

bool MultiPoly::is_homogeneous() const { return terms_.empty() || homogeneous_degree().has_value(); }

bool MultiPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= n_vars_) throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  MultiPoly d(n_vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent de = e;
    --de[var];
    d.add_term(de, c * ExactScalar(static_cast<long>(e[var])));
  }
  return d;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(n_vars_, ExactScalar(1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != n_vars_) throw Error(ErrorCode::InvalidArgument, "substitute: image count mismatch");
  const std::size_t target_vars = images.empty() ? 0 : images.front().n_vars();
  // powers[k][j] = images[k]^j, grown lazily
  std::vector<std::vector<MultiPoly>> powers(n_vars_);
  for (std::size_t k = 0; k < n_vars_; ++k) {
    powers[k].push_back(constant(target_vars, ExactScalar(1)));
  }
  auto power = [&](std::size_t k, unsigned j) -> const MultiPoly& {
    while (powers[k].size() <= j) powers[k].push_back(powers[k].back() * images[k]);
    return powers[k][j];
  };
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t k = 0; k < n_vars_; ++k) {
      if (e[k] != 0) term = term * power(k, e[k]);
    }
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::embed(std::size_t new_n_vars, std::size_t offset) const {
  if (offset + n_vars_ > new_n_vars) throw Error(ErrorCode::InvalidArgument, "embed: target ring too small");
  MultiPoly out(new_n_vars);
  for (const auto& [e, c] : terms_) {
    Exponent ne(new_n_vars, 0);
    std::copy(e.begin(), e.end(), ne.begin() + static_cast<std::ptrdiff_t>(offset));
    out.add_term(ne, c);
  }
  return out;
}

std::complex<double> MultiPoly::evaluate(std::span<const std::complex<double>> point) const {
  return NumericPoly(*this)(point);
}

ExactScalar MultiPoly::evaluate(std::span<const ExactScalar> point) const {
  if (point.size() != n_vars_) throw Error(ErrorCode::InvalidArgument, "evaluate: point dimension mismatch");
  ExactScalar sum;
  for (const auto& [e, c] : terms_) {
    ExactScalar term = c;
    for (std::size_t k = 0; k < n_vars_; ++k) {
      if (e[k] != 0) term *= point[k].pow(e[k]);
    }
    sum += term;
  }
  return sum;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.n_vars_ != n_vars_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.n_vars_ != n_vars_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.n_vars_ != b.n_vars_) throw Error(ErrorCode::InvalidArgument, "variable count mismatch");
  MultiPoly out(a.n_vars_);
  Exponent e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os.str();
}

NumericPoly::NumericPoly(const MultiPoly& p) : n_vars_(p.n_vars()) {
  coeffs_.reserve(p.size());
  exps_.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    coeffs_.push_back(c.to_complex());
    exps_.push_back(e);
  }
}

std::complex<double> NumericPoly::operator()(std::span<const std::complex<double>> point) const {
  if (point.size() != n_vars_) throw Error(ErrorCode::InvalidArgument, "evaluate: point dimension mismatch");
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    std::complex<double> term = coeffs_[t];
    const Exponent& e = exps_[t];
    for (std::size_t k = 0; k < n_vars_; ++k) {
      for (unsigned j = 0; j < e[k]; ++j) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

}  // namespace espectra
