#include "espectra/uni_poly.hpp"

#include <algorithm>
#include <sstream>

#include "espectra/error.hpp"

namespace espectra {

UniPoly::UniPoly(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactScalar UniPoly::evaluate(const ExactScalar& t) const {
  ExactScalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

std::complex<double> UniPoly::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> UniPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

UniPoly UniPoly::derivative() const {
  std::vector<ExactScalar> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * ExactScalar(static_cast<long>(k)));
  }
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const ExactScalar inv = leading().inverse();
  return *this * inv;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(UniPoly a, const ExactScalar& c) {
  for (auto& v : a.coeffs_) v *= c;
  a.trim();
  return a;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<ExactScalar> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  if (rem.size() <= dd) return {UniPoly(), *this};
  std::vector<ExactScalar> quo(rem.size() - dd);
  const ExactScalar lead_inv = divisor.leading().inverse();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    const ExactScalar q = rem[k] * lead_inv;
    quo[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].to_string() << ")";
    if (k > 0) os << "*" << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den(1);
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.im().get_den_mpz_t());
  }
  mpz_class num(0);
  for (const auto& c : p.coeffs()) {
    const mpq_class re = c.re() * den;
    const mpq_class im = c.im() * den;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), re.get_num_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), im.get_num_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  const ExactScalar& lead = p.leading();
  if (sgn(lead.re()) < 0 || (sgn(lead.re()) == 0 && sgn(lead.im()) < 0)) scale = -scale;
  return p * ExactScalar(scale);
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<UniPoly> squarefree_factors(const UniPoly& p) {
  std::vector<UniPoly> out;
  if (p.degree() <= 0) return out;
  const UniPoly dp = p.derivative();
  const UniPoly b = gcd(p, dp);
  UniPoly c = p.divmod(b).first;
  UniPoly d = dp.divmod(b).first - c.derivative();
  while (c.degree() > 0) {
    const UniPoly a = gcd(c, d);
    c = c.divmod(a).first;
    d = d.divmod(a).first - c.derivative();
    out.push_back(a);
  }
  return out;
}

BinaryForm::BinaryForm(unsigned degree, std::vector<ExactScalar> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > degree_ + 1U) {
    for (std::size_t k = degree_ + 1U; k < coeffs_.size(); ++k) {
      if (!coeffs_[k].is_zero()) throw Error(ErrorCode::InvalidArgument, "binary form: too many coefficients");
    }
  }
  coeffs_.resize(degree_ + 1U);
}

BinaryForm BinaryForm::from_multipoly(const MultiPoly& p) {
  if (p.n_vars() != 2) throw Error(ErrorCode::InvalidArgument, "binary form needs exactly two variables");
  const auto deg = p.homogeneous_degree();
  if (!p.is_zero() && !deg) throw Error(ErrorCode::NotHomogeneous, "binary form must be homogeneous");
  BinaryForm f(deg.value_or(0), {});
  for (const auto& [e, c] : p.terms()) f.coeffs_[e[1]] = c;
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ExactScalar& c) { return c.is_zero(); });
}

MultiPoly BinaryForm::to_multipoly() const {
  MultiPoly p(2);
  for (unsigned k = 0; k <= degree_; ++k) p.add_term({degree_ - k, k}, coeffs_[k]);
  return p;
}

UniPoly BinaryForm::dehomogenize() const { return UniPoly(coeffs_); }

unsigned BinaryForm::multiplicity_at_infinity() const {
  if (is_zero()) return degree_;
  const int d = dehomogenize().degree();
  return degree_ - static_cast<unsigned>(d);
}

BinaryForm BinaryForm::derivative_x1() const {
  if (degree_ == 0) return zero(0);
  std::vector<ExactScalar> c(degree_);
  for (unsigned k = 0; k < degree_; ++k) c[k] = coeffs_[k] * ExactScalar(static_cast<long>(degree_ - k));
  return {degree_ - 1, std::move(c)};
}

BinaryForm BinaryForm::derivative_x2() const {
  if (degree_ == 0) return zero(0);
  std::vector<ExactScalar> c(degree_);
  for (unsigned k = 1; k <= degree_; ++k) c[k - 1] = coeffs_[k] * ExactScalar(static_cast<long>(k));
  return {degree_ - 1, std::move(c)};
}

ExactScalar BinaryForm::evaluate(const ExactScalar& x1, const ExactScalar& x2) const {
  ExactScalar sum;
  for (unsigned k = 0; k <= degree_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    sum += coeffs_[k] * x1.pow(degree_ - k) * x2.pow(k);
  }
  return sum;
}

std::complex<double> BinaryForm::evaluate(std::complex<double> x1, std::complex<double> x2) const {
  std::complex<double> sum = 0.0;
  for (unsigned k = 0; k <= degree_; ++k) {
    sum += coeffs_[k].to_complex() * std::pow(x1, static_cast<int>(degree_ - k)) *
           std::pow(x2, static_cast<int>(k));
  }
  return sum;
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const UniPoly g = gcd(a.dehomogenize(), b.dehomogenize());
  const unsigned inf = std::min(a.multiplicity_at_infinity(), b.multiplicity_at_infinity());
  const auto fin = static_cast<unsigned>(g.degree());
  return BinaryForm(fin + inf, g.coeffs());
}

}  // namespace espectra
