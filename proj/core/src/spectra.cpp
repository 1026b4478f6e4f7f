#include "espectra/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "espectra/error.hpp"
#include "espectra/resultant.hpp"
#include "espectra/roots.hpp"

namespace espectra {

namespace {

using cd = std::complex<double>;

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

cd bilinear(const ComplexVector& x) {
  cd s = 0.0;
  for (const cd v : x) s += v * v;
  return s;
}

bool same_class(const EigenPair& a, const EigenPair& b) {
  return std::abs(a.lambda - b.lambda) <= 1e-6 * (1.0 + std::abs(a.lambda)) && max_abs_diff(a.x, b.x) <= 1e-6;
}

void insert_unique(std::vector<EigenPair>& pairs, EigenPair p) {
  for (const auto& q : pairs) {
    if (same_class(p, q)) return;
  }
  pairs.push_back(std::move(p));
}

// (1/d) grad f and its Jacobian, compiled for repeated evaluation.
class EigenEquations {
 public:
  explicit EigenEquations(const SymmetricTensor& f) : m_(f.n_vars()) {
    const ExactScalar inv(mpq_class(1, f.degree()));
    const auto grad = gradient(f);
    for (std::size_t i = 0; i < m_; ++i) {
      const MultiPoly gi = grad[i] * inv;
      grad_.emplace_back(gi);
      for (std::size_t j = 0; j < m_; ++j) hess_.emplace_back(gi.derivative(j));
    }
  }

  std::size_t size() const { return m_; }

  // Residual of the n+2 equations at (x, lambda).
  Eigen::VectorXcd residual(const Eigen::VectorXcd& x, cd lambda) const {
    Eigen::VectorXcd r(m_ + 1);
    const std::span<const cd> pt(x.data(), m_);
    for (std::size_t i = 0; i < m_; ++i) r(i) = grad_[i](pt) - lambda * x(i);
    r(m_) = x.cwiseProduct(x).sum() - cd(1.0);
    return r;
  }

  Eigen::MatrixXcd jacobian_x(const Eigen::VectorXcd& x, cd lambda) const {
    Eigen::MatrixXcd j(m_ + 1, m_);
    const std::span<const cd> pt(x.data(), m_);
    for (std::size_t a = 0; a < m_; ++a) {
      for (std::size_t b = 0; b < m_; ++b) j(a, b) = hess_[a * m_ + b](pt);
      j(a, a) -= lambda;
    }
    for (std::size_t b = 0; b < m_; ++b) j(m_, b) = 2.0 * x(b);
    return j;
  }

 private:
  std::size_t m_;
  std::vector<NumericPoly> grad_;
  std::vector<NumericPoly> hess_;
};

// The resultant system F(lambda) of f compiled numerically.  Its projective
// zeros are the eigenvectors for lambda; a chart c.z = 1 removes z = 0.
class SystemEquations {
 public:
  SystemEquations(const SymmetricTensor& f) : odd_(f.degree() % 2 == 1) {
    const LambdaSystem sys = build_system(f);
    m_ = sys.size();
    for (std::size_t i = 0; i < m_; ++i) {
      constant_.emplace_back(sys.constant_part[i]);
      lambda_.emplace_back(sys.lambda_part[i]);
      for (std::size_t j = 0; j < m_; ++j) {
        d_constant_.emplace_back(sys.constant_part[i].derivative(j));
        d_lambda_.emplace_back(sys.lambda_part[i].derivative(j));
      }
    }
  }

  std::size_t size() const { return m_; }

  // Eigenvector for a zero z of the system; empty if z is degenerate.
  std::optional<Eigen::VectorXcd> eigenvector(const Eigen::VectorXcd& z) const {
    if (odd_) {
      if (std::abs(z(0)) <= 1e-12 * z.norm()) return std::nullopt;
      return Eigen::VectorXcd(z.tail(m_ - 1) / z(0));
    }
    const cd q = z.cwiseProduct(z).sum();
    if (std::abs(q) <= 1e-12 * z.squaredNorm()) return std::nullopt;
    return Eigen::VectorXcd(z / std::sqrt(q));
  }

  struct Chart {
    const SystemEquations& sys;
    Eigen::VectorXcd c;

    Eigen::VectorXcd residual(const Eigen::VectorXcd& z, cd lambda) const {
      const std::size_t m = sys.m_;
      Eigen::VectorXcd r(m + 1);
      const std::span<const cd> pt(z.data(), m);
      for (std::size_t i = 0; i < m; ++i) r(i) = sys.constant_[i](pt) + lambda * sys.lambda_[i](pt);
      r(m) = c.cwiseProduct(z).sum() - cd(1.0);
      return r;
    }

    Eigen::MatrixXcd jacobian_x(const Eigen::VectorXcd& z, cd lambda) const {
      const std::size_t m = sys.m_;
      Eigen::MatrixXcd j(m + 1, m);
      const std::span<const cd> pt(z.data(), m);
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          j(a, b) = sys.d_constant_[a * m + b](pt) + lambda * sys.d_lambda_[a * m + b](pt);
        }
      }
      j.row(m) = c.transpose();
      return j;
    }
  };

 private:
  bool odd_;
  std::size_t m_ = 0;
  std::vector<NumericPoly> constant_;
  std::vector<NumericPoly> lambda_;
  std::vector<NumericPoly> d_constant_;
  std::vector<NumericPoly> d_lambda_;
};

// Damped Gauss-Newton in x at fixed lambda; returns the final residual norm.
template <class Equations>
double gauss_newton(const Equations& eq, Eigen::VectorXcd& x, cd lambda, const RecoveryOptions& opt) {
  double rn = eq.residual(x, lambda).norm();
  for (int it = 0; it < opt.iterations && rn > opt.success_tol; ++it) {
    const Eigen::VectorXcd r = eq.residual(x, lambda);
    const Eigen::VectorXcd delta = eq.jacobian_x(x, lambda).colPivHouseholderQr().solve(-r);
    double step = 1.0;
    bool moved = false;
    for (int k = 0; k < 30; ++k, step *= opt.damping) {
      const Eigen::VectorXcd trial = x + step * delta;
      const double tn = eq.residual(trial, lambda).norm();
      if (tn < rn) {
        x = trial;
        rn = tn;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return rn;
}

// Newton on the square system in (x, lambda).
void joint_polish(const EigenEquations& eq, Eigen::VectorXcd& x, cd& lambda) {
  const std::size_t m = eq.size();
  double rn = eq.residual(x, lambda).norm();
  for (int it = 0; it < 8 && rn > 0.0; ++it) {
    Eigen::MatrixXcd j(m + 1, m + 1);
    j.leftCols(m) = eq.jacobian_x(x, lambda);
    j.col(m).head(m) = -x;
    j(m, m) = 0.0;
    const Eigen::VectorXcd delta = j.partialPivLu().solve(-eq.residual(x, lambda));
    if (!delta.allFinite()) return;
    const Eigen::VectorXcd nx = x + delta.head(m);
    const cd nl = lambda + delta(m);
    const double nn = eq.residual(nx, nl).norm();
    if (!(nn < rn)) return;
    x = nx;
    lambda = nl;
    rn = nn;
  }
}

EigenPair finish_pair(const SymmetricTensor& f, cd lambda, ComplexVector x) {
  EigenPair p{lambda, std::move(x), 0.0};
  canonicalize(p, f.degree());
  p.residual = eigen_residual(f, p.lambda, p.x);
  return p;
}

}  // namespace

double eigen_residual(const SymmetricTensor& f, cd lambda, const ComplexVector& x) {
  const auto grad = gradient(f);
  const double d = f.degree();
  double r = 0.0;
  for (std::size_t k = 0; k < grad.size(); ++k) {
    r = std::max(r, std::abs(grad[k].evaluate(std::span<const cd>(x)) / d - lambda * x[k]));
  }
  return r;
}

void canonicalize(EigenPair& pair, unsigned degree) {
  double scale = 0.0;
  for (const cd v : pair.x) scale = std::max(scale, std::abs(v));
  const double eps = 1e-9 * std::max(scale, 1.0);
  bool flip = false;
  for (const cd v : pair.x) {
    if (std::abs(v.real()) > eps) {
      flip = v.real() < 0.0;
      break;
    }
    if (std::abs(v.imag()) > eps) {
      flip = v.imag() < 0.0;
      break;
    }
  }
  if (!flip) return;
  for (cd& v : pair.x) v = -v;
  if (degree % 2 == 1) pair.lambda = -pair.lambda;
}

PairCheck check_pair(const SymmetricTensor& f, const EigenPair& pair) {
  PairCheck c;
  c.norm_defect = std::abs(bilinear(pair.x) - 1.0);
  c.residual = eigen_residual(f, pair.lambda, pair.x);
  c.identity_defect = std::abs(pair.lambda - f.poly().evaluate(std::span<const cd>(pair.x))) / (1.0 + std::abs(pair.lambda));
  return c;
}

std::vector<EigenPair> binary_eigenpairs(const SymmetricTensor& f) {
  if (f.n() != 1) throw Error(ErrorCode::UnsupportedDimension, "binary eigenpairs need n = 1");
  const auto grad = gradient(f);
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  const MultiPoly df = x1 * grad[1] - x2 * grad[0];
  if (df.is_zero()) throw Error(ErrorCode::InvalidArgument, "D(f) vanishes identically; every vector is an eigenvector");
  for (const ExactScalar& y : {ExactScalar::i(), -ExactScalar::i()}) {
    const std::vector<ExactScalar> p{ExactScalar(1), y};
    if (df.evaluate(std::span<const ExactScalar>(p)).is_zero()) {
      throw Error(ErrorCode::IsotropicRoot, "D(f) vanishes at (1, " + y.to_string() + ")");
    }
  }
  const BinaryForm form = BinaryForm::from_multipoly(df);
  std::vector<ComplexVector> dirs;
  for (unsigned k = 0; k < form.multiplicity_at_infinity(); ++k) dirs.push_back({0.0, 1.0});
  const UniPoly affine = form.dehomogenize();
  if (affine.degree() > 0) {
    for (const cd u : polynomial_roots(affine)) dirs.push_back({1.0, u});
  }
  std::vector<EigenPair> pairs;
  for (auto& v : dirs) {
    const cd q = bilinear(v);
    if (std::abs(q) <= 1e-12 * (std::norm(v[0]) + std::norm(v[1]))) {
      throw Error(ErrorCode::IsotropicRoot, "root of D(f) on the isotropic quadric");
    }
    const cd s = std::sqrt(q);
    for (cd& c : v) c /= s;
    const cd lambda = f.poly().evaluate(std::span<const cd>(v));
    pairs.push_back(finish_pair(f, lambda, std::move(v)));
  }
  return pairs;
}

Recovery eigenpairs_from_charpoly(const SymmetricTensor& f, const ECharPoly& psi, const RecoveryOptions& options) {
  if (psi.identically_zero || psi.psi.is_zero()) {
    throw Error(ErrorCode::InvalidArgument, "characteristic polynomial vanishes identically");
  }
  Recovery out;
  if (psi.psi.degree() == 0) return out;
  // Recover at the distinct roots; exact square-free factors keep repeated
  // eigenvalues accurate.
  std::vector<cd> distinct;
  const auto factors = squarefree_factors(psi.psi);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() <= 0) continue;
    for (const cd root : polynomial_roots(factors[k])) {
      distinct.push_back(root);
      out.roots.insert(out.roots.end(), k + 1, root);
    }
  }
  const EigenEquations eq(f);
  const SystemEquations system(f);
  const std::size_t m = eq.size();
  const std::size_t ms = system.size();

  const unsigned threads = options.threads == 0 ? configured_threads() : options.threads;
  const bool odd = f.degree() % 2 == 1;
  auto covered = [&](cd root) {
    const double tol = 1e-6 * (1.0 + std::abs(root));
    return std::any_of(out.pairs.begin(), out.pairs.end(), [&](const EigenPair& p) {
      return std::abs(p.lambda - root) <= tol || (odd && std::abs(p.lambda + root) <= tol);
    });
  };

  std::vector<std::size_t> pending(distinct.size());
  std::iota(pending.begin(), pending.end(), 0);
  for (int round = 0; round < std::max(options.rounds, 1) && !pending.empty(); ++round) {
    std::vector<std::vector<EigenPair>> found(pending.size());
    parallel_for(pending.size(), threads, [&](std::size_t slot) {
      const std::size_t r = pending[slot];
      std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * (r + 1) + 0xbf58476d1ce4e5b9ULL * round);
      std::normal_distribution<double> normal;
      for (int s = 0; s < options.starts; ++s) {
        SystemEquations::Chart chart{system, Eigen::VectorXcd(ms)};
        Eigen::VectorXcd z(ms);
        for (std::size_t k = 0; k < ms; ++k) {
          chart.c(k) = cd(normal(rng), normal(rng));
          z(k) = cd(normal(rng), normal(rng));
        }
        const cd cz = chart.c.cwiseProduct(z).sum();
        if (std::abs(cz) < 1e-8) continue;
        z /= cz;
        cd lambda = distinct[r];
        const double rn = gauss_newton(chart, z, lambda, options);
        if (!(rn <= 1e-6 * (1.0 + std::abs(lambda)))) continue;
        const auto vec = system.eigenvector(z);
        if (!vec) continue;
        Eigen::VectorXcd x = *vec;
        joint_polish(eq, x, lambda);
        EigenPair p = finish_pair(f, lambda, ComplexVector(x.data(), x.data() + m));
        if (check_pair(f, p).ok(options.report_tol)) insert_unique(found[slot], std::move(p));
      }
    });
    for (auto& list : found) {
      for (auto& p : list) insert_unique(out.pairs, std::move(p));
    }
    // a root counts as recovered when some pair carries it (odd d: up to sign)
    std::erase_if(pending, [&](std::size_t r) { return covered(distinct[r]); });
  }
  for (std::size_t r : pending) out.failed.push_back(distinct[r]);
  return out;
}

FermatEnumeration fermat_eigenpairs(const FermatSpec& spec) {
  const std::size_t m = spec.a.size();
  const unsigned d = spec.d;
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "Fermat eigenpairs need d >= 2");
  if (m == 0 || m > 62) throw Error(ErrorCode::InvalidArgument, "Fermat eigenpairs need 1..62 coefficients");
  for (std::size_t k = 0; k < m; ++k) {
    if (spec.a[k].is_zero()) throw Error(ErrorCode::ZeroCoefficient, "a_" + std::to_string(k) + " = 0");
  }
  const SymmetricTensor f = spec.tensor();
  FermatEnumeration out;
  std::vector<cd> a(m);
  for (std::size_t k = 0; k < m; ++k) a[k] = spec.a[k].to_complex();

  if (d == 2) {
    for (std::size_t k = 0; k < m; ++k) {
      ComplexVector x(m, 0.0);
      x[k] = 1.0;
      out.pairs.push_back(finish_pair(f, a[k], std::move(x)));
    }
    return out;
  }

  const unsigned r = d - 2;
  for (auto& v : fermat_vectors(spec)) {
    const cd norm2 = bilinear(v.y);
    double scale = 0.0;
    for (const cd c : v.y) scale += std::norm(c);
    if (std::abs(norm2) <= 1e-12 * scale) {
      if (out.isotropic.empty() || out.isotropic.back() != v.support) out.isotropic.push_back(v.support);
      continue;
    }
    const cd s = std::sqrt(norm2);
    for (cd& c : v.y) c /= s;
    out.pairs.push_back(finish_pair(f, v.prod_a / std::pow(s, static_cast<double>(r)), std::move(v.y)));
  }
  return out;
}

std::vector<FermatVector> fermat_vectors(const FermatSpec& spec) {
  const std::size_t m = spec.a.size();
  const unsigned d = spec.d;
  if (d < 3) throw Error(ErrorCode::InvalidArgument, "Fermat vectors need d >= 3");
  if (m == 0 || m > 62) throw Error(ErrorCode::InvalidArgument, "Fermat vectors need 1..62 coefficients");
  const unsigned r = d - 2;
  std::vector<cd> a(m);
  std::vector<cd> xi(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (spec.a[k].is_zero()) throw Error(ErrorCode::ZeroCoefficient, "a_" + std::to_string(k) + " = 0");
    a[k] = spec.a[k].to_complex();
    xi[k] = std::pow(a[k], 1.0 / r);
  }
  std::vector<cd> eps_pow(r);
  for (unsigned k = 0; k < r; ++k) eps_pow[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / r);

  std::vector<FermatVector> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask >> k & 1U) support.push_back(k);
    }
    const std::size_t j = support.size();
    cd prod_a = 1.0;
    for (const std::size_t k : support) prod_a *= a[k];
    std::vector<unsigned> alpha(j, 0);  // alpha[0] stays 0
    while (true) {
      FermatVector v{mask, ComplexVector(m, 0.0), prod_a};
      for (std::size_t l = 0; l < j; ++l) {
        cd c = eps_pow[alpha[l]];
        for (std::size_t q = 0; q < j; ++q) {
          if (q != l) c *= xi[support[q]];
        }
        v.y[support[l]] = c;
      }
      out.push_back(std::move(v));
      std::size_t pos = 1;
      while (pos < j && ++alpha[pos] == r) alpha[pos++] = 0;
      if (pos >= j) break;
    }
  }
  return out;
}

cd product_of_eigenvalues(const std::vector<EigenPair>& pairs) {
  cd p = 1.0;
  for (const auto& e : pairs) p *= e.lambda;
  return p;
}

}  // namespace espectra
