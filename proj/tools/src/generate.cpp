#include "espectra/cli/generate.hpp"

#include <random>

#include "espectra/echar.hpp"
#include "espectra/error.hpp"
#include "espectra/invariants.hpp"

namespace espectra::cli {

namespace {

class Sampler {
 public:
  Sampler(std::uint64_t seed, int range) : rng_(seed), dist_(-range, range) {}

  long next() { return dist_(rng_); }

  long nonzero() {
    long v = 0;
    while (v == 0) v = next();
    return v;
  }

  ExactScalar scalar(bool complex) {
    const long re = next();
    const long im = complex ? next() : 0;
    return {mpq_class(re), mpq_class(im)};
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

MultiPoly random_form(Sampler& s, std::size_t n_vars, unsigned degree, bool complex) {
  MultiPoly p(n_vars);
  for (const auto& e : monomials_of_degree(n_vars, degree)) p.add_term(e, s.scalar(complex));
  return p;
}

SymmetricTensor tangent_binary(Sampler& s, unsigned d) {
  std::vector<ExactScalar> a(d + 1);
  for (unsigned j = 1; j <= d; ++j) a[j] = ExactScalar(s.next());
  if (a[d].is_zero()) a[d] = ExactScalar(1);
  // f(1, i) = sum_j C(d,j) a_j i^j = 0
  ExactScalar ij(1);
  ExactScalar rest;
  for (unsigned j = 1; j <= d; ++j) {
    ij *= ExactScalar::i();
    rest += ExactScalar(mpq_class(binomial(d, j))) * a[j] * ij;
  }
  a[0] = -rest;
  return SymmetricTensor::binary_binomial(a);
}

SymmetricTensor tangent_ternary(Sampler& s, unsigned d) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "tangent ternary forms need d >= 2");
  long ps = 0;
  long pt = 0;
  while (ps == 0 && pt == 0) {
    ps = s.next();
    pt = s.next();
  }
  // p = (s^2 - t^2, i (s^2 + t^2), 2 s t) lies on Q; the tangent line there is <p, x> = 0.
  const std::vector<ExactScalar> p{ExactScalar(ps * ps - pt * pt), ExactScalar::i() * ExactScalar(ps * ps + pt * pt),
                                   ExactScalar(2 * ps * pt)};
  MultiPoly line(3);
  for (std::size_t k = 0; k < 3; ++k) {
    Exponent e(3, 0);
    e[k] = 1;
    line.add_term(e, p[k]);
  }
  MultiPoly f = line * random_form(s, 3, d - 1, false);
  f += MultiPoly::sum_of_squares(3, 0, 3) * random_form(s, 3, d - 2, false);
  return {std::move(f), d};
}

}  // namespace

GenerateKind parse_kind(const std::string& text) {
  if (text == "random") return GenerateKind::Random;
  if (text == "fermat") return GenerateKind::Fermat;
  if (text == "tangent") return GenerateKind::Tangent;
  throw Error(ErrorCode::InvalidArgument, "unknown kind '" + text + "'");
}

bool is_generic(const SymmetricTensor& f) {
  if (f.poly().is_zero()) return false;
  if (f.n() == 1) {
    if (binary_q_discriminant(f).qdisc.is_zero() || is_irregular(f)) return false;
  } else if (f.n() == 2) {
    if (restrict_to_conic(f).is_zero() || ternary_q_discriminant_proxy(f).is_zero()) return false;
  }
  return !gradient_resultant(f).is_zero();
}

FermatSpec generate_fermat(unsigned n, unsigned d, std::uint64_t seed, int range) {
  Sampler s(seed, range);
  FermatSpec spec;
  spec.d = d;
  for (unsigned k = 0; k <= n; ++k) spec.a.emplace_back(s.nonzero());
  return spec;
}

SymmetricTensor generate_tensor(const GenerateOptions& o) {
  if (o.d < 1 || o.n < 1) throw Error(ErrorCode::InvalidArgument, "generate needs n >= 1 and d >= 1");
  if (o.range < 1) throw Error(ErrorCode::InvalidArgument, "coefficient range must be positive");
  switch (o.kind) {
    case GenerateKind::Fermat:
      return generate_fermat(o.n, o.d, o.seed, o.range).tensor();
    case GenerateKind::Tangent: {
      Sampler s(o.seed, o.range);
      if (o.n == 1) return tangent_binary(s, o.d);
      if (o.n == 2) return tangent_ternary(s, o.d);
      throw Error(ErrorCode::InvalidArgument, "tangent kind needs n <= 2");
    }
    case GenerateKind::Random:
      break;
  }
  Sampler s(o.seed, o.range);
  const bool check = o.n <= 2 && o.d >= 2;
  for (int attempt = 0; attempt < 100; ++attempt) {
    SymmetricTensor f(random_form(s, o.n + 1, o.d, o.complex), o.d);
    if (!check || is_generic(f)) return f;
  }
  throw Error(ErrorCode::ResampleExhausted, "no generic sample in 100 draws");
}

}  // namespace espectra::cli
