#include "espectra/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "espectra/cli/generate.hpp"
#include "espectra/cli/report.hpp"
#include "espectra/echar.hpp"
#include "espectra/invariants.hpp"
#include "espectra/spectra.hpp"
#include "espectra/tensor_json.hpp"

namespace espectra::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Input {
  std::string text;
  json doc;
};

Input read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Input input{ss.str(), {}};
  try {
    input.doc = json::parse(input.text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return input;
}

json strings(const std::vector<ExactScalar>& v) { return exact_strings(v); }

json certificate_json(const DeficitCertificate& c) {
  json x = json::array();
  for (const auto& v : c.x) x.push_back(complex_to_json(v));
  json j{{"x", std::move(x)}, {"lambda", complex_to_json(c.lambda)}, {"residual", c.residual}};
  if (c.exact_lambda) j["lambda_exact"] = c.exact_lambda->to_string();
  return j;
}

void describe_psi(RunReport& report, const ECharPoly& psi) {
  report.psi_coeffs = psi.psi.coeffs();
  report.deficient = psi.deficient;
  report.details["degree"] = psi.psi.degree();
  report.details["parity"] = to_string(psi.parity);
  report.details["n_expected"] = psi.n_expected;
  report.details["identically_zero"] = psi.identically_zero;
  report.details["psi_primitive"] = strings(primitive_part(psi.psi).coeffs());
}

bool is_fermat_shaped(const SymmetricTensor& f) {
  if (f.poly().size() != f.n_vars()) return false;
  for (const auto& [e, c] : f.poly().terms()) {
    if (std::count(e.begin(), e.end(), 0U) + 1 != static_cast<std::ptrdiff_t>(e.size())) return false;
  }
  return true;
}

FermatSpec fermat_spec_of(const SymmetricTensor& f) {
  FermatSpec spec;
  spec.d = f.degree();
  for (std::size_t k = 0; k < f.n_vars(); ++k) {
    Exponent e(f.n_vars(), 0);
    e[k] = f.degree();
    spec.a.push_back(f.poly().coeff(e));
  }
  return spec;
}

int cmd_echar(RunReport& report, const std::string& path, std::ostream& err) {
  const Input input = read_input(path);
  report.input_digest = sha256_digest(input.text);
  ECharPoly psi;
  if (is_lambda_system(input.doc)) {
    const LambdaSystemFile sys = lambda_system_from_json(input.doc);
    ParametricResult res = parametric_resultant(sys.system, sys.degree_bound);
    report.details["skipped_nodes"] = res.skipped_nodes;
    psi = make_echar(std::move(res.poly), sys.parity, sys.degree_bound, res.all_samples_zero);
  } else {
    const SymmetricTensor f = tensor_from_json(input.doc);
    psi = e_char_poly(f);
  }
  describe_psi(report, psi);
  if (psi.identically_zero) err << "characteristic polynomial is identically zero\n";
  if (psi.deficient && !psi.identically_zero) {
    err << "deficient: degree " << psi.psi.degree() << " < " << psi.n_expected << "\n";
  }
  return kExitOk;
}

int cmd_eigen(RunReport& report, const std::string& path, const std::string& method, std::uint64_t seed,
              std::ostream& err) {
  const Input input = read_input(path);
  report.input_digest = sha256_digest(input.text);
  const SymmetricTensor f = tensor_from_json(input.doc);
  report.details["method"] = method;
  const mpz_class n_expected = expected_eigenvalue_count(static_cast<unsigned>(f.n()), f.degree());
  report.details["expected_count"] = n_expected.get_str();
  int status = kExitOk;

  if (method == "charpoly") {
    const ECharPoly psi = e_char_poly(f);
    describe_psi(report, psi);
    if (psi.identically_zero) {
      err << "characteristic polynomial is identically zero; eigenvalues are not isolated\n";
      return kExitRecovery;
    }
    if (psi.deficient) {
      err << "warning: deficient characteristic polynomial (degree " << psi.psi.degree() << " < "
          << psi.n_expected << "), isotropic eigenvectors present\n";
      if (f.n() <= 2) {
        if (const auto cert = find_deficit_solution(f)) report.details["certificate"] = certificate_json(*cert);
      }
    }
    RecoveryOptions opt;
    opt.seed = seed;
    const Recovery rec = eigenpairs_from_charpoly(f, psi, opt);
    report.pairs = rec.pairs;
    json failed = json::array();
    for (const auto& r : rec.failed) failed.push_back(complex_to_json(r));
    report.details["failed_roots"] = failed;
    if (!rec.failed.empty()) {
      err << "RECOVERY_FAILED: " << rec.failed.size() << " root(s) without an eigenvector\n";
      status = kExitRecovery;
    }
  } else if (method == "binary") {
    if (f.n() != 1) throw Error(ErrorCode::UnsupportedDimension, "--method binary needs n = 1");
    report.pairs = binary_eigenpairs(f);
  } else if (method == "fermat") {
    if (!is_fermat_shaped(f)) throw Error(ErrorCode::InvalidArgument, "--method fermat needs sum a_i x_i^d");
    const FermatEnumeration en = fermat_eigenpairs(fermat_spec_of(f));
    report.pairs = en.pairs;
    report.details["isotropic_supports"] = en.isotropic;
    if (!en.isotropic.empty()) {
      err << "NORM_ZERO: " << en.isotropic.size() << " support subset(s) give isotropic vectors\n";
      status = kExitRecovery;
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + method + "'");
  }
  report.details["count"] = report.pairs.size();
  report.details["product"] = complex_to_json(product_of_eigenvalues(report.pairs));
  return status;
}

json theorem_json(const MainTheoremReport& r) {
  json j{{"verdict", to_string(r.verdict)}, {"detail", r.detail}, {"irregular", r.irregular},
         {"deficient", r.psi.deficient}, {"degree", r.psi.psi.degree()}, {"n_expected", r.psi.n_expected}};
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  if (r.verdict == Verdict::HypothesisFailed) return j;
  j["c0"] = r.c0.to_string();
  j["c_top"] = r.c_top.to_string();
  j["resultant"] = r.res.to_string();
  j["disc"] = r.disc.to_string();
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["relative_error"] = r.relative_error;
  j["exact_match"] = r.exact_match;
  j["constant_ratio"] = r.constant_ratio.to_string();
  j["leading_ratio"] = r.leading_ratio.to_string();
  return j;
}

int cmd_verify_input(RunReport& report, const std::string& path) {
  const Input input = read_input(path);
  report.input_digest = sha256_digest(input.text);
  const SymmetricTensor f = tensor_from_json(input.doc);
  const MainTheoremReport r = verify_main_theorem(f);
  report.psi_coeffs = r.psi.psi.coeffs();
  report.deficient = r.psi.deficient;
  report.verdict = to_string(r.verdict);
  report.details = theorem_json(r);
  return r.verdict == Verdict::Fail ? kExitVerification : kExitOk;
}

std::pair<unsigned, unsigned> parse_suite(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ') s.push_back(c);
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "--suite expects n,d");
  try {
    std::size_t used = 0;
    const int n = std::stoi(s.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("n");
    const std::string ds = s.substr(comma + 1);
    const int d = std::stoi(ds, &used);
    if (used != ds.size() || n < 1 || d < 2) throw std::invalid_argument("d");
    return {static_cast<unsigned>(n), static_cast<unsigned>(d)};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidArgument, "--suite expects n,d with n >= 1, d >= 2");
  }
}

int cmd_verify_suite(RunReport& report, const std::string& suite, unsigned samples, std::uint64_t seed,
                     std::ostream& err) {
  const auto [n, d] = parse_suite(suite);
  if (samples < 2) throw Error(ErrorCode::InvalidArgument, "--samples must be at least 2");
  const InvariantReport inv = invariant_report(n, d);
  report.details["n"] = n;
  report.details["d"] = d;
  report.details["N"] = inv.N.get_str();
  bool ok = true;
  json rows = json::array();
  std::optional<ExactScalar> constant;
  std::optional<ExactScalar> leading;
  bool constant_same = true;
  bool leading_same = true;
  for (unsigned k = 0; k < samples; ++k) {
    GenerateOptions g;
    g.n = n;
    g.d = d;
    g.seed = seed + k;
    const SymmetricTensor f = generate_tensor(g);
    const MainTheoremReport r = verify_main_theorem(f);
    json row = theorem_json(r);
    row["seed"] = g.seed;
    rows.push_back(std::move(row));
    if (r.verdict != Verdict::Pass) {
      ok = false;
      err << "sample " << k << ": " << to_string(r.verdict) << " " << r.detail << "\n";
      continue;
    }
    if (!constant) constant = r.constant_ratio;
    if (!leading) leading = r.leading_ratio;
    constant_same = constant_same && *constant == r.constant_ratio;
    leading_same = leading_same && *leading == r.leading_ratio;
  }
  if (!constant_same) err << "RATIO_MISMATCH: constant-term ratio differs between samples\n";
  if (!leading_same) err << "RATIO_MISMATCH: leading-coefficient ratio differs between samples\n";
  ok = ok && constant_same && leading_same;
  report.details["samples"] = rows;
  if (constant) report.details["constant_ratio"] = constant->to_string();
  if (leading) report.details["leading_ratio"] = leading->to_string();
  report.details["constant_ratio_constant"] = constant_same;
  report.details["leading_ratio_constant"] = leading_same;
  report.verdict = ok ? "PASS" : "FAIL";
  return ok ? kExitOk : kExitVerification;
}

int cmd_invariants(RunReport& report, unsigned n, unsigned d) {
  const InvariantReport r = invariant_report(n, d);
  auto big = [](const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
  };
  report.details = {{"n", n},
                    {"d", d},
                    {"N", r.N.get_str()},
                    {"phi", r.phi.get_str()},
                    {"delta0", r.delta0.get_str()},
                    {"alpha", big(r.alpha)},
                    {"beta", big(r.beta)}};
  report.verdict = "PASS";
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DenominatorSingular:
    case ErrorCode::MatrixTooLarge:
    case ErrorCode::ResampleExhausted:
    case ErrorCode::DegreeBoundTooSmall:
      return kExitResultant;
    case ErrorCode::IsotropicRoot:
    case ErrorCode::RecoveryFailed:
    case ErrorCode::NormZero:
      return kExitRecovery;
    case ErrorCode::HypothesisFailed:
    case ErrorCode::RatioMismatch:
      return kExitVerification;
    default:
      return kExitUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"E-eigenpairs and E-characteristic polynomials of symmetric tensors", "espectra"};
  app.require_subcommand(1);

  std::string input;
  std::string method = "charpoly";
  std::string suite;
  std::string kind = "random";
  unsigned samples = 10;
  unsigned n = 1;
  unsigned d = 3;
  std::uint64_t seed = 1;
  bool complex = false;

  auto* echar = app.add_subcommand("echar", "exact E-characteristic polynomial");
  echar->add_option("--input", input, "tensor or lambda_system JSON")->required()->check(CLI::ExistingFile);

  auto* eigen = app.add_subcommand("eigen", "E-eigenpairs");
  eigen->add_option("--input", input, "tensor JSON")->required()->check(CLI::ExistingFile);
  eigen->add_option("--method", method, "charpoly | binary | fermat")
      ->check(CLI::IsMember({"charpoly", "binary", "fermat"}));
  eigen->add_option("--seed", seed, "seed for the random starts");

  auto* verify = app.add_subcommand("verify", "check the eigenvalue product formula");
  auto* verify_input = verify->add_option("--input", input, "tensor JSON")->check(CLI::ExistingFile);
  auto* verify_suite = verify->add_option("--suite", suite, "n,d for a random sample suite");
  verify->add_option("--samples", samples, "samples in a suite");
  verify->add_option("--seed", seed, "first sample seed");
  verify_input->excludes(verify_suite);
  verify_suite->excludes(verify_input);

  auto* generate = app.add_subcommand("generate", "write a test tensor as JSON");
  generate->add_option("--kind", kind, "random | fermat | tangent")
      ->check(CLI::IsMember({"random", "fermat", "tangent"}));
  generate->add_option("--n", n, "projective dimension")->required()->check(CLI::PositiveNumber);
  generate->add_option("--d", d, "degree")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "random seed");
  generate->add_flag("--complex", complex, "Gaussian-integer coefficients (random kind)");

  auto* invariants = app.add_subcommand("invariants", "combinatorial invariants N, phi, delta0");
  invariants->add_option("--n", n, "projective dimension")->required()->check(CLI::PositiveNumber);
  invariants->add_option("--d", d, "degree")->required()->check(CLI::Range(2U, 1000U));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  RunReport report;
  report.args.assign(args.begin() + (args.empty() ? 0 : 1), args.end());
  const auto start = Clock::now();
  int status = kExitOk;
  try {
    if (*echar) {
      report.command = "echar";
      status = cmd_echar(report, input, err);
    } else if (*eigen) {
      report.command = "eigen";
      status = cmd_eigen(report, input, method, seed, err);
    } else if (*verify) {
      report.command = "verify";
      if (!input.empty()) {
        status = cmd_verify_input(report, input);
      } else if (!suite.empty()) {
        status = cmd_verify_suite(report, suite, samples, seed, err);
      } else {
        err << "verify needs --input or --suite\n";
        return kExitUsage;
      }
    } else if (*generate) {
      GenerateOptions g;
      g.kind = parse_kind(kind);
      g.n = n;
      g.d = d;
      g.seed = seed;
      g.complex = complex;
      out << tensor_to_json(generate_tensor(g)).dump(2) << "\n";
      return kExitOk;
    } else if (*invariants) {
      report.command = "invariants";
      status = cmd_invariants(report, n, d);
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    const int code = exit_code_for(e.code());
    if (code != kExitRecovery) return code;
    status = code;
  }
  report.timings_ms["total"] = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  out << report.to_json().dump(2) << "\n";
  return status;
}

}  // namespace espectra::cli
