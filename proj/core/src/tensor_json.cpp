#include "espectra/tensor_json.hpp"

#include <fstream>
#include <sstream>

#include "espectra/error.hpp"

namespace espectra {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw Error(ErrorCode::ParseError, "exact scalars must be strings or integers, got " + j.dump());
}

unsigned small_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a non-negative integer");
  }
  return j.get<unsigned>();
}

}  // namespace

json scalar_to_json(const ExactScalar& s) { return {{"re", s.re().get_str()}, {"im", s.im().get_str()}}; }

ExactScalar scalar_from_json(const json& j) {
  if (j.is_string() || j.is_number_integer()) return ExactScalar::parse(scalar_text(j));
  const std::string re = j.contains("re") ? scalar_text(j.at("re")) : "0";
  const std::string im = j.contains("im") ? scalar_text(j.at("im")) : "0";
  return ExactScalar::parse(re, im);
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t = scalar_to_json(c);
    t["exp"] = e;
    terms.push_back(std::move(t));
  }
  return terms;
}

MultiPoly poly_from_json(const json& j, std::size_t n_vars) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "term list must be an array");
  MultiPoly p(n_vars);
  for (const auto& t : j) {
    const json& e = field(t, "exp");
    if (!e.is_array() || e.size() != n_vars) {
      throw Error(ErrorCode::ParseError, "exponent " + e.dump() + " needs " + std::to_string(n_vars) + " entries");
    }
    Exponent exp;
    for (const auto& v : e) exp.push_back(small_uint(v, "exponent entry"));
    p.add_term(exp, scalar_from_json(t));
  }
  return p;
}

SymmetricTensor tensor_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "tensor JSON must be an object");
  const unsigned n = small_uint(field(j, "n"), "n");
  const unsigned d = small_uint(field(j, "d"), "d");
  if (j.contains("binary_binomial")) {
    const json& a = j.at("binary_binomial");
    if (n != 1 || !a.is_array() || a.size() != d + 1) {
      throw Error(ErrorCode::ParseError, "binary_binomial needs n = 1 and d + 1 entries");
    }
    std::vector<ExactScalar> coeffs;
    for (const auto& v : a) coeffs.push_back(scalar_from_json(v));
    return SymmetricTensor::binary_binomial(coeffs);
  }
  return {poly_from_json(field(j, "coeffs"), n + 1), d};
}

json tensor_to_json(const SymmetricTensor& f) {
  return {{"n", f.n()}, {"d", f.degree()}, {"coeffs", poly_to_json(f.poly())}};
}

SymmetricTensor parse_tensor(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  return tensor_from_json(j);
}

SymmetricTensor load_tensor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tensor(ss.str());
}

bool is_lambda_system(const json& j) { return j.is_object() && j.value("kind", "") == "lambda_system"; }

LambdaSystemFile lambda_system_from_json(const json& j) {
  if (!is_lambda_system(j)) throw Error(ErrorCode::ParseError, "not a lambda_system document");
  const std::size_t n_vars = small_uint(field(j, "n_vars"), "n_vars");
  LambdaSystemFile out;
  out.degree_bound = small_uint(field(j, "degree_bound"), "degree_bound");
  const std::string parity = j.value("parity", "even");
  if (parity != "even" && parity != "odd") throw Error(ErrorCode::ParseError, "parity must be even or odd");
  out.parity = parity == "odd" ? Parity::Odd : Parity::Even;
  const json& forms = field(j, "forms");
  if (!forms.is_array() || forms.size() != n_vars) {
    throw Error(ErrorCode::ParseError, "a square system needs one form per variable");
  }
  for (const auto& form : forms) {
    out.system.constant_part.push_back(poly_from_json(form.value("const", json::array()), n_vars));
    out.system.lambda_part.push_back(poly_from_json(form.value("lambda", json::array()), n_vars));
  }
  for (std::size_t k = 0; k < n_vars; ++k) {
    const MultiPoly sum = out.system.constant_part[k] + out.system.lambda_part[k];
    if (sum.is_zero() || !sum.is_homogeneous() ||
        (!out.system.constant_part[k].is_zero() && !out.system.lambda_part[k].is_zero() &&
         out.system.constant_part[k].homogeneous_degree() != out.system.lambda_part[k].homogeneous_degree())) {
      throw Error(ErrorCode::NotHomogeneous, "form " + std::to_string(k) + " is not homogeneous");
    }
  }
  return out;
}

json lambda_system_to_json(const LambdaSystemFile& s) {
  json forms = json::array();
  for (std::size_t k = 0; k < s.system.size(); ++k) {
    forms.push_back({{"const", poly_to_json(s.system.constant_part[k])}, {"lambda", poly_to_json(s.system.lambda_part[k])}});
  }
  const std::size_t n_vars = s.system.size() == 0 ? 0 : s.system.constant_part[0].n_vars();
  return {{"kind", "lambda_system"},
          {"n_vars", n_vars},
          {"degree_bound", s.degree_bound},
          {"parity", to_string(s.parity)},
          {"forms", std::move(forms)}};
}

}  // namespace espectra
