#include "espectra/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "espectra/error.hpp"

namespace espectra::cli {

using nlohmann::json;

json complex_to_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json pair_to_json(const EigenPair& p) {
  json x = json::array();
  for (const auto& v : p.x) x.push_back(complex_to_json(v));
  return {{"lambda", complex_to_json(p.lambda)}, {"x", std::move(x)}, {"residual", p.residual}};
}

EigenPair pair_from_json(const json& j) {
  EigenPair p;
  p.lambda = complex_from_json(j.at("lambda"));
  for (const auto& v : j.at("x")) p.x.push_back(complex_from_json(v));
  p.residual = j.at("residual").get<double>();
  return p;
}

std::vector<std::string> exact_strings(const std::vector<ExactScalar>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json RunReport::to_json() const {
  json j;
  j["command"] = command;
  j["args"] = args;
  j["input_digest"] = input_digest;
  if (psi_coeffs) j["psi_coeffs"] = exact_strings(*psi_coeffs);
  if (!pairs.empty()) {
    json list = json::array();
    for (const auto& p : pairs) list.push_back(pair_to_json(p));
    j["pairs"] = std::move(list);
  }
  if (deficient) j["deficient"] = *deficient;
  if (!verdict.empty()) j["verdict"] = verdict;
  j["details"] = details;
  j["timings_ms"] = timings_ms;
  return j;
}

RunReport RunReport::from_json(const json& j) {
  try {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.args = j.at("args").get<std::vector<std::string>>();
    r.input_digest = j.at("input_digest").get<std::string>();
    if (j.contains("psi_coeffs")) {
      std::vector<ExactScalar> c;
      for (const auto& s : j.at("psi_coeffs")) c.push_back(ExactScalar::from_string(s.get<std::string>()));
      r.psi_coeffs = std::move(c);
    }
    if (j.contains("pairs")) {
      for (const auto& p : j.at("pairs")) r.pairs.push_back(pair_from_json(p));
    }
    if (j.contains("deficient")) r.deficient = j.at("deficient").get<bool>();
    r.verdict = j.value("verdict", "");
    r.details = j.value("details", json::object());
    r.timings_ms = j.value("timings_ms", std::map<std::string, double>{});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string sha256_digest(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::InvalidArgument, "sha256 failed");
  }
  std::ostringstream out;
  out << "sha256:" << std::hex << std::setfill('0');
  for (unsigned int k = 0; k < len; ++k) out << std::setw(2) << static_cast<int>(md[k]);
  return out.str();
}

}  // namespace espectra::cli
