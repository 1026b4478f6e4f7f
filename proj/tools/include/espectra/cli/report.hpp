#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "espectra/exact_scalar.hpp"
#include "espectra/spectra.hpp"

namespace espectra::cli {

/// Machine-readable result of one subcommand.  Exact scalars are strings,
/// eigenpair numerics are JSON numbers printed with 17 significant digits.
struct RunReport {
  std::string command;
  std::vector<std::string> args;
  /// "sha256:<hex>" of the input file, empty without input.
  std::string input_digest;
  std::optional<std::vector<ExactScalar>> psi_coeffs;
  std::vector<EigenPair> pairs;
  std::optional<bool> deficient;
  /// PASS, FAIL, HYPOTHESIS_FAILED or empty.
  std::string verdict;
  nlohmann::json details = nlohmann::json::object();
  std::map<std::string, double> timings_ms;

  nlohmann::json to_json() const;
  static RunReport from_json(const nlohmann::json& j);

  friend bool operator==(const RunReport& a, const RunReport& b) { return a.to_json() == b.to_json(); }
};

nlohmann::json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);
nlohmann::json pair_to_json(const EigenPair& p);
EigenPair pair_from_json(const nlohmann::json& j);

std::vector<std::string> exact_strings(const std::vector<ExactScalar>& values);

/// "sha256:" followed by the hex digest of the bytes.
std::string sha256_digest(const std::string& bytes);

}  // namespace espectra::cli
