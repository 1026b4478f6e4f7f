#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "espectra/echar.hpp"
#include "espectra/resultant.hpp"
#include "espectra/tensor.hpp"

namespace espectra {

/// Tensor JSON:
///   {"n": 2, "d": 3, "coeffs": [{"exp": [3,0,0], "re": "1", "im": "0"}, ...]}
/// or, for n = 1, "binary_binomial": [{"re": .., "im": ..}, ...] holding
/// a_0..a_d of sum C(d,j) a_j x1^(d-j) x2^j.  Scalars are exact strings.
/// Malformed input throws Error(ParseError); non-homogeneous terms throw
/// Error(NotHomogeneous).
SymmetricTensor tensor_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const SymmetricTensor& f);
SymmetricTensor parse_tensor(const std::string& text);
SymmetricTensor load_tensor(const std::filesystem::path& path);

nlohmann::json scalar_to_json(const ExactScalar& s);
ExactScalar scalar_from_json(const nlohmann::json& j);
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, std::size_t n_vars);

/// A lambda-affine system stored directly, for computations in coordinates
/// other than those of a tensor:
///   {"kind": "lambda_system", "n_vars": 4, "degree_bound": 14,
///    "parity": "odd", "forms": [{"const": [terms], "lambda": [terms]}, ...]}
struct LambdaSystemFile {
  LambdaSystem system;
  unsigned degree_bound = 0;
  Parity parity = Parity::Even;
};

bool is_lambda_system(const nlohmann::json& j);
LambdaSystemFile lambda_system_from_json(const nlohmann::json& j);
nlohmann::json lambda_system_to_json(const LambdaSystemFile& s);

}  // namespace espectra
