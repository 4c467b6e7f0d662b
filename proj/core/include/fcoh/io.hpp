#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "fcoh/faithful.hpp"
#include "fcoh/measures.hpp"
#include "fcoh/states.hpp"
#include "fcoh/witness.hpp"

namespace fcoh::io {

using nlohmann::json;

/// Numbers in every emitted document carry 12 significant digits.
inline constexpr int kOutputDigits = 12;
double round_sig(double x, int digits = kOutputDigits);

/// Parses JSON text; throws InvalidInput on syntax errors (including NaN/Infinity literals).
json parse(std::string_view text);
json read_file(const std::string& path);
void write_file(const std::string& path, const json& doc);
/// Two-space indented, trailing newline.
std::string dump(const json& doc);

/// {"dim": d, "matrix": [[[re,im], ...], ...]} -> raw matrix, unvalidated.
/// Throws InvalidInput on shape errors or non-finite numbers.
ComplexMatrix matrix_from_state_json(const json& doc);
DensityMatrix state_from_json(const json& doc);
json to_json(const DensityMatrix& rho);

/// [[re,im], ...] amplitude list.
std::vector<Complex> amplitudes_from_json(const json& arr);

/// {"alpha": x, "psi": [[re,im],...]}. alpha is optional on input and
/// defaults to max_i |psi_i|^2.
FidelityWitness witness_from_json(const json& doc);
json to_json(const FidelityWitness& w);

json to_json(const FaithfulnessReport& r);
json to_json(const DecompositionCertificate& c);
json to_json(const CmaxResult& r);
json to_json(const MeasureReport& r);

}  // namespace fcoh::io
