#include "fcoh/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fcoh/error.hpp"

namespace fcoh::io {

double round_sig(double x, int digits) {
  if (x == 0.0) return 0.0;
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << dump(doc);
}

namespace {

double finite_number(const json& v, const char* what) {
  if (!v.is_number()) throw InvalidInput(std::string(what) + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InvalidInput(std::string(what) + ": NaN or Inf not allowed");
  return x;
}

Complex complex_from_json(const json& v) {
  if (!v.is_array() || v.size() != 2) throw InvalidInput("complex entry must be [re, im]");
  return {finite_number(v[0], "real part"), finite_number(v[1], "imaginary part")};
}

json complex_to_json(Complex z) { return json::array({round_sig(z.real()), round_sig(z.imag())}); }

json rounded(std::span<const double> xs) {
  json arr = json::array();
  for (double x : xs) arr.push_back(round_sig(x));
  return arr;
}

json signs_json(const SignVector& a) {
  json arr = json::array();
  for (auto e : a.entries()) arr.push_back(int(e));
  return arr;
}

}  // namespace

ComplexMatrix matrix_from_state_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix")) {
    throw InvalidInput("state JSON needs \"dim\" and \"matrix\"");
  }
  if (!doc["dim"].is_number_unsigned() && !doc["dim"].is_number_integer()) throw InvalidInput("\"dim\" must be an integer");
  const auto dim_signed = doc["dim"].get<long long>();
  if (dim_signed < 1) throw InvalidInput("\"dim\" must be >= 1");
  const auto d = static_cast<std::size_t>(dim_signed);
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != d) throw InvalidInput("\"matrix\" must have dim rows");
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (!rows[i].is_array() || rows[i].size() != d) {
      throw InvalidInput("matrix row " + std::to_string(i) + " must have dim entries");
    }
    for (std::size_t j = 0; j < d; ++j) m(i, j) = complex_from_json(rows[i][j]);
  }
  return m;
}

DensityMatrix state_from_json(const json& doc) { return DensityMatrix::validate(matrix_from_state_json(doc)); }

json to_json(const DensityMatrix& rho) {
  json rows = json::array();
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < rho.dim(); ++j) row.push_back(complex_to_json(rho(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"dim", rho.dim()}, {"matrix", std::move(rows)}};
}

std::vector<Complex> amplitudes_from_json(const json& arr) {
  if (!arr.is_array() || arr.empty()) throw InvalidInput("\"psi\" must be a non-empty array of [re, im]");
  std::vector<Complex> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(complex_from_json(v));
  return out;
}

FidelityWitness witness_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("psi")) throw InvalidInput("witness JSON needs \"psi\"");
  PureState psi = PureState::from_amplitudes(amplitudes_from_json(doc["psi"]));
  if (doc.contains("alpha")) return FidelityWitness(finite_number(doc["alpha"], "alpha"), std::move(psi));
  return build_witness(psi);
}

json to_json(const FidelityWitness& w) {
  json psi = json::array();
  for (const auto& z : w.target().amplitudes()) psi.push_back(complex_to_json(z));
  return {{"alpha", round_sig(w.alpha())}, {"psi", std::move(psi)}};
}

json to_json(const FaithfulnessReport& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["mode"] = to_string(r.mode);
  j["theorem"] = to_string(r.criterion);
  j["best_overlap"] = round_sig(r.best_overlap);
  j["threshold"] = round_sig(r.threshold);
  j["margin"] = round_sig(r.margin);
  j["best_sign"] = signs_json(r.best_sign);
  j["marginal"] = r.marginal;
  j["strictness"] = round_sig(r.strictness);
  j["candidates"] = r.candidates;
  if (r.criterion == Criterion::Bipartite) {
    j["dims"] = json::array({r.dim_a, r.dim_b});
    if (r.best_sign_b) j["best_sign_b"] = signs_json(*r.best_sign_b);
    if (r.literal_threshold) j["literal_threshold"] = round_sig(*r.literal_threshold);
  }
  if (r.literal_qubit_criterion) {
    j["literal_qubit_criterion"] = *r.literal_qubit_criterion;
    j["qubit_criterion_conflict"] = *r.literal_qubit_criterion != r.faithful();
  }
  if (r.phase) {
    j["phase_overlap"] = round_sig(r.phase->overlap);
    j["phase_vector"] = rounded(r.phase->phases);
    j["phase_sweeps"] = r.phase->sweeps;
  }
  if (r.phase_detectable) j["phase_detectable"] = *r.phase_detectable;
  return j;
}

json to_json(const DecompositionCertificate& c) {
  json probs = json::array();
  for (const auto& [a, p] : c.probabilities) probs.push_back({{"sign", signs_json(a)}, {"p", round_sig(p)}});
  const auto check = c.verify();
  return {{"dim", c.dim},
          {"permutation", c.permutation},
          {"betas", rounded(c.betas)},
          {"gammas", rounded(c.gammas)},
          {"probabilities", std::move(probs)},
          {"residual_diag", rounded(c.residual_diag)},
          {"offdiag_norm", round_sig(c.offdiag_norm)},
          {"valid", check.ok},
          {"failures", check.failures}};
}

json to_json(const CmaxResult& r) {
  return {{"value", round_sig(r.value)},
          {"primal_trace", round_sig(r.primal_trace)},
          {"dual_bound", round_sig(r.dual_bound)},
          {"gap", round_sig(r.gap)},
          {"primal_diag", rounded(r.primal_diag)},
          {"dual_witness", rounded(r.dual_witness)},
          {"dual_phase_value", round_sig(r.dual_phase_value)},
          {"dual_matrix_value", round_sig(r.dual_matrix_value)},
          {"min_slack_eigenvalue", round_sig(r.min_slack_eigenvalue)}};
}

json to_json(const MeasureReport& r) {
  return {{"c_r", round_sig(r.c_r)},
          {"c_max", round_sig(r.c_max.value)},
          {"c_max_gap", round_sig(r.c_max.gap)},
          {"rfcw_lhs", round_sig(r.rfcw_lhs)},
          {"bound_satisfied", r.bound_satisfied},
          {"best_sign", signs_json(r.best_sign)},
          {"c_max_detail", to_json(r.c_max)}};
}

}  // namespace fcoh::io
