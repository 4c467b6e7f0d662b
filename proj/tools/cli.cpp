#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "fcoh/circuits.hpp"
#include "fcoh/error.hpp"
#include "fcoh/faithful.hpp"
#include "fcoh/io.hpp"
#include "fcoh/measures.hpp"
#include "fcoh/states.hpp"

namespace fcoh::cli {

namespace {

struct Options {
  std::string input;
  std::string mode = "full";
  std::vector<std::size_t> dims;
  double eps = kStrictness;
  std::string report;

  std::string signs;
  std::string generator;
  std::size_t k = 0;
  bool verify = false;
  std::string out;

  std::size_t dim = 0;
  std::size_t rank = 0;
  std::uint64_t seed = 0;
};

void emit(const io::json& doc, const Options& opt, std::ostream& out) {
  const std::string text = io::dump(doc);
  out << text;
  if (!opt.report.empty()) {
    std::ofstream f(opt.report, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInput("cannot write report '" + opt.report + "'");
    f << text;
  }
}

int cmd_check(const Options& opt, std::ostream& out) {
  const ComplexMatrix raw = io::matrix_from_state_json(io::read_file(opt.input));
  const auto issues = state_violations(raw);
  if (issues.empty()) {
    out << "valid: " << raw.rows() << "-dimensional density matrix\n";
    return kSuccess;
  }
  out << "invalid:\n";
  for (const auto& issue : issues) out << "  " << to_string(issue.kind) << ": " << issue.detail << '\n';
  return kInvalidInput;
}

int cmd_faithful(const Options& opt, std::ostream& out) {
  const DensityMatrix rho = io::state_from_json(io::read_file(opt.input));
  if (rho.dim() < 2) throw InvalidInput("faithfulness is undefined for a 1-dimensional state");
  const SearchMode mode = parse_search_mode(opt.mode);
  FaithfulnessReport report;
  if (!opt.dims.empty()) {
    if (opt.dims.size() != 2) throw InvalidInput("--dims takes exactly two values");
    if (mode != SearchMode::Full) throw InvalidInput("bipartite search supports --mode full only");
    report = is_faithful_bipartite(rho, opt.dims[0], opt.dims[1], opt.eps);
  } else {
    report = check_faithfulness(rho, mode, opt.eps);
  }
  emit(io::to_json(report), opt, out);
  return kSuccess;
}

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
  const FidelityWitness w = io::witness_from_json(io::read_file(opt.input));
  const DecompositionCertificate cert = decompose_witness(w.target());
  emit(io::to_json(cert), opt, out);
  const auto check = cert.verify();
  for (const auto& f : check.failures) err << "certificate check failed: " << f << '\n';
  return check.ok ? kSuccess : kNumericalFailure;
}

int cmd_measures(const Options& opt, std::ostream& out) {
  const DensityMatrix rho = io::state_from_json(io::read_file(opt.input));
  emit(io::to_json(rfcw_bound(rho)), opt, out);
  return kSuccess;
}

int cmd_circuit(const Options& opt, std::ostream& out, std::ostream& err) {
  const bool by_name = !opt.generator.empty();
  if (by_name == !opt.signs.empty()) throw InvalidInput("give either a sign string or --generator NAME --k K");
  std::optional<SignDiagonalUnitary> u;
  if (by_name) {
    if (opt.k == 0) throw InvalidInput("--generator needs --k");
    u = find_generator(opt.k, opt.generator);
    if (!u) throw InvalidInput("no generator named '" + opt.generator + "' for k = " + std::to_string(opt.k));
  } else {
    u = SignDiagonalUnitary::parse(opt.signs);
  }
  const Circuit c = synthesize(*u);
  const std::string text = to_text(c);

  if (opt.verify) {
    const Circuit reparsed = parse_circuit(text);
    if (!(reparsed == c)) {
      err << "verify: circuit text does not round-trip\n";
      return kNumericalFailure;
    }
    if (reparsed.qubits > kMaxMatrixQubits) throw InvalidInput("--verify supports at most 12 qubits");
    if (!(to_matrix(reparsed) == u->matrix())) {
      err << "verify: simulated matrix differs from diag(" << u->to_string() << ")\n";
      return kNumericalFailure;
    }
    err << "verified: circuit matrix equals diag(" << u->to_string() << ")\n";
  }

  out << text;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInput("cannot write '" + opt.out + "'");
    f << text;
  }
  return kSuccess;
}

int cmd_random(const Options& opt, std::ostream& out) {
  const std::size_t rank = opt.rank == 0 ? opt.dim : opt.rank;
  if (rank > opt.dim) throw InvalidInput("--rank must not exceed --dim");
  const DensityMatrix rho = random_density(opt.dim, rank, opt.seed);
  const io::json doc = io::to_json(rho);
  if (opt.out.empty()) {
    out << io::dump(doc);
  } else {
    io::write_file(opt.out, doc);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Faithful-coherence toolkit: RFCW faithfulness tests, certificates, coherence measures, circuits"};
  app.require_subcommand(1);
  Options opt;

  auto* check = app.add_subcommand("check", "Validate a density-matrix JSON file");
  check->add_option("state", opt.input, "State JSON")->required();

  auto* faithful = app.add_subcommand("faithful", "Decide faithfulness by sign-vector search");
  faithful->add_option("state", opt.input, "State JSON")->required();
  faithful->add_option("--mode", opt.mode, "full | reduced | phase")->capture_default_str();
  faithful->add_option("--dims", opt.dims, "Local dimensions dA dB (bipartite search)")->expected(2);
  faithful->add_option("--eps", opt.eps, "Strictness for the > threshold test")->capture_default_str();
  faithful->add_option("--report", opt.report, "Also write the JSON report here");

  auto* decompose = app.add_subcommand("decompose", "Certificate reducing a real fidelity witness to RFCWs");
  decompose->add_option("witness", opt.input, "Witness JSON {\"alpha\": x, \"psi\": [[re,im],...]}")->required();
  decompose->add_option("--report", opt.report, "Also write the JSON certificate here");

  auto* measures = app.add_subcommand("measures", "C_r, C_max and the RFCW lower bound");
  measures->add_option("state", opt.input, "State JSON")->required();
  measures->add_option("--report", opt.report, "Also write the JSON report here");

  auto* circuit = app.add_subcommand("circuit", "Synthesize a sign-diagonal unitary as controlled-Z gates");
  circuit->add_option("signs", opt.signs, "Sign string such as +-++");
  circuit->add_option("--generator", opt.generator, "Named generator, e.g. U_11");
  circuit->add_option("--k", opt.k, "Qubit count for --generator");
  circuit->add_flag("--verify", opt.verify, "Re-parse and simulate the emitted circuit");
  circuit->add_option("--out", opt.out, "Also write the circuit text here");

  auto* random = app.add_subcommand("random", "Seeded random density matrix (Ginibre ensemble)");
  random->add_option("--dim", opt.dim, "Dimension")->required()->check(CLI::PositiveNumber);
  random->add_option("--rank", opt.rank, "Rank (default: dim)");
  random->add_option("--seed", opt.seed, "Seed")->required();
  random->add_option("--out", opt.out, "Output path (default: stdout)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (check->parsed()) return cmd_check(opt, out);
    if (faithful->parsed()) return cmd_faithful(opt, out);
    if (decompose->parsed()) return cmd_decompose(opt, out, err);
    if (measures->parsed()) return cmd_measures(opt, out);
    if (circuit->parsed()) return cmd_circuit(opt, out, err);
    if (random->parsed()) return cmd_random(opt, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace fcoh::cli
