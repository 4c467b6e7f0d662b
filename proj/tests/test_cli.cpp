#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "fcoh/io.hpp"

namespace fs = std::filesystem;
using fcoh::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fcoh");
  std::ostringstream out, err;
  const int code = fcoh::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "fcoh_test_cli";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kHalfIdentity = R"({"dim": 2, "matrix": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]})";
const char* kPlus = R"({"dim": 2, "matrix": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]})";
const char* kSigmaY = R"({"dim": 2, "matrix": [[[0.5, 0], [0, -0.4]], [[0, 0.4], [0.5, 0]]]})";
const char* kSigmaX6 = R"({"dim": 2, "matrix": [[[0.5, 0], [0.3, 0]], [[0.3, 0], [0.5, 0]]]})";

}  // namespace

TEST_CASE("check") {
  CHECK(run({"check", write("half.json", kHalfIdentity)}).code == 0);
  const auto trace = run({"check", write("trace.json", R"({"dim": 2, "matrix": [[[0.45, 0], [0, 0]], [[0, 0], [0.45, 0]]]})")});
  CHECK(trace.code == 1);
  CHECK(trace.out.find("trace") != std::string::npos);
  CHECK(run({"check", write("nan.json", R"({"dim": 1, "matrix": [[[NaN, 0]]]})")}).code == 1);
  CHECK(run({"check", write("garbage.json", "{not json")}).code == 1);
  CHECK(run({"check", (scratch() / "missing.json").string()}).code == 1);
}

TEST_CASE("faithful") {
  auto plus = run({"faithful", write("plus.json", kPlus)});
  REQUIRE(plus.code == 0);
  auto j = json::parse(plus.out);
  CHECK(j["verdict"] == "faithful");
  CHECK(j["margin"] == 0.5);

  j = json::parse(run({"faithful", write("half.json", kHalfIdentity)}).out);
  CHECK(j["verdict"] == "unfaithful");

  const auto phase = run({"faithful", write("sy.json", kSigmaY), "--mode", "phase"});
  REQUIRE(phase.code == 0);
  j = json::parse(phase.out);
  CHECK(j["verdict"] == "unfaithful");
  CHECK(j["phase_detectable"] == true);
  CHECK(j["phase_overlap"] == 0.9);

  CHECK(run({"faithful", write("one.json", R"({"dim": 1, "matrix": [[[1, 0]]]})")}).code == 1);
  CHECK(run({"faithful", write("plus.json", kPlus), "--mode", "bogus"}).code == 1);

  const std::string bell =
      R"({"dim": 4, "matrix": [[[0.5,0],[0,0],[0,0],[0.5,0]],[[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],[[0.5,0],[0,0],[0,0],[0.5,0]]]})";
  const auto bi = run({"faithful", write("bell.json", bell), "--dims", "2", "2"});
  REQUIRE(bi.code == 0);
  j = json::parse(bi.out);
  CHECK(j["theorem"] == "bipartite");
  CHECK(j["best_overlap"] == 0.5);
  CHECK(run({"faithful", write("bell.json", bell), "--dims", "2", "3"}).code == 1);

  const auto report = (scratch() / "report.json").string();
  CHECK(run({"faithful", write("plus.json", kPlus), "--report", report}).code == 0);
  CHECK(fcoh::io::read_file(report)["verdict"] == "faithful");
}

TEST_CASE("decompose") {
  auto r = run({"decompose", write("w.json", R"({"psi": [[0.894427190999916, 0], [0.447213595499958, 0]]})")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["probabilities"][0]["p"] == doctest::Approx(0.75));
  CHECK(j["probabilities"][1]["p"] == doctest::Approx(0.25));

  r = run({"decompose", write("mc.json", R"({"psi": [[0.5, 0], [0.5, 0], [0.5, 0], [0.5, 0]]})")});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  int atoms = 0;
  for (const auto& e : j["probabilities"]) atoms += e["p"].get<double>() > 1e-12;
  CHECK(atoms == 1);

  r = run({"decompose", write("basis.json", R"({"psi": [[1, 0], [0, 0], [0, 0]]})")});
  REQUIRE(r.code == 0);
  for (const auto& e : json::parse(r.out)["probabilities"]) CHECK(e["p"] == 0.25);

  r = run({"decompose", write("cplx.json", R"({"psi": [[0.6, 0], [0, 0.8]]})")});
  CHECK(r.code == 1);
  CHECK(r.err.find("complex") != std::string::npos);
}

TEST_CASE("measures") {
  auto r = run({"measures", write("phi.json", kPlus)});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["c_r"].get<double>() == doctest::Approx(1.0));
  CHECK(j["c_max"].get<double>() == doctest::Approx(1.0));
  CHECK(j["rfcw_lhs"].get<double>() == doctest::Approx(2.0));
  CHECK(j["bound_satisfied"] == true);

  j = json::parse(run({"measures", write("half.json", kHalfIdentity)}).out);
  CHECK(j["c_r"] == 0.0);
  CHECK(std::abs(j["c_max"].get<double>()) < 1e-9);

  j = json::parse(run({"measures", write("sx6.json", kSigmaX6)}).out);
  CHECK(j["c_r"].get<double>() == doctest::Approx(0.278071).epsilon(1e-5));
  CHECK(j["c_max"].get<double>() == doctest::Approx(0.678071).epsilon(1e-5));
}

TEST_CASE("circuit") {
  auto r = run({"circuit", "+-"});
  CHECK(r.code == 0);
  CHECK(r.out == "QUBITS 1\nGATE action=Z target=0\n");

  r = run({"circuit", "+-++"});
  CHECK(r.out == "QUBITS 2\nGATE action=Z target=1 controls=0:0\n");

  r = run({"circuit", "--generator", "U_11", "--k", "3", "--verify"});
  CHECK(r.code == 0);
  CHECK(r.out == "QUBITS 3\nGATE action=Z target=2 controls=0:0,1:0\n");
  CHECK(r.err.find("verified") != std::string::npos);

  CHECK(run({"circuit", "-+"}).code == 1);
  CHECK(run({"circuit", "--generator", "U_77", "--k", "2"}).code == 1);
  CHECK(run({"circuit"}).code == 1);
}

TEST_CASE("random") {
  const auto a = run({"random", "--dim", "4", "--rank", "2", "--seed", "7"});
  const auto b = run({"random", "--dim", "4", "--rank", "2", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"check", write("rand.json", a.out)}).code == 0);

  const auto pure = run({"random", "--dim", "4", "--rank", "1", "--seed", "3"});
  const auto rho = fcoh::io::state_from_json(json::parse(pure.out));
  CHECK(std::abs(rho.purity() - 1.0) < 1e-10);

  CHECK(run({"random", "--dim", "3", "--rank", "4", "--seed", "1"}).code == 1);
  CHECK(run({"random", "--dim", "3"}).code == 1);
}

TEST_CASE("exit codes stay within 0..2") {
  for (const auto& args : std::vector<std::vector<std::string>>{{}, {"nonsense"}, {"check"}, {"--help"}}) {
    const int code = run(args).code;
    CHECK(code >= 0);
    CHECK(code <= 2);
  }
}
