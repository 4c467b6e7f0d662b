#include "doctest.h"
#include "fcoh/io.hpp"
#include "oracles.hpp"

using namespace fcoh;

TEST_CASE("round_sig") {
  CHECK(io::round_sig(0.0) == 0.0);
  CHECK(io::round_sig(1.0 / 3.0) == 0.333333333333);
  CHECK(io::round_sig(123456.7890123456) == 123456.789012);
  CHECK(io::round_sig(-2.5e-20, 3) == -2.5e-20);
}

TEST_CASE("state JSON round trip") {
  const auto rho = random_density(3, 2, 9);
  const auto back = io::state_from_json(io::parse(io::dump(io::to_json(rho))));
  CHECK(oracle::max_diff(back.matrix(), rho.matrix()) < 1e-11);
  CHECK(io::dump(io::to_json(rho)) == io::dump(io::to_json(random_density(3, 2, 9))));
}

TEST_CASE("state JSON errors") {
  CHECK_THROWS_AS(io::parse("{\"dim\": 1, \"matrix\": [[[NaN, 0]]]}"), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_state_json(io::parse("{\"dim\": 2}")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_state_json(io::parse("{\"dim\": 2, \"matrix\": [[[1,0],[0,0]]]}")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_state_json(io::parse("{\"dim\": 1, \"matrix\": [[[1]]]}")), InvalidInput);
  CHECK_THROWS_AS(io::matrix_from_state_json(io::parse("{\"dim\": 1, \"matrix\": [[[1e400, 0]]]}")), InvalidInput);
  CHECK_THROWS_WITH(io::state_from_json(io::parse("{\"dim\": 1, \"matrix\": [[[0.9, 0]]]}")),
                    doctest::Contains("trace"));
  CHECK_THROWS_AS(io::read_file("/nonexistent/state.json"), InvalidInput);
}

TEST_CASE("witness JSON") {
  const auto w = io::witness_from_json(io::parse("{\"psi\": [[0.8944271909999159, 0], [0.4472135954999579, 0]]}"));
  CHECK(w.alpha() == doctest::Approx(0.8));
  const auto w2 = io::witness_from_json(io::to_json(w));
  CHECK(w2.alpha() == doctest::Approx(0.8));
  CHECK_THROWS_AS(io::witness_from_json(io::parse("{\"alpha\": 0.1, \"psi\": [[1, 0], [0, 0]]}")), InvalidInput);
  CHECK_THROWS_AS(io::witness_from_json(io::parse("{\"psi\": [[1, 0], [1, 0]]}")), InvalidInput);
}

TEST_CASE("report JSON keys") {
  const auto r = io::to_json(is_faithful(bloch_to_density({0.6, 0, 0})));
  CHECK(r["verdict"] == "faithful");
  CHECK(r["mode"] == "full");
  CHECK(r["best_overlap"] == 0.8);
  CHECK(r["threshold"] == 0.5);
  CHECK(r["margin"] == 0.3);
  CHECK(r["best_sign"] == io::json::array({1}));
  CHECK(r["marginal"] == false);
  CHECK(r["qubit_criterion_conflict"] == false);

  const auto b = io::to_json(is_faithful_bipartite(PureState::normalized({1.0, 0.0, 0.0, 1.0}).density(), 2, 2));
  CHECK(b["theorem"] == "bipartite");
  CHECK(b["dims"] == io::json::array({2, 2}));
  CHECK(b.contains("best_sign_b"));
  CHECK(b.contains("literal_threshold"));

  const auto m = io::to_json(rfcw_bound(maximally_coherent(2).density()));
  for (const char* key : {"c_r", "c_max", "c_max_gap", "rfcw_lhs", "bound_satisfied"}) CHECK(m.contains(key));
  CHECK(m["bound_satisfied"] == true);

  const auto c = io::to_json(decompose_witness(PureState::from_amplitudes({std::sqrt(0.8), std::sqrt(0.2)})));
  CHECK(c["valid"] == true);
  CHECK(c["probabilities"][0]["p"] == 0.75);
  CHECK(c["probabilities"][1]["p"] == 0.25);
}
