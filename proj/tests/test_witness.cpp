#include "doctest.h"
#include "fcoh/witness.hpp"
#include "oracles.hpp"

using namespace fcoh;

TEST_CASE("alpha_of") {
  CHECK(alpha_of(PureState::from_amplitudes({std::sqrt(0.8), std::sqrt(0.2)})) == doctest::Approx(0.8));
  for (std::size_t d = 1; d <= 6; ++d) CHECK(alpha_of(maximally_coherent(d)) == doctest::Approx(1.0 / d));
  CHECK(alpha_of(PureState::basis(3, 1)) == 1.0);
  CHECK(alpha_of(PureState::normalized({Complex(0.0, 2.0), 1.0})) == doctest::Approx(0.8));
}

TEST_CASE("build_witness") {
  const auto w = build_witness(maximally_coherent(2));
  const ComplexMatrix expected = Complex(0.5) * ComplexMatrix::identity(2) - maximally_coherent(2).projector();
  CHECK(oracle::max_diff(w.matrix(), expected) < 1e-15);

  const auto basis = build_witness(PureState::basis(2, 0));
  CHECK(basis.alpha() == 1.0);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    CHECK(evaluate(basis, random_density(2, 1 + trial % 2, rng())) >= -1e-12);
  }

  const auto w2 = build_witness(PureState::from_amplitudes({std::sqrt(0.8), std::sqrt(0.2)}));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double p = u(rng);
    CHECK(evaluate(w2, IncoherentState::from_probabilities({p, 1.0 - p}).density()) >= 0.0);
  }

  CHECK_THROWS_AS(FidelityWitness(0.5, PureState::basis(2, 0)), InvalidInput);
  CHECK_THROWS_AS(FidelityWitness(0.0, maximally_coherent(2)), InvalidInput);
}

TEST_CASE("evaluate") {
  const auto w = build_witness(maximally_coherent(2));
  CHECK(evaluate(w, maximally_coherent(2).density()) == doctest::Approx(-0.5));
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto rfcw_d = build_witness(maximally_coherent(d));
    const auto mixed = DensityMatrix::validate(Complex(1.0 / d) * ComplexMatrix::identity(d));
    CHECK(std::abs(evaluate(rfcw_d, mixed)) < 1e-15);
  }
  const auto psi = random_pure(4, 17);
  const auto own = build_witness(psi);
  CHECK(evaluate(own, psi.density()) == doctest::Approx(own.alpha() - 1.0));
  CHECK(evaluate(own, psi.density()) <= 0.0);
  CHECK_THROWS_AS(evaluate(own, random_density(3, 3, 1)), DimensionMismatch);
}

TEST_CASE("evaluate is affine in the state") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = build_witness(random_pure(4, rng()));
    const auto r1 = random_density(4, 2, rng());
    const auto r2 = random_density(4, 4, rng());
    const double p = u(rng);
    const double lhs = evaluate(w, mix(p, r1, r2));
    const double rhs = p * evaluate(w, r1) + (1.0 - p) * evaluate(w, r2);
    CHECK(std::abs(lhs - rhs) < 1e-12);
  }
}

TEST_CASE("witnesses are nonnegative on every incoherent vertex") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 6;
    const auto w = build_witness(random_pure(d, rng()));
    for (std::size_t i = 0; i < d; ++i) CHECK(evaluate(w, PureState::basis(d, i).density()) >= -1e-12);
  }
}

TEST_CASE("RFCWs vanish on every incoherent vertex") {
  for (std::size_t d = 2; d <= 6; ++d) {
    for (std::uint64_t mask = 0; mask < (1u << (d - 1)); ++mask) {
      const auto w = rfcw(SignVector::from_mask(d, mask));
      for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(evaluate(w, PureState::basis(d, i).density())) < 1e-14);
    }
  }
}

TEST_CASE("rfcw_state") {
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  auto amps = [](const PureState& s) { return std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()); };
  CHECK(amps(rfcw_state(SignVector{1})) == std::vector<Complex>{r2, r2});
  CHECK(amps(rfcw_state(SignVector{-1})) == std::vector<Complex>{r2, -r2});
  CHECK(amps(rfcw_state(SignVector{-1, 1})) == std::vector<Complex>{r3, -r3, r3});
  CHECK_THROWS_AS(SignVector({1, 0}), InvalidInput);
}

TEST_CASE("sign_overlap agrees with the dense expectation") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const auto rho = random_density(d, 1 + trial % d, rng());
    const auto a = SignVector::from_mask(d, rng() % (1u << (d - 1)));
    CHECK(std::abs(sign_overlap(rho, a) - expectation(rho.matrix(), rfcw_state(a).amplitudes())) < 1e-14);
  }
}
