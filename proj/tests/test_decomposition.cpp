#include "doctest.h"
#include "fcoh/faithful.hpp"
#include "fcoh/witness.hpp"
#include "oracles.hpp"

using namespace fcoh;

namespace {

double prob_of(const DecompositionCertificate& c, const SignVector& a) {
  for (const auto& [s, p] : c.probabilities)
    if (s == a) return p;
  return -1.0;
}

// W - dβ1²·Σ p_a W_a built densely in the sorted frame.
ComplexMatrix dense_residual(const DecompositionCertificate& c) {
  const std::size_t d = c.dim;
  std::vector<Complex> beta(c.betas.begin(), c.betas.end());
  const double b1 = c.betas[0];
  ComplexMatrix w = Complex(b1 * b1) * ComplexMatrix::identity(d) - ComplexMatrix::outer(beta, beta);
  ComplexMatrix mix(d, d);
  for (const auto& [a, p] : c.probabilities) mix += Complex(p) * rfcw(a).matrix();
  return w - Complex(d * b1 * b1) * mix;
}

}  // namespace

TEST_CASE("qubit certificate") {
  const auto c = decompose_witness(PureState::from_amplitudes({std::sqrt(0.8), std::sqrt(0.2)}));
  REQUIRE(c.gammas.size() == 1);
  CHECK(c.gammas[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(prob_of(c, SignVector{1}) == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(prob_of(c, SignVector{-1}) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(std::abs(c.residual_diag[0]) < 1e-14);
  CHECK(c.residual_diag[1] == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(c.offdiag_norm < 1e-14);
  CHECK(c.verify().ok);
}

TEST_CASE("maximally coherent target concentrates on all-plus") {
  for (std::size_t d = 2; d <= 7; ++d) {
    const auto c = decompose_witness(maximally_coherent(d));
    CHECK(prob_of(c, SignVector::identity(d)) == doctest::Approx(1.0));
    for (double g : c.gammas) CHECK(g == doctest::Approx(1.0));
    for (double r : c.residual_diag) CHECK(std::abs(r) < 1e-14);
    CHECK(c.offdiag_norm < 1e-14);
  }
}

TEST_CASE("basis target gives uniform probabilities") {
  for (std::size_t d = 2; d <= 6; ++d) {
    const auto c = decompose_witness(PureState::basis(d, 0));
    const double u = 1.0 / double(1u << (d - 1));
    for (const auto& [a, p] : c.probabilities) CHECK(p == doctest::Approx(u));
    CHECK(std::abs(c.residual_diag[0]) < 1e-14);
    for (std::size_t i = 1; i < d; ++i) CHECK(c.residual_diag[i] == doctest::Approx(1.0));
    CHECK(c.offdiag_norm < 1e-14);
  }
}

TEST_CASE("unsorted amplitudes are sorted and the permutation reported") {
  const auto psi = PureState::normalized({0.1, 0.7, 0.0, 0.4});
  const auto c = decompose_witness(psi);
  CHECK(c.permutation == std::vector<std::size_t>{1, 3, 0, 2});
  CHECK(std::is_sorted(c.betas.rbegin(), c.betas.rend()));
  CHECK(c.verify().ok);
}

TEST_CASE("residual matches a dense reconstruction and is diagonal PSD") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const auto c = decompose_witness(oracle::random_real_psi(d, rng));
    const ComplexMatrix r = dense_residual(c);
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(std::abs(r(i, i).real() - c.residual_diag[i]) < 1e-12);
      CHECK(std::abs(c.residual_diag[i] - (c.betas[0] * c.betas[0] - c.betas[i] * c.betas[i])) < 1e-10);
    }
    CHECK(is_psd(r, 1e-10));
    CHECK(c.verify().ok);
  }
}

TEST_CASE("moment identities") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const auto c = decompose_witness(oracle::random_real_psi(d, rng));
    for (std::size_t j = 0; j + 1 < d; ++j) {
      double m1 = 0.0;
      for (const auto& [a, p] : c.probabilities) m1 += p * a[j];
      CHECK(std::abs(m1 - c.gammas[j]) < 1e-12);
      for (std::size_t k = j + 1; k + 1 < d; ++k) {
        double m2 = 0.0;
        for (const auto& [a, p] : c.probabilities) m2 += p * a[j] * a[k];
        CHECK(std::abs(m2 - c.gammas[j] * c.gammas[k]) < 1e-12);
      }
    }
  }
}

TEST_CASE("decompose_witness rejects complex, negative and oversized targets") {
  CHECK_THROWS_AS(decompose_witness(PureState::normalized({1.0, Complex(0.0, 1.0)})), InvalidInput);
  CHECK_THROWS_AS(decompose_witness(PureState::normalized({1.0, -1.0})), InvalidInput);
  CHECK_THROWS_AS(decompose_witness(maximally_coherent(kMaxDecompositionDim + 1)), InvalidInput);
}

TEST_CASE("verify flags broken certificates") {
  auto c = decompose_witness(PureState::normalized({0.9, 0.3, 0.1}));
  c.probabilities[0].second += 0.1;
  CHECK_FALSE(c.verify().ok);
  auto c2 = decompose_witness(PureState::normalized({0.9, 0.3, 0.1}));
  c2.residual_diag[1] = -0.01;
  c2.offdiag_norm = 1e-3;
  const auto check = c2.verify();
  CHECK_FALSE(check.ok);
  CHECK(check.failures.size() == 2);
}
