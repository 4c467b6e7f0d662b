#include "fcoh/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fcoh {

FidelityWitness::FidelityWitness(double alpha, PureState target) : alpha_(alpha), target_(std::move(target)) {
  if (!(alpha > 0.0 && alpha <= 1.0 + 1e-12)) {
    throw InvalidInput("fidelity witness: alpha must lie in (0,1], got " + std::to_string(alpha));
  }
  if (alpha < alpha_of(target_) - 1e-12) {
    throw InvalidInput("fidelity witness: alpha below max_i |psi_i|^2, not a valid witness");
  }
}

ComplexMatrix FidelityWitness::matrix() const {
  ComplexMatrix w = Complex(alpha_) * ComplexMatrix::identity(dim());
  w -= target_.projector();
  return w;
}

double alpha_of(const PureState& psi) {
  double best = 0.0;
  for (const auto& z : psi.amplitudes()) best = std::max(best, std::norm(z));
  return best;
}

FidelityWitness build_witness(const PureState& psi) { return FidelityWitness(alpha_of(psi), psi); }

double evaluate(const FidelityWitness& w, const DensityMatrix& rho) {
  if (w.dim() != rho.dim()) throw DimensionMismatch("evaluate: witness and state dimensions differ");
  return w.alpha() - expectation(rho.matrix(), w.target().amplitudes());
}

PureState rfcw_state(const SignVector& a) {
  const std::size_t d = a.dim();
  const double amp = 1.0 / std::sqrt(double(d));
  std::vector<Complex> v(d);
  v[0] = amp;
  for (std::size_t j = 1; j < d; ++j) v[j] = amp * double(a[j - 1]);
  return PureState::from_amplitudes(std::move(v));
}

FidelityWitness rfcw(const SignVector& a) { return FidelityWitness(1.0 / double(a.dim()), rfcw_state(a)); }

double sign_overlap(const DensityMatrix& rho, std::span<const int> pattern) {
  const std::size_t d = rho.dim();
  if (pattern.size() != d) throw DimensionMismatch("sign_overlap: pattern length does not match state");
  double diag = 0.0;
  double off = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    diag += rho(j, j).real();
    double row = 0.0;
    for (std::size_t k = j + 1; k < d; ++k) row += pattern[k] * rho(j, k).real();
    off += pattern[j] * row;
  }
  return (diag + 2.0 * off) / double(d);
}

double sign_overlap(const DensityMatrix& rho, const SignVector& a) {
  const auto p = a.pattern();
  return sign_overlap(rho, p);
}

}  // namespace fcoh
