#pragma once

#include "fcoh/linalg.hpp"
#include "fcoh/sign_vector.hpp"
#include "fcoh/states.hpp"

namespace fcoh {

/// W = alpha·I - |psi><psi|.
///
/// Valid as a coherence witness (Tr(Wδ) >= 0 on every incoherent δ) exactly
/// when alpha is at least the largest squared amplitude of psi; the
/// constructor enforces that with 1e-12 slack.
class FidelityWitness {
 public:
  FidelityWitness(double alpha, PureState target);

  double alpha() const noexcept { return alpha_; }
  const PureState& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return target_.dim(); }

  ComplexMatrix matrix() const;

 private:
  double alpha_;
  PureState target_;
};

/// max_i |psi_i|^2, the largest overlap of psi with an incoherent state.
double alpha_of(const PureState& psi);

/// The tightest fidelity witness for psi.
FidelityWitness build_witness(const PureState& psi);

/// Tr(Wρ) = alpha - <psi|ρ|psi>. Negative values detect coherence.
double evaluate(const FidelityWitness& w, const DensityMatrix& rho);

/// |φ_a> = (|1> + Σ_j a_j|j>)/sqrt(d).
PureState rfcw_state(const SignVector& a);

/// I/d - |φ_a><φ_a| as a FidelityWitness (alpha = 1/d).
FidelityWitness rfcw(const SignVector& a);

/// <φ_a|ρ|φ_a> = (1/d) Σ_jk s_j s_k Re ρ_jk with s = (1, a). Allocation-free.
double sign_overlap(const DensityMatrix& rho, std::span<const int> pattern);
double sign_overlap(const DensityMatrix& rho, const SignVector& a);

}  // namespace fcoh
