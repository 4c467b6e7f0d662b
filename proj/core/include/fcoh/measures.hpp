#pragma once

#include <vector>

#include "fcoh/error.hpp"
#include "fcoh/faithful.hpp"
#include "fcoh/linalg.hpp"
#include "fcoh/states.hpp"

namespace fcoh {

// All entropies and relative entropies are in bits.

/// -Σ λ log2 λ with 0·log 0 = 0. Eigenvalues in [-1e-10, 0) are clamped;
/// anything below -1e-8 throws InvalidInput.
double von_neumann_entropy(const DensityMatrix& rho);

/// C_r(ρ) = S(Δ(ρ)) - S(ρ), clamped at 0. Equals the distillable coherence.
double relative_entropy_coherence(const DensityMatrix& rho);

inline constexpr double kSupportThreshold = 1e-9;

/// min{λ : ρ <= 2^λ σ}, evaluated as log2 λ_max(σ^{-1/2} ρ σ^{-1/2}) on the
/// support of σ. +infinity when ρ leaks outside that support.
double d_max(const DensityMatrix& rho, const DensityMatrix& sigma);

/// -log2 Tr(P_ρ σ), P_ρ the projector onto eigenvalues of ρ above 1e-9.
/// +infinity when the trace is <= 1e-14.
double d_min(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Primal/dual bracket for C_max(ρ) = log2 min{Tr X : X diagonal, X >= ρ}.
struct CmaxResult {
  double value = 0.0;         // log2(primal_trace)
  double primal_trace = 0.0;  // Tr X for a feasible X
  double dual_bound = 0.0;    // Tr(ρY) for a feasible Y (Y >= 0, diag Y = 1)
  double gap = 0.0;           // primal_trace - dual_bound
  std::vector<double> primal_diag;
  std::vector<double> dual_witness;  // phases θ of the rank-1 dual d·|φ_θ><φ_θ|
  double dual_phase_value = 0.0;     // d·<φ_θ|ρ|φ_θ>
  double dual_matrix_value = 0.0;    // Tr(ρY) for the barrier dual matrix
  double min_slack_eigenvalue = 0.0; // λ_min(diag(X) - ρ)
  int newton_steps = 0;
};

/// Carries both bounds when c_max gives up.
class CmaxNotConverged : public NumericalFailure {
 public:
  CmaxNotConverged(double primal, double dual);
  double primal() const noexcept { return primal_; }
  double dual() const noexcept { return dual_; }

 private:
  double primal_;
  double dual_;
};

inline constexpr double kCmaxTargetGap = 1e-9;
inline constexpr double kCmaxFailureGap = 1e-4;
inline constexpr int kCmaxMaxNewtonSteps = 5000;

/// Log-barrier path following on the diagonal majorizer problem.
///
/// Minimizes Σx - μ·log det(diag(x) - ρ) by damped Newton steps for a
/// decreasing sequence of μ. Each centered point yields the dual matrix
/// Y = μ·(diag(x) - ρ)^{-1}, rescaled to unit diagonal, so the primal trace and
/// Tr(ρY) bracket the optimum. The dual bound also takes the phase
/// coordinate-ascent value, whichever is larger. Throws NumericalFailure
/// (message carries both bounds) if the gap exceeds kCmaxFailureGap after
/// the step cap.
CmaxResult c_max(const DensityMatrix& rho);

struct MeasureReport {
  double c_r = 0.0;
  CmaxResult c_max;
  SignVector best_sign;
  double rfcw_lhs = 0.0;  // 1 - d·Tr(W_a* ρ) = d·<φ_a*|ρ|φ_a*>
  bool bound_satisfied = false;
};

inline constexpr double kBoundSlack = 1e-6;

/// Best RFCW measurement as a lower bound on 2^{C_max}, bundled with C_r and C_max.
MeasureReport rfcw_bound(const DensityMatrix& rho);

}  // namespace fcoh
