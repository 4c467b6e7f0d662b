#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "fcoh/error.hpp"
#include "fcoh/measures.hpp"

namespace fcoh {

namespace {

struct Slack {
  ComplexMatrix chol;  // S = diag(x) - ρ = L·L^dagger
  double log_det = 0.0;
};

std::optional<Slack> factor_slack(const DensityMatrix& rho, const std::vector<double>& x) {
  ComplexMatrix s = Complex(-1.0) * rho.matrix();
  for (std::size_t i = 0; i < x.size(); ++i) s(i, i) += x[i];
  auto l = cholesky(s);
  if (!l) return std::nullopt;
  double ld = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) ld += 2.0 * std::log((*l)(i, i).real());
  if (!std::isfinite(ld)) return std::nullopt;
  return Slack{std::move(*l), ld};
}

double barrier_objective(const std::vector<double>& x, double mu, double log_det) {
  double s = 0.0;
  for (double xi : x) s += xi;
  return s - mu * log_det;
}

// Tr(ρY) for Y = μ S^{-1} rescaled to unit diagonal; Y is a Gram matrix and
// therefore PSD regardless of rounding in the inverse.
double dual_value(const DensityMatrix& rho, const ComplexMatrix& s_inv) {
  const std::size_t d = rho.dim();
  std::vector<double> scale(d);
  for (std::size_t i = 0; i < d; ++i) scale[i] = 1.0 / std::sqrt(s_inv(i, i).real());
  double t = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t += (rho(i, j) * s_inv(j, i)).real() * scale[i] * scale[j];
  return t;
}

}  // namespace

CmaxNotConverged::CmaxNotConverged(double primal, double dual)
    : NumericalFailure([&] {
        std::ostringstream os;
        os.precision(12);
        os << "c_max: solver did not converge (primal " << primal << ", dual " << dual << ", gap " << primal - dual
           << ")";
        return os.str();
      }()),
      primal_(primal),
      dual_(dual) {}

CmaxResult c_max(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  CmaxResult res;
  if (d == 1) {
    res.primal_trace = res.dual_bound = res.dual_matrix_value = res.dual_phase_value = 1.0;
    res.primal_diag = {1.0};
    res.dual_witness = {0.0};
    res.min_slack_eigenvalue = 0.0;
    return res;
  }

  // ρ <= I, so x = 2 is strictly feasible.
  std::vector<double> x(d, 2.0);
  auto slack = factor_slack(rho, x);
  if (!slack) throw NumericalFailure("c_max: initial point is not strictly feasible");

  double mu = 0.1;
  double best_dual = -std::numeric_limits<double>::infinity();
  int steps = 0;
  std::vector<double> h(d * d), g(d);

  for (;;) {
    // Centering for fixed μ.
    for (int inner = 0; inner < 200 && steps < kCmaxMaxNewtonSteps; ++inner, ++steps) {
      const ComplexMatrix s_inv = inverse_from_cholesky(slack->chol);
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = 1.0 - mu * s_inv(i, i).real();
        for (std::size_t j = 0; j < d; ++j) h[i * d + j] = mu * std::norm(s_inv(i, j));
      }
      auto step = solve_spd(h, g);
      if (!step) {
        double hmax = 0.0;
        for (std::size_t i = 0; i < d; ++i) hmax = std::max(hmax, h[i * d + i]);
        auto hreg = h;
        for (std::size_t i = 0; i < d; ++i) hreg[i * d + i] += 1e-12 * hmax;
        step = solve_spd(hreg, g);
        if (!step) break;
      }
      double decrement = 0.0;
      for (std::size_t i = 0; i < d; ++i) decrement += g[i] * (*step)[i];
      if (decrement / 2.0 <= 1e-14) break;

      const double f0 = barrier_objective(x, mu, slack->log_det);
      double t = 1.0;
      std::vector<double> trial(d);
      std::optional<Slack> trial_slack;
      for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
        for (std::size_t i = 0; i < d; ++i) trial[i] = x[i] - t * (*step)[i];
        trial_slack = factor_slack(rho, trial);
        if (trial_slack && barrier_objective(trial, mu, trial_slack->log_det) <= f0 - 0.25 * t * decrement) break;
        trial_slack.reset();
      }
      if (!trial_slack) break;
      x = std::move(trial);
      slack = std::move(trial_slack);
    }

    best_dual = std::max(best_dual, dual_value(rho, inverse_from_cholesky(slack->chol)));
    double primal = 0.0;
    for (double xi : x) primal += xi;
    const bool done = primal - best_dual <= kCmaxTargetGap || mu < 1e-15 || steps >= kCmaxMaxNewtonSteps;
    if (done) break;
    mu *= 0.1;
  }

  res.newton_steps = steps;
  res.primal_diag = x;
  res.primal_trace = 0.0;
  for (double xi : x) res.primal_trace += xi;
  res.dual_matrix_value = best_dual;

  const PhaseSearch phases = phase_ascent(rho);
  res.dual_witness = phases.phases;
  res.dual_phase_value = double(d) * phases.overlap;

  res.dual_bound = std::max(res.dual_matrix_value, res.dual_phase_value);
  res.gap = res.primal_trace - res.dual_bound;
  res.value = std::log2(res.primal_trace);

  ComplexMatrix s = Complex(-1.0) * rho.matrix();
  for (std::size_t i = 0; i < d; ++i) s(i, i) += x[i];
  res.min_slack_eigenvalue = eigenvalues(s).front();

  if (res.gap > kCmaxFailureGap) {
    throw CmaxNotConverged(res.primal_trace, res.dual_bound);
  }
  return res;
}

}  // namespace fcoh
