#include "fcoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fcoh/error.hpp"
#include "fcoh/witness.hpp"

namespace fcoh {

namespace {

double entropy_of(const std::vector<double>& eigs) {
  double s = 0.0;
  for (double l : eigs) {
    if (l < -kStateTolerance) throw InvalidInput("entropy: eigenvalue " + std::to_string(l) + " is negative");
    if (l <= 0.0) continue;
    s -= l * std::log2(l);
  }
  return s;
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) { return entropy_of(eigenvalues(rho.matrix())); }

double relative_entropy_coherence(const DensityMatrix& rho) {
  std::vector<double> diag(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) diag[i] = rho(i, i).real();
  const double c = entropy_of(diag) - von_neumann_entropy(rho);
  return std::max(c, 0.0);
}

double d_max(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("d_max: dimension mismatch");
  const auto es = hermitian_eig(sigma.matrix());

  // Mass of ρ outside supp(σ).
  const ComplexMatrix outside = es.reconstruct([](double l) { return l > kSupportThreshold ? 0.0 : 1.0; });
  const double leak = multiply(outside, rho.matrix()).trace().real();
  if (leak > kSupportThreshold) return std::numeric_limits<double>::infinity();

  const ComplexMatrix inv_sqrt =
      es.reconstruct([](double l) { return l > kSupportThreshold ? 1.0 / std::sqrt(l) : 0.0; });
  const ComplexMatrix m = multiply(multiply(inv_sqrt, rho.matrix()), inv_sqrt);
  const double lmax = eigenvalues(m, 1e-6).back();
  if (!(lmax > 0.0)) return -std::numeric_limits<double>::infinity();
  return std::log2(lmax);
}

double d_min(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw DimensionMismatch("d_min: dimension mismatch");
  const auto er = hermitian_eig(rho.matrix());
  const ComplexMatrix proj = er.reconstruct([](double l) { return l > kSupportThreshold ? 1.0 : 0.0; });
  const double t = multiply(proj, sigma.matrix()).trace().real();
  if (t <= 1e-14) return std::numeric_limits<double>::infinity();
  return -std::log2(t);
}

MeasureReport rfcw_bound(const DensityMatrix& rho) {
  MeasureReport r;
  r.c_r = relative_entropy_coherence(rho);
  r.c_max = c_max(rho);
  if (rho.dim() == 1) {
    r.rfcw_lhs = 1.0;
    r.bound_satisfied = r.rfcw_lhs <= std::exp2(r.c_max.value) + kBoundSlack;
    return r;
  }
  const auto best = is_faithful(rho);
  r.best_sign = best.best_sign;
  r.rfcw_lhs = 1.0 - double(rho.dim()) * evaluate(rfcw(best.best_sign), rho);
  r.bound_satisfied = r.rfcw_lhs <= std::exp2(r.c_max.value) + kBoundSlack;
  return r;
}

}  // namespace fcoh
