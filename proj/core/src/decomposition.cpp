#include "fcoh/faithful.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fcoh/error.hpp"

namespace fcoh {

DecompositionCertificate decompose_witness(const PureState& psi) {
  const std::size_t d = psi.dim();
  if (d < 2) throw InvalidInput("decompose_witness: dimension must be >= 2");
  if (d > kMaxDecompositionDim) {
    throw InvalidInput("decompose_witness: dimension " + std::to_string(d) + " exceeds " +
                       std::to_string(kMaxDecompositionDim));
  }
  std::vector<double> raw(d);
  for (std::size_t i = 0; i < d; ++i) {
    const Complex z = psi[i];
    if (std::abs(z.imag()) > 1e-12) {
      throw InvalidInput("decompose_witness: amplitude " + std::to_string(i) +
                         " is complex; the reduction needs real nonnegative coefficients");
    }
    if (z.real() < -1e-12) {
      throw InvalidInput("decompose_witness: amplitude " + std::to_string(i) +
                         " is negative; the reduction needs real nonnegative coefficients");
    }
    raw[i] = std::max(0.0, z.real());
  }

  DecompositionCertificate cert;
  cert.dim = d;
  cert.permutation.resize(d);
  std::iota(cert.permutation.begin(), cert.permutation.end(), std::size_t{0});
  std::stable_sort(cert.permutation.begin(), cert.permutation.end(),
                   [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
  cert.betas.resize(d);
  for (std::size_t k = 0; k < d; ++k) cert.betas[k] = raw[cert.permutation[k]];

  const double beta1 = cert.betas[0];
  if (!(beta1 > 0.0)) throw InvalidInput("decompose_witness: leading amplitude is zero");

  cert.gammas.resize(d - 1);
  for (std::size_t j = 1; j < d; ++j) cert.gammas[j - 1] = std::clamp(cert.betas[j] / beta1, 0.0, 1.0);

  // Independent signs with E[a_j] = γ_j:  p_a = Π_j (1 + a_j γ_j)/2.
  // Accumulate M = Σ_a p_a |φ_a><φ_a| alongside.
  const std::uint64_t total = std::uint64_t{1} << (d - 1);
  std::vector<double> m(d * d, 0.0);
  cert.probabilities.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    SignVector a = SignVector::from_mask(d, mask);
    double p = 1.0;
    for (std::size_t j = 0; j + 1 < d; ++j) p *= 0.5 * (1.0 + a[j] * cert.gammas[j]);
    if (p != 0.0) {
      const auto s = a.pattern();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) m[i * d + k] += p * s[i] * s[k] / double(d);
    }
    cert.probabilities.emplace_back(std::move(a), p);
  }

  // D = W - d·β1²·Σ p_a (I/d - |φ_a><φ_a|) = -ββ^T + d·β1²·M   (α = β1²)
  const double scale = double(d) * beta1 * beta1;
  cert.residual_diag.resize(d);
  double off = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const double dik = -cert.betas[i] * cert.betas[k] + scale * m[i * d + k];
      if (i == k) {
        cert.residual_diag[i] = dik;
      } else {
        off += dik * dik;
      }
    }
  }
  cert.offdiag_norm = std::sqrt(off);
  return cert;
}

DecompositionCertificate::Check DecompositionCertificate::verify() const {
  Check c;
  auto fail = [&](const std::string& msg) {
    c.ok = false;
    c.failures.push_back(msg);
  };
  double sum = 0.0;
  for (const auto& [a, p] : probabilities) {
    if (p < 0.0) fail("negative probability for " + a.to_string());
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(12);
    os << "probabilities sum to " << sum;
    fail(os.str());
  }
  for (std::size_t i = 0; i < residual_diag.size(); ++i)
    if (residual_diag[i] < -1e-12) fail("residual diagonal entry " + std::to_string(i) + " is negative");
  if (!(offdiag_norm <= 1e-10)) fail("residual has off-diagonal mass " + std::to_string(offdiag_norm));
  return c;
}

}  // namespace fcoh
