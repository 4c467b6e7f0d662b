#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fcoh/error.hpp"
#include "fcoh/linalg.hpp"

namespace fcoh {

inline constexpr double kStateTolerance = 1e-8;
inline constexpr double kNormTolerance = 1e-10;

enum class StateViolation {
  NotSquare,
  Empty,
  NonFinite,
  NotHermitian,
  Trace,
  NegativeEigenvalue,
};

std::string to_string(StateViolation v);

struct StateIssue {
  StateViolation kind;
  std::string detail;
};

/// Thrown by DensityMatrix::validate; `violation()` names the first failed check.
class InvalidState : public InvalidInput {
 public:
  InvalidState(StateViolation kind, const std::string& detail)
      : InvalidInput(to_string(kind) + ": " + detail), kind_(kind) {}
  StateViolation violation() const noexcept { return kind_; }

 private:
  StateViolation kind_;
};

/// Every invariant violated by `raw`, in check order: shape, finiteness,
/// hermiticity, unit trace, positivity. The eigenvalue check is skipped
/// when the matrix is not Hermitian.
std::vector<StateIssue> state_violations(const ComplexMatrix& raw, double tol = kStateTolerance);

/// Hermitian, unit-trace, PSD matrix. Only constructible through validate(),
/// so downstream code may assume the invariants.
class DensityMatrix {
 public:
  /// Throws InvalidState on the first violated invariant. The stored matrix is
  /// the Hermitian part of `raw`.
  static DensityMatrix validate(const ComplexMatrix& raw, double tol = kStateTolerance);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  double purity() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  friend DensityMatrix dephase(const DensityMatrix&);
  friend DensityMatrix mix(double, const DensityMatrix&, const DensityMatrix&);

  ComplexMatrix matrix_;
};

/// Normalized state vector.
class PureState {
 public:
  /// Throws InvalidInput unless ||amplitudes|| = 1 within kNormTolerance.
  static PureState from_amplitudes(std::vector<Complex> amplitudes);
  /// Rescales to unit norm. Throws InvalidInput for the zero vector.
  static PureState normalized(std::vector<Complex> amplitudes);
  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  ComplexMatrix projector() const;
  DensityMatrix density() const;

 private:
  explicit PureState(std::vector<Complex> a) : amps_(std::move(a)) {}
  std::vector<Complex> amps_;
};

/// Diagonal state sum_i p_i |i><i|.
class IncoherentState {
 public:
  static IncoherentState from_probabilities(std::vector<double> p);

  std::size_t dim() const noexcept { return probs_.size(); }
  std::span<const double> probabilities() const noexcept { return probs_; }
  DensityMatrix density() const;

 private:
  explicit IncoherentState(std::vector<double> p) : probs_(std::move(p)) {}
  std::vector<double> probs_;
};

struct BlochVector {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;

  double norm() const;
};

/// Δ(ρ): keeps the diagonal, zeroes every off-diagonal entry.
DensityMatrix dephase(const DensityMatrix& rho);

/// p·a + (1-p)·b for p in [0,1].
DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b);

/// (1,...,1)/sqrt(d). Throws InvalidInput for d = 0.
PureState maximally_coherent(std::size_t d);

/// ½(I + s·σ). Throws InvalidInput when |s| > 1 + 1e-10.
DensityMatrix bloch_to_density(const BlochVector& b);
/// s_i = Tr(ρσ_i). Throws DimensionMismatch unless dim = 2.
BlochVector density_to_bloch(const DensityMatrix& rho);

/// G·G^dagger / Tr(G·G^dagger), G a d×rank matrix of standard complex
/// Gaussians drawn from mt19937_64(seed). Throws InvalidInput unless 1 <= rank <= d.
DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed);

/// Haar-distributed pure state (normalized complex Gaussian vector).
PureState random_pure(std::size_t d, std::uint64_t seed);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace fcoh
