#include "fcoh/states.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace fcoh {

std::string to_string(StateViolation v) {
  switch (v) {
    case StateViolation::NotSquare: return "not square";
    case StateViolation::Empty: return "empty";
    case StateViolation::NonFinite: return "non-finite entry";
    case StateViolation::NotHermitian: return "not Hermitian";
    case StateViolation::Trace: return "trace";
    case StateViolation::NegativeEigenvalue: return "negative eigenvalue";
  }
  return "unknown";
}

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

std::vector<StateIssue> state_violations(const ComplexMatrix& raw, double tol) {
  std::vector<StateIssue> issues;
  if (!raw.is_square()) {
    issues.push_back({StateViolation::NotSquare,
                      std::to_string(raw.rows()) + "x" + std::to_string(raw.cols())});
    return issues;
  }
  if (raw.rows() == 0) {
    issues.push_back({StateViolation::Empty, "dimension 0"});
    return issues;
  }
  if (!raw.all_finite()) {
    issues.push_back({StateViolation::NonFinite, "matrix contains NaN or Inf"});
    return issues;
  }
  const double defect = hermiticity_defect(raw);
  const bool hermitian = defect <= tol;
  if (!hermitian) {
    issues.push_back({StateViolation::NotHermitian, "max |rho - rho^dagger| = " + fmt(defect)});
  }
  const double tr = raw.trace().real();
  if (std::abs(tr - 1.0) > tol || std::abs(raw.trace().imag()) > tol) {
    issues.push_back({StateViolation::Trace, "trace = " + fmt(tr) + ", expected 1"});
  }
  if (hermitian) {
    const double lmin = eigenvalues(raw, tol).front();
    if (lmin < -tol) {
      issues.push_back({StateViolation::NegativeEigenvalue, "min eigenvalue = " + fmt(lmin)});
    }
  }
  return issues;
}

DensityMatrix DensityMatrix::validate(const ComplexMatrix& raw, double tol) {
  const auto issues = state_violations(raw, tol);
  if (!issues.empty()) throw InvalidState(issues.front().kind, issues.front().detail);
  const std::size_t n = raw.rows();
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = raw(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  return DensityMatrix(std::move(h));
}

double DensityMatrix::purity() const {
  double s = 0.0;
  for (const auto& z : matrix_.entries()) s += std::norm(z);
  return s;
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) throw InvalidInput("pure state: no amplitudes");
  for (const auto& z : amplitudes) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InvalidInput("pure state: non-finite amplitude");
  }
  const double n = norm2(amplitudes);
  if (std::abs(n * n - 1.0) > kNormTolerance) {
    throw InvalidInput("pure state: squared norm " + fmt(n * n) + " is not 1");
  }
  return PureState(std::move(amplitudes));
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  const double n = norm2(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("pure state: cannot normalize a zero or non-finite vector");
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw InvalidInput("pure state: basis index out of range");
  std::vector<Complex> a(dim);
  a[index] = 1.0;
  return PureState(std::move(a));
}

ComplexMatrix PureState::projector() const { return ComplexMatrix::outer(amps_, amps_); }

DensityMatrix PureState::density() const { return DensityMatrix::validate(projector()); }

IncoherentState IncoherentState::from_probabilities(std::vector<double> p) {
  if (p.empty()) throw InvalidInput("incoherent state: no probabilities");
  double sum = 0.0;
  for (double x : p) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("incoherent state: probability outside [0,1]");
    sum += x;
  }
  if (std::abs(sum - 1.0) > kNormTolerance) throw InvalidInput("incoherent state: probabilities sum to " + fmt(sum));
  return IncoherentState(std::move(p));
}

DensityMatrix IncoherentState::density() const {
  return DensityMatrix::validate(ComplexMatrix::diagonal(std::span<const double>(probs_)));
}

double BlochVector::norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

DensityMatrix dephase(const DensityMatrix& rho) {
  const std::size_t n = rho.dim();
  ComplexMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = rho(i, i);
  return DensityMatrix(std::move(d));
}

DensityMatrix mix(double p, const DensityMatrix& a, const DensityMatrix& b) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("mix: weight outside [0,1]");
  if (a.dim() != b.dim()) throw DimensionMismatch("mix: dimension mismatch");
  ComplexMatrix m = Complex(p) * a.matrix();
  m += Complex(1.0 - p) * b.matrix();
  return DensityMatrix(std::move(m));
}

PureState maximally_coherent(std::size_t d) {
  if (d == 0) throw InvalidInput("maximally_coherent: dimension must be >= 1");
  return PureState::from_amplitudes(std::vector<Complex>(d, Complex(1.0 / std::sqrt(double(d)))));
}

namespace pauli {
ComplexMatrix x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() { return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
ComplexMatrix z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

DensityMatrix bloch_to_density(const BlochVector& b) {
  if (!std::isfinite(b.norm()) || b.norm() > 1.0 + 1e-10) {
    throw InvalidInput("bloch vector: |s| = " + fmt(b.norm()) + " exceeds 1");
  }
  ComplexMatrix m{{0.5 * (1.0 + b.s3), 0.5 * Complex(b.s1, -b.s2)},
                  {0.5 * Complex(b.s1, b.s2), 0.5 * (1.0 - b.s3)}};
  return DensityMatrix::validate(m);
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw DimensionMismatch("density_to_bloch: state is not a qubit");
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

DensityMatrix random_density(std::size_t d, std::size_t rank, std::uint64_t seed) {
  if (d == 0) throw InvalidInput("random_density: dimension must be >= 1");
  if (rank < 1 || rank > d) throw InvalidInput("random_density: rank must lie in [1, dim]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(d, rank);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < rank; ++k) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, k) = Complex(re, im) / std::sqrt(2.0);
    }
  ComplexMatrix rho = multiply(g, g.adjoint());
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix::validate(rho);
}

PureState random_pure(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw InvalidInput("random_pure: dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> a(d);
  for (auto& z : a) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = Complex(re, im);
  }
  return PureState::normalized(std::move(a));
}

}  // namespace fcoh
