#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace fcoh {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Small by design (dimensions up to a few
/// thousand); every operation allocates its result.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// |v><w|
  static ComplexMatrix outer(std::span<const Complex> v, std::span<const Complex> w);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexMatrix adjoint() const;
  Complex trace() const;
  std::vector<Complex> diag() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  bool all_finite() const noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix product. Throws DimensionMismatch when a.cols() != b.rows().
ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; a's index is the major one, so (a⊗b)(i*rb+k, j*cb+l) = a(i,j)·b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

/// <v|m|v> for Hermitian m (imaginary part discarded).
double expectation(const ComplexMatrix& m, std::span<const Complex> v);

Complex inner(std::span<const Complex> v, std::span<const Complex> w);  // <v|w>
double norm2(std::span<const Complex> v);

double frobenius_norm(const ComplexMatrix& m);
/// Largest entry magnitude.
double max_abs(const ComplexMatrix& m);
/// max |m - m^dagger| entrywise.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = 1e-8);

inline constexpr double kHermitianTolerance = 1e-8;
inline constexpr int kJacobiMaxSweeps = 100;

struct HermitianEig {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column i pairs with eigenvalues[i]

  /// V·diag(f(λ))·V^dagger
  template <class F>
  ComplexMatrix reconstruct(F&& f) const;
  ComplexMatrix reconstruct() const;
};

/// Cyclic complex Jacobi eigensolver.
///
/// Each rotation first removes the phase of the pivot m(p,q) with a diagonal
/// unitary, then zeroes it with a real Givens rotation. Sweeps stop when the
/// off-diagonal mass falls below machine precision relative to ||m||_F.
/// Throws InvalidInput when m is not square or not Hermitian within
/// `hermitian_tol`, NumericalFailure when kJacobiMaxSweeps is exhausted.
HermitianEig hermitian_eig(const ComplexMatrix& m, double hermitian_tol = kHermitianTolerance);

std::vector<double> eigenvalues(const ComplexMatrix& m, double hermitian_tol = kHermitianTolerance);

/// min eigenvalue >= -tol. Throws InvalidInput for non-Hermitian input.
bool is_psd(const ComplexMatrix& m, double tol);

/// Lower-triangular L with m = L·L^dagger, or nullopt when m is not
/// numerically positive definite.
std::optional<ComplexMatrix> cholesky(const ComplexMatrix& m);

/// Inverse of a Hermitian positive-definite matrix from its Cholesky factor.
ComplexMatrix inverse_from_cholesky(const ComplexMatrix& lower);

/// Solves h·x = g for a real symmetric positive-definite h (row-major n×n).
/// Returns nullopt when the factorization breaks down.
std::optional<std::vector<double>> solve_spd(std::vector<double> h, std::vector<double> g);

template <class F>
ComplexMatrix HermitianEig::reconstruct(F&& f) const {
  const std::size_t n = eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eigenvalues[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eigenvectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eigenvectors(j, k));
    }
  }
  return out;
}

}  // namespace fcoh
