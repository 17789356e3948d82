#pragma once

#include <complex>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace flatmod {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tolerance used for unitarity / skewness preconditions.
inline constexpr double kMatrixTol = 1e-10;
/// Eigenvalue angles closer than this are treated as one cluster.
inline constexpr double kClusterTol = 1e-8;

/// Spectral data of a unitary matrix: m = vectors * diag(exp(i*angles)) * vectors^*.
struct UnitaryEig {
  ComplexMatrix vectors;
  std::vector<double> angles;  // principal branch (-pi, pi], sorted descending
};

bool all_finite(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol = kMatrixTol);
bool is_skew_hermitian(const ComplexMatrix& x, double tol = kMatrixTol);

/// arg(z) on (-pi, pi]; values within 1e-12 of -pi are mapped to +pi.
double principal_angle(Complex z);

/// diag(exp(i*angles)).
ComplexMatrix phase_diagonal(std::span<const double> angles);

/// Eigendecomposition of a unitary (or real orthogonal) matrix.
///
/// Eigenvectors come from a complex Schur factorization, so they are
/// orthonormal even inside degenerate eigenspaces. Each eigenvector is
/// phase-fixed so its first non-negligible component is real and positive.
/// Throws ValidationError when m is not unitary within 1e-10.
UnitaryEig unitary_eig(const ComplexMatrix& m);

/// Matrix exponential of a skew-Hermitian matrix (result is unitary).
ComplexMatrix exp_skew(const ComplexMatrix& x);

/// Haar-distributed element of U(n): complex Gaussian -> QR -> phase fix.
ComplexMatrix random_unitary(int n, std::mt19937_64& rng);

/// Haar-distributed element of SU(n): random_unitary with det(.)^(1/n) divided out.
ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng);

/// Haar-distributed element of SO(n): real Gaussian -> QR -> sign fix -> det fix.
RealMatrix random_special_orthogonal(int n, std::mt19937_64& rng);

/// Largest absolute entry of m.
double max_abs(const ComplexMatrix& m);

}  // namespace flatmod
