#include "flatmod/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

constexpr double kPi = std::numbers::pi;

// Components below this magnitude are skipped when fixing eigenvector phases.
constexpr double kPhaseTol = 1e-10;

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > kPhaseTol) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex(v(i).real(), 0.0);
      return;
    }
  }
}

}  // namespace

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0 || !all_finite(m)) return false;
  const auto n = m.rows();
  return max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n)) <= tol;
}

bool is_skew_hermitian(const ComplexMatrix& x, double tol) {
  if (x.rows() != x.cols() || !all_finite(x)) return false;
  return max_abs(x + x.adjoint()) <= tol;
}

double principal_angle(Complex z) {
  double a = std::arg(z);
  if (a <= -kPi + 1e-12) a = kPi;
  return a;
}

ComplexMatrix phase_diagonal(std::span<const double> angles) {
  const auto n = static_cast<Eigen::Index>(angles.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = std::polar(1.0, angles[i]);
  return d;
}

UnitaryEig unitary_eig(const ComplexMatrix& m) {
  if (!is_unitary(m)) throw ValidationError("unitary_eig: input is not unitary within 1e-10");
  const auto n = m.rows();

  Eigen::ComplexSchur<ComplexMatrix> schur(m);
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& u = schur.matrixU();

  std::vector<double> raw(n);
  for (Eigen::Index i = 0; i < n; ++i) raw[i] = principal_angle(t(i, i));

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return raw[a] > raw[b]; });

  UnitaryEig out;
  out.vectors.resize(n, n);
  out.angles.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.vectors.col(k) = u.col(order[k]);
    out.angles[k] = raw[order[k]];
  }

  // Re-orthonormalize inside clusters of (nearly) equal eigenvalues.
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index stop = start + 1;
    while (stop < n && out.angles[stop - 1] - out.angles[stop] <= kClusterTol) ++stop;
    if (stop - start > 1) {
      const ComplexMatrix block = out.vectors.middleCols(start, stop - start);
      Eigen::HouseholderQR<ComplexMatrix> qr(block);
      ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, stop - start);
      out.vectors.middleCols(start, stop - start) = q;
    }
    start = stop;
  }
  for (Eigen::Index k = 0; k < n; ++k) fix_phase(out.vectors.col(k));
  return out;
}

ComplexMatrix exp_skew(const ComplexMatrix& x) {
  if (!is_skew_hermitian(x)) throw ValidationError("exp_skew: input is not skew-Hermitian within 1e-10");
  const auto n = x.rows();
  if (n == 0) return x;
  // x = i*h with h Hermitian.
  ComplexMatrix h = Complex(0.0, -1.0) * x;
  h = (h + h.adjoint()).eval() * 0.5;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const RealVector& lambda = es.eigenvalues();
  std::vector<double> angles(lambda.data(), lambda.data() + n);
  return es.eigenvectors() * phase_diagonal(angles) * es.eigenvectors().adjoint();
}

ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      a(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexMatrix random_special_unitary(int n, std::mt19937_64& rng) {
  ComplexMatrix q = random_unitary(n, rng);
  const Complex det = q.determinant();
  q *= std::polar(1.0, -std::arg(det) / n);
  return q;
}

RealMatrix random_special_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix a(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) a(i, j) = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(a);
  RealMatrix q = qr.householderQ();
  const RealMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

}  // namespace flatmod
