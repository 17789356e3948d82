#include "flatmod/cartan.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

// Orthonormal basis of {x in R^n : sum x = 0} as columns of an n x (n-1) matrix.
RealMatrix trace_zero_basis(int n) {
  RealMatrix a = RealMatrix::Zero(n, n - 1);
  for (int j = 0; j < n - 1; ++j) {
    a(j, j) = 1.0;
    a(j + 1, j) = -1.0;
  }
  Eigen::HouseholderQR<RealMatrix> qr(a);
  return qr.householderQ() * RealMatrix::Identity(n, n - 1);
}

RealMatrix weyl_matrix(const CoxeterRealization& w) {
  RealMatrix m = RealMatrix::Zero(w.n, w.n);
  for (int i = 0; i < w.n; ++i) m(w.perm[i], i) = 1.0;
  return m;
}

}  // namespace

CartanVector::CartanVector(RealVector xi) : xi_(std::move(xi)) {
  if (xi_.size() < 1) throw DimensionError("CartanVector: empty");
  if (!xi_.allFinite()) throw ValidationError("CartanVector: non-finite entry");
  const double scale = std::max(1.0, xi_.cwiseAbs().maxCoeff());
  if (std::abs(xi_.sum()) > 1e-12 * scale * xi_.size())
    throw ValidationError("CartanVector: entries must sum to zero");
}

CoxeterRealization coxeter_element(int n) {
  if (n < 2) throw ValidationError("coxeter_element: n must be >= 2");
  std::vector<int> perm(n);
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    perm[i] = (i + 1) % n;
    p(perm[i], i) = 1.0;
  }
  if ((n - 1) % 2) p(0, n - 1) = -1.0;
  return {n, std::move(perm), GroupElement::trusted(GroupDescriptor::su(n), p)};
}

CartanVector weyl_action(const CoxeterRealization& w, const CartanVector& xi) {
  if (xi.n() != w.n) throw DimensionError("weyl_action: dimension mismatch");
  RealVector out(w.n);
  for (int i = 0; i < w.n; ++i) out(w.perm[i]) = xi.xi()(i);
  return CartanVector(out);
}

RealMatrix coxeter_minus_identity_on_cartan(const CoxeterRealization& w) {
  const RealMatrix b = trace_zero_basis(w.n);
  return b.transpose() * (weyl_matrix(w) - RealMatrix::Identity(w.n, w.n)) * b;
}

CartanVector coxeter_solve(const CoxeterRealization& w, const CartanVector& xi) {
  if (xi.n() != w.n) throw DimensionError("coxeter_solve: dimension mismatch");
  const RealMatrix b = trace_zero_basis(w.n);
  const RealMatrix m = b.transpose() * (weyl_matrix(w) - RealMatrix::Identity(w.n, w.n)) * b;
  const RealVector y = m.fullPivLu().solve(b.transpose() * xi.xi());
  RealVector sol = b * y;
  sol.array() -= sol.mean();
  return CartanVector(sol);
}

GroupElement torus_exp(const CartanVector& xi, double t) {
  std::vector<double> angles(xi.n());
  for (int j = 0; j < xi.n(); ++j) angles[j] = t * xi.xi()(j);
  return GroupElement::trusted(GroupDescriptor::su(xi.n()), phase_diagonal(angles));
}

double commutation_identity_check(const CoxeterRealization& w, const CartanVector& xi, double t) {
  const CartanVector xi_prime = coxeter_solve(w, xi);
  const GroupElement lhs = w.rep * torus_exp(xi_prime, t) * inv(w.rep) * torus_exp(xi_prime, -t);
  return payload_distance(lhs, torus_exp(xi, t));
}

double coxeter_unit_eigenvalue_margin(const CoxeterRealization& w) {
  const RealMatrix m = coxeter_minus_identity_on_cartan(w);
  Eigen::EigenSolver<RealMatrix> es(m);
  // Eigenvalues of (w - 1) are lambda - 1.
  return es.eigenvalues().cwiseAbs().minCoeff();
}

CartanVector torus_log(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  RealVector xi(n);
  double sum = 0;
  for (int j = 0; j < n; ++j) {
    xi(j) = angles[j];
    sum += angles[j];
  }
  const double turns = std::round(sum / (2 * std::numbers::pi));
  if (std::abs(sum - 2 * std::numbers::pi * turns) > 1e-8)
    throw ValidationError("torus_log: angles do not describe a determinant-one torus element");
  xi(n - 1) -= 2 * std::numbers::pi * turns;
  xi.array() -= xi.mean();
  return CartanVector(xi);
}

std::vector<double> diagonal_angles(const ComplexMatrix& d) {
  std::vector<double> a(d.rows());
  for (Eigen::Index i = 0; i < d.rows(); ++i) a[i] = principal_angle(d(i, i));
  return a;
}

}  // namespace flatmod
