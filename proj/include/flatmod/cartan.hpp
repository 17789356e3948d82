#pragma once

#include <vector>

#include "flatmod/groups.hpp"

namespace flatmod {

/// Element diag(i xi_1, ..., i xi_n) of the Cartan subalgebra of su(n); sum xi_j = 0.
class CartanVector {
 public:
  explicit CartanVector(RealVector xi);
  static CartanVector zero(int n) { return CartanVector(RealVector::Zero(n)); }

  int n() const { return static_cast<int>(xi_.size()); }
  const RealVector& xi() const { return xi_; }

  CartanVector operator+(const CartanVector& o) const { return CartanVector(xi_ + o.xi_); }
  CartanVector operator*(double s) const { return CartanVector(xi_ * s); }

 private:
  RealVector xi_;
};

/// The standard Coxeter element of the Weyl group S_n of SU(n): the n-cycle
/// i -> i+1 (mod n), realized in N(T) by the permutation matrix with P(sigma(i), i) = 1
/// whose wrap-around entry (row 0, column n-1) carries the sign (-1)^(n-1).
struct CoxeterRealization {
  int n;
  std::vector<int> perm;  // perm[i] = sigma(i), 0-based
  GroupElement rep;       // a in SU(n)
};

CoxeterRealization coxeter_element(int n);

/// w . xi, defined by a exp(xi) a^-1 = exp(w . xi): (w . xi)_{sigma(i)} = xi_i.
CartanVector weyl_action(const CoxeterRealization& w, const CartanVector& xi);

/// Restriction of (w - 1) to the trace-zero subspace in an orthonormal basis ((n-1) x (n-1)).
RealMatrix coxeter_minus_identity_on_cartan(const CoxeterRealization& w);

/// xi' with w . xi' - xi' = xi.
CartanVector coxeter_solve(const CoxeterRealization& w, const CartanVector& xi);

/// || a exp(t xi') a^-1 exp(-t xi') - exp(t xi) ||_F with xi' = coxeter_solve(w, xi).
double commutation_identity_check(const CoxeterRealization& w, const CartanVector& xi, double t);

/// min |lambda - 1| over eigenvalues of w on the trace-zero subspace.
double coxeter_unit_eigenvalue_margin(const CoxeterRealization& w);

/// exp(t * xi) = diag(exp(i t xi_j)) as an SU(n) element.
GroupElement torus_exp(const CartanVector& xi, double t = 1.0);

/// xi in the Cartan subalgebra with exp(xi) = diag(exp(i angles)). The principal
/// angles must sum to a multiple of 2 pi; that multiple is removed from the last entry.
CartanVector torus_log(const std::vector<double>& angles);

/// Diagonal angles of a diagonal SU(n) matrix, principal branch.
std::vector<double> diagonal_angles(const ComplexMatrix& d);

}  // namespace flatmod
