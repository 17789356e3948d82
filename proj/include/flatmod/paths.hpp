#pragma once

#include <vector>

#include "flatmod/cartan.hpp"
#include "flatmod/surfaces.hpp"

namespace flatmod {

/// Closed-form path data for one conjugation frame: g~(t) = V diag(exp(i t theta)) V^*
/// with g~(0) = e and g~(1) = g, together with the torus exponents it carries.
struct FramedHandle {
  ComplexMatrix frame_vectors;  // V
  CartanVector frame_log;       // theta (trace zero, so g~(t) stays in SU(n))
  CartanVector xi;              // exponent of the last-coordinate torus path
  CartanVector xi_prime;        // (w - 1) xi' = xi
};

/// A path t -> gamma(t) in X~_k inside SU(n)^{2l+1} or SU(n)^{2l+2}.
///
/// Odd crosscaps (2l+1):  (a(t), b(t), e, ..., e, c(t)) with
///   a(t) = g~ a g~^-1,  b(t) = g~ exp(-2t xi') g~^-1,  c(t) = g~ q exp(t xi) g~^-1.
/// Even crosscaps (2l+2): (a2(t), b2(t), a1(t), b1(t), e, ..., e, c1(t), c2(t)) with
///   handle j built from frame j, c1(t) = g~1 exp(t xi1) g~1^-1, c2(t) = g~2 q exp(t xi2) g~2^-1.
/// The tuple is positional: the second frame's handle occupies the (a1, b1) slots.
struct RelationPath {
  SurfacePresentation presentation;
  GroupDescriptor group;
  CenterElement k;
  GroupElement coxeter_rep;         // a
  GroupElement q;                   // central square root of k in the torus
  std::vector<FramedHandle> frames; // odd: {frame}; even: {frame 1 (c1), frame 2 (c2)}
  std::vector<GroupElement> start;  // declared gamma(0)
  std::vector<GroupElement> end;    // declared gamma(1)

  std::vector<GroupElement> at(double t) const;
};

/// Path from (a, e, e, ..., e, q) to (g a g^-1, g exp(-2 xi') g^-1, e, ..., e, c). Needs l >= 1.
RelationPath connect_odd(const CenterElement& k, const GroupElement& c, int l);

/// Path from (a, e, a, e, e, ..., e, e, q) to a tuple ending in (c1, c2). Needs l >= 2.
RelationPath connect_even(const CenterElement& k, const GroupElement& c1, const GroupElement& c2, int l);

struct PathReport {
  double max_residual = 0;         // over all samples and both endpoints
  double start_residual = 0;       // || gamma(0) - declared start ||, max over coordinates
  double end_residual = 0;         // || gamma(1) - declared end ||
  std::vector<double> residuals;   // ||relation(gamma(t_i)) - k||_F at t_i = i/(samples-1)
  bool passed = false;             // max_residual <= tol
};

PathReport validate_path(const RelationPath& p, int samples, double tol);

}  // namespace flatmod
