#pragma once

#include <string>
#include <vector>

#include "flatmod/groups.hpp"

namespace flatmod {

/// A conjugacy class of involutions g^2 = e, i.e. a point of Hom(pi_1(RP^2), G)/G.
struct InvolutionClass {
  Family family;
  int index;
  GroupElement representative;
  /// SU/Sp: {multiplicity of eigenvalue -1}. Spin: {scalar part, top-blade coefficient,
  /// multiplicity of -1 in the SO(n) image}.
  std::vector<double> signature;
};

/// j = 0..[n/2]: diag(-I_2j, I_{n-2j}).
std::vector<InvolutionClass> involutions_su(int n);

/// k = 0..n: diag(-I_k, I_{n-k}, -I_k, I_{n-k}) in the 2n x 2n model.
std::vector<InvolutionClass> involutions_sp(int n);

/// Class index of an involution in SU(n) or Sp(n), read from the eigenvalue multiset.
/// Throws ValidationError when g^2 != e within 1e-8.
int classify_involution(const GroupElement& g);

struct SpinCandidate {
  int j;
  Clifford candidate;         // (-1)^j e_1 ... e_2j
  Clifford square;            // blade-table product
  Clifford square_reference;  // independent word-reduction product
  double cross_check;         // max coefficient difference between the two squares
  int square_sign;            // +1 or -1 when the square is +-1, else 0
  int class_index;            // computed class containing the candidate, -1 if not an involution
};

struct SpinClass {
  int index;
  Clifford representative;
  std::vector<double> signature;
  int orbit_size;  // conjugates reached by the signed-permutation search
};

/// Squares of the published Spin(n) list, plus the actual classes of g^2 = 1.
///
/// Classes are computed from the torus elements with g^2 = 1 (angles in {0, pi/2, pi, 3pi/2}
/// per rotation plane), merged by an exhaustive conjugation search under the lifts of
/// signed permutation matrices, and separated by invariant signatures.
struct SpinSquareReport {
  int n;
  std::vector<SpinCandidate> candidates;
  std::vector<SpinClass> classes;
  int paper_count;
  int computed_count;
  int unresolved_pairs;  // distinct orbits with equal signatures
  bool discrepancy;
  std::vector<std::string> notes;
};

SpinSquareReport enumerate_spin_square_classes(int n);

}  // namespace flatmod
