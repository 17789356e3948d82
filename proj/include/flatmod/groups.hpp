#pragma once

#include <random>
#include <string>
#include <variant>
#include <vector>

#include "flatmod/clifford.hpp"
#include "flatmod/finite_abelian.hpp"
#include "flatmod/numerics.hpp"

namespace flatmod {

enum class Family { SU, SO, Spin, Sp };

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// A compact group G = cover / Gamma.
///
/// `quotient` holds every element of Gamma as residues in the center model of
/// the simply connected cover (see enumerate_center). SO(n) is the native
/// orthogonal-matrix model of Spin(n)/{+-1}; its quotient is filled in
/// automatically.
class GroupDescriptor {
 public:
  /// Validates the rank range and closes `quotient_generators` into a subgroup.
  GroupDescriptor(Family family, int n, std::vector<Residues> quotient_generators = {});

  static GroupDescriptor su(int n) { return {Family::SU, n}; }
  static GroupDescriptor so(int n) { return {Family::SO, n}; }
  static GroupDescriptor spin(int n) { return {Family::Spin, n}; }
  static GroupDescriptor sp(int n) { return {Family::Sp, n}; }
  /// Cover modulo its full center (PSU(n), PSp(n), PSO(2m) as Spin(2m)/Z).
  static GroupDescriptor adjoint(Family family, int n);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::vector<Residues>& quotient() const { return quotient_; }

  bool simply_connected() const { return quotient_.size() <= 1 && family_ != Family::SO; }
  /// The universal cover: same family with trivial quotient, Spin(n) for SO(n).
  GroupDescriptor cover() const;
  /// Matrix size of the payload; 0 for Spin.
  int matrix_dim() const;
  /// Center of the cover, as a finite abelian group.
  FiniteAbelianGroup cover_center_group() const;

  std::string name() const;

  bool operator==(const GroupDescriptor&) const = default;

 private:
  Family family_;
  int n_;
  std::vector<Residues> quotient_;
};

/// Concrete group element: unitary matrix (SU, Sp as quaternionic-unitary
/// 2n x 2n), real orthogonal matrix (SO), or even unit Clifford element (Spin).
/// Elements of central quotients are stored by a representative in the cover.
class GroupElement {
 public:
  using Payload = std::variant<ComplexMatrix, RealMatrix, Clifford>;

  static GroupElement identity(const GroupDescriptor& d);
  /// Validating constructors; tolerance 1e-10 on unitarity/orthogonality/det/spin norm.
  static GroupElement from_unitary(const GroupDescriptor& d, ComplexMatrix m, double tol = kMatrixTol);
  static GroupElement from_orthogonal(const GroupDescriptor& d, RealMatrix m, double tol = kMatrixTol);
  static GroupElement from_spinor(const GroupDescriptor& d, Clifford x, double tol = kMatrixTol);
  /// Skips validation; for results of closed-form constructions.
  static GroupElement trusted(const GroupDescriptor& d, Payload p);

  const GroupDescriptor& descriptor() const { return desc_; }
  const Payload& payload() const { return payload_; }
  const ComplexMatrix& unitary() const;
  const RealMatrix& orthogonal() const;
  const Clifford& spinor() const;
  bool is_unitary_payload() const { return std::holds_alternative<ComplexMatrix>(payload_); }
  bool is_orthogonal_payload() const { return std::holds_alternative<RealMatrix>(payload_); }
  bool is_spinor_payload() const { return std::holds_alternative<Clifford>(payload_); }
  /// Matrix payload as a complex matrix.
  ComplexMatrix as_complex() const;
  /// Flattened payload: real parts then imaginary parts (column major); Clifford coefficients.
  std::vector<double> flatten() const;

  GroupElement with_descriptor(const GroupDescriptor& d) const { return GroupElement(d, payload_); }

 private:
  GroupElement(GroupDescriptor d, Payload p) : desc_(std::move(d)), payload_(std::move(p)) {}
  GroupDescriptor desc_;
  Payload payload_;
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& a);
inline GroupElement operator*(const GroupElement& a, const GroupElement& b) { return mul(a, b); }

/// Frobenius / coefficient distance of raw payloads (no quotient reduction).
double payload_distance(const GroupElement& a, const GroupElement& b);
/// Distance in G: for central quotients, minimum over coset representatives.
double distance(const GroupElement& a, const GroupElement& b);
/// Canonical coset representative (lexicographic minimum on the 1e-8 grid).
GroupElement canonical(const GroupElement& g);

/// An element of the center of a simply connected cover with its residues.
struct CenterElement {
  GroupElement element;
  Residues coords;
};

struct CenterData {
  FiniteAbelianGroup group;
  std::vector<CenterElement> elements;  // in group.elements() order
};

/// Center of SU(n), Sp(n), or Spin(n). Throws UnsupportedError otherwise.
CenterData enumerate_center(const GroupDescriptor& d);

/// K = Ker(cover -> G). elements[i] is the cover element, coords[i] its residues in `group`.
struct KernelData {
  FiniteAbelianGroup group;
  std::vector<Residues> coords;
  std::vector<CenterElement> elements;
};

KernelData covering_kernel(const GroupDescriptor& d);

/// Multiplies a cover element by a central element of the same cover.
GroupElement apply_center(const CenterElement& z, const GroupElement& x);

/// r with r^2 = g, for SU, SO and Sp payloads. Spin payloads throw (use spin_square_root).
GroupElement square_root(const GroupElement& g);
/// Square root in Spin(n) computed through the SO(n) rotation planes with the sign fixed.
GroupElement spin_square_root(const GroupElement& x);
/// Dispatches to square_root or spin_square_root.
GroupElement any_square_root(const GroupElement& g);

/// Diagonal q in the standard torus of SU(n) with q^2 = zeta^m I, zeta = exp(2 pi i/n).
GroupElement central_square_root_in_torus(const CenterElement& k);

struct TorusConjugation {
  GroupElement frame;          // g with g^-1 c g in the torus
  std::vector<double> angles;  // torus coordinates
};

/// SU: g^-1 c g diagonal. SO: block-diagonal 2x2 rotations by angles[i] in planes
/// (2i, 2i+1). Sp: diag(exp(i angles), exp(-i angles)).
TorusConjugation conjugate_to_torus(const GroupElement& c);

/// One of the two preimages of R under Spin(n) -> SO(n), via Givens plane rotations.
GroupElement lift_so_to_spin(const GroupElement& r);

/// rho: cover -> G. For Spin -> SO, the matrix of v -> x v x^-1 on grade-1 blades.
GroupElement project_cover(const GroupElement& x, const GroupDescriptor& target);

/// Fixed isomorphism SU(2) -> Spin(3), a0 I + a_k (-i sigma_k) -> a0 - a1 e23 - a2 e31 - a3 e12.
GroupElement su2_to_spin3(const GroupElement& u);

/// Random element (Haar for SU, SO, Sp; lifted Haar with random sign for Spin).
GroupElement random_element(const GroupDescriptor& d, std::mt19937_64& rng);

}  // namespace flatmod
