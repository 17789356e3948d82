#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "flatmod/cartan.hpp"
#include "flatmod/groups.hpp"

namespace flatmod {

enum class SurfaceKind { Orientable, Nonorientable };

std::string surface_kind_name(SurfaceKind k);

/// Closed surface with its standard presentation.
///
///   orientable genus l:          a1 b1 a1^-1 b1^-1 ... al bl al^-1 bl^-1 = e
///   nonorientable, 2l+1 crosscaps: [a1,b1] ... [al,bl] c^2 = e
///   nonorientable, 2l+2 crosscaps: [a1,b1] ... [al,bl] c1^2 c2^2 = e
class SurfacePresentation {
 public:
  static SurfacePresentation orientable(int genus);
  static SurfacePresentation nonorientable(int crosscaps);

  SurfaceKind kind() const { return kind_; }
  bool is_orientable() const { return kind_ == SurfaceKind::Orientable; }
  /// Genus (orientable) or crosscap number (nonorientable).
  int genus_or_crosscaps() const { return count_; }
  /// Number of commutator handles l.
  int handles() const;
  /// 0, 1 (c) or 2 (c1, c2) trailing square generators.
  int squares() const;
  int generator_count() const { return 2 * handles() + squares(); }
  std::vector<std::string> generator_names() const;
  std::string name() const;

  bool operator==(const SurfacePresentation&) const = default;

 private:
  SurfacePresentation(SurfaceKind k, int c) : kind_(k), count_(c) {}
  SurfaceKind kind_;
  int count_;
};

/// Relation word value; `group` supplies the identity when there are no generators.
GroupElement evaluate_relation(std::span<const GroupElement> images, const SurfacePresentation& p,
                               const GroupDescriptor& group);

/// Distance from the relation value to the identity of the group (modulo the quotient).
double relation_residual(std::span<const GroupElement> images, const SurfacePresentation& p,
                         const GroupDescriptor& group);

inline constexpr double kRelationTol = 1e-8;

/// A point of Hom(pi_1(surface), G), stored as generator images.
class Representation {
 public:
  /// Validates shapes and descriptors; with `strict`, also requires the relation
  /// to hold within `tol` (RelationError otherwise).
  Representation(SurfacePresentation p, GroupDescriptor g, std::vector<GroupElement> images, bool strict = true,
                 double tol = kRelationTol);

  const SurfacePresentation& presentation() const { return presentation_; }
  const GroupDescriptor& group() const { return group_; }
  const std::vector<GroupElement>& images() const { return images_; }
  double residual() const { return residual_; }
  bool satisfies_relation(double tol = kRelationTol) const { return residual_ <= tol; }

 private:
  SurfacePresentation presentation_;
  GroupDescriptor group_;
  std::vector<GroupElement> images_;
  double residual_;
};

/// Every image replaced by g x g^-1.
Representation conjugate_representation(const Representation& rep, const GroupElement& g);

struct CommutatorPair {
  GroupElement a;
  GroupElement b;
};

/// (a, b) in SU(n) with a b a^-1 b^-1 = g, from the Coxeter commutation identity:
/// g = h exp(xi) h^-1, a = h w h^-1, b = h exp(xi') h^-1 with (w - 1) xi' = xi.
CommutatorPair commutator_preimage(const GroupElement& g);

/// A generator tuple in the cover whose relation word equals a central element k.
struct FiberPoint {
  SurfacePresentation presentation;
  GroupDescriptor cover;
  CenterElement k;
  std::vector<GroupElement> images;
  double residual;  // distance of the relation value from k
};

/// Random point of X~_k for a nonorientable presentation: free generators drawn at
/// random, the last square generator solved by a square root. The cover may be
/// SU(n), Spin(n) or Sp(n).
FiberPoint sample_fiber_nonorientable(const SurfacePresentation& p, const GroupDescriptor& cover,
                                      const CenterElement& k, std::uint64_t seed);

/// Random point of (mu^l)^-1(k) for an orientable presentation of genus l >= 1 over
/// SU(n) or Spin(3): random first l-1 handles, last handle from commutator_preimage.
FiberPoint sample_fiber_orientable(const SurfacePresentation& p, const GroupDescriptor& cover,
                                   const CenterElement& k, std::uint64_t seed);

/// Images of a fiber point pushed down to `target` (a quotient of its cover).
Representation project_fiber_point(const FiberPoint& point, const GroupDescriptor& target, bool strict = true);

}  // namespace flatmod
