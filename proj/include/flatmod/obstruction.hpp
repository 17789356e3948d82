#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flatmod/finite_abelian.hpp"
#include "flatmod/surfaces.hpp"

namespace flatmod {

/// Obstruction class: an element of K = pi_1(G) (orientable surfaces) or of K/2K (nonorientable).
struct ObstructionClass {
  SurfaceKind surface_kind;
  FiniteAbelianGroup ambient;
  Residues value;

  bool is_identity() const { return value == ambient.identity(); }
  bool operator==(const ObstructionClass&) const = default;
};

/// Distance threshold for matching a lifted relation value to a kernel element.
inline constexpr double kKernelMatchTol = 1e-6;

/// Preimages in the universal cover of every generator image.
std::vector<GroupElement> lift_generators(const Representation& rep);

/// Residues in K of the kernel element closest to `value`; throws KernelRecognitionError
/// if none is within 1e-6 or if more than one is.
Residues recognize_kernel_element(const GroupElement& value, const KernelData& kernel);

/// Class of already-lifted generators (relation word evaluated in the cover).
ObstructionClass obstruction_from_lifts(std::span<const GroupElement> lifts, const SurfacePresentation& p,
                                        const GroupDescriptor& g);

ObstructionClass obstruction(const Representation& rep);

struct LiftIndependenceReport {
  bool constant = true;
  int trials = 0;
  ObstructionClass reference;
  std::vector<Residues> raw_kernel_values;  // lifted relation value in K, per trial
};

/// Multiplies every lift by independent random kernel elements and checks the class never changes.
LiftIndependenceReport obstruction_lift_independence_test(const Representation& rep, int trials, std::uint64_t seed);

/// H^2(surface; pi_1(G)): K for orientable surfaces, K/2K for nonorientable ones.
FiniteAbelianGroup h2_coefficients(const SurfacePresentation& surface, const GroupDescriptor& g);

enum class PredictionStatus {
  Count,        // `count` holds the number of components
  OpenCase,     // crosscap number 2 or 4: not settled
  Unsupported,  // outside every known count (e.g. RP^2 with a non-simply-connected group)
};

struct ComponentPrediction {
  PredictionStatus status;
  std::optional<long> count;
  std::string basis;
};

/// Number of connected components of Hom(pi_1(surface), G)/G.
ComponentPrediction predict_component_count(const SurfacePresentation& surface, const GroupDescriptor& g);

std::string prediction_status_name(PredictionStatus s);

}  // namespace flatmod
