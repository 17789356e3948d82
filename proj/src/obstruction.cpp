#include "flatmod/obstruction.hpp"

#include <random>

#include "flatmod/errors.hpp"

namespace flatmod {

std::vector<GroupElement> lift_generators(const Representation& rep) {
  const GroupDescriptor& g = rep.group();
  std::vector<GroupElement> out;
  out.reserve(rep.images().size());
  for (const auto& x : rep.images()) {
    if (g.family() == Family::SO)
      out.push_back(lift_so_to_spin(x));
    else
      out.push_back(x.with_descriptor(g.cover()));
  }
  return out;
}

Residues recognize_kernel_element(const GroupElement& value, const KernelData& kernel) {
  std::optional<std::size_t> match;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kernel.elements.size(); ++i) {
    const double dist = payload_distance(value, kernel.elements[i].element);
    best = std::min(best, dist);
    if (dist <= kKernelMatchTol) {
      if (match) throw KernelRecognitionError("lifted relation value matches more than one kernel element");
      match = i;
    }
  }
  if (!match)
    throw KernelRecognitionError("lifted relation value is not a kernel element (nearest distance " +
                                 std::to_string(best) + ")");
  return kernel.coords[*match];
}

namespace {

ObstructionClass classify(const Residues& k_value, const KernelData& kernel, SurfaceKind kind) {
  if (kind == SurfaceKind::Orientable) return {kind, kernel.group, k_value};
  const SquaresQuotient q = fa_quotient_by_squares(kernel.group);
  return {kind, q.quotient, q.project(k_value)};
}

}  // namespace

ObstructionClass obstruction_from_lifts(std::span<const GroupElement> lifts, const SurfacePresentation& p,
                                        const GroupDescriptor& g) {
  const KernelData kernel = covering_kernel(g);
  if (p.is_orientable() && p.handles() == 0) return classify(kernel.group.identity(), kernel, p.kind());
  const GroupElement value = evaluate_relation(lifts, p, g.cover());
  return classify(recognize_kernel_element(value, kernel), kernel, p.kind());
}

ObstructionClass obstruction(const Representation& rep) {
  const std::vector<GroupElement> lifts = lift_generators(rep);
  return obstruction_from_lifts(lifts, rep.presentation(), rep.group());
}

LiftIndependenceReport obstruction_lift_independence_test(const Representation& rep, int trials, std::uint64_t seed) {
  const KernelData kernel = covering_kernel(rep.group());
  const std::vector<GroupElement> base = lift_generators(rep);
  LiftIndependenceReport report;
  report.reference = obstruction_from_lifts(base, rep.presentation(), rep.group());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, kernel.elements.size() - 1);
  const GroupDescriptor cover = rep.group().cover();
  for (int t = 0; t < trials; ++t) {
    std::vector<GroupElement> lifts;
    lifts.reserve(base.size());
    for (const auto& x : base) lifts.push_back(apply_center(kernel.elements[pick(rng)], x));
    Residues raw = kernel.group.identity();
    if (!(rep.presentation().is_orientable() && rep.presentation().handles() == 0))
      raw = recognize_kernel_element(evaluate_relation(lifts, rep.presentation(), cover), kernel);
    report.raw_kernel_values.push_back(raw);
    if (!(obstruction_from_lifts(lifts, rep.presentation(), rep.group()) == report.reference)) report.constant = false;
    ++report.trials;
  }
  return report;
}

FiniteAbelianGroup h2_coefficients(const SurfacePresentation& surface, const GroupDescriptor& g) {
  const FiniteAbelianGroup k = covering_kernel(g).group;
  if (surface.is_orientable()) return k;
  return fa_quotient_by_squares(k).quotient;
}

std::string prediction_status_name(PredictionStatus s) {
  switch (s) {
    case PredictionStatus::Count: return "count";
    case PredictionStatus::OpenCase: return "open_case";
    case PredictionStatus::Unsupported: return "unsupported";
  }
  return "?";
}

ComponentPrediction predict_component_count(const SurfacePresentation& surface, const GroupDescriptor& g) {
  if (surface.is_orientable()) {
    if (surface.genus_or_crosscaps() == 0) return {PredictionStatus::Count, 1, "sphere: Hom is a single point"};
    return {PredictionStatus::Count, covering_kernel(g).group.size(), "|pi_1(G)| for orientable genus >= 1"};
  }
  const int k = surface.genus_or_crosscaps();
  if (k == 2 || k == 4)
    return {PredictionStatus::OpenCase, std::nullopt,
            "crosscap number " + std::to_string(k) + " is an open case; no count is known"};
  if (k == 1) {
    if (!g.simply_connected())
      return {PredictionStatus::Unsupported, std::nullopt, "RP^2 counts are only tabulated for SU(n), Spin(n), Sp(n)"};
    switch (g.family()) {
      case Family::SU:
        return {PredictionStatus::Count, g.n() / 2 + 1, "involution classes diag(-I_2j, I_n-2j), j = 0..[n/2]"};
      case Family::Spin:
        return {PredictionStatus::Count, g.n() / 2 + 1,
                "published Spin(n) list, j = 0..[n/2]; see the involution report for the computed count"};
      case Family::Sp:
        return {PredictionStatus::Count, g.n() + 1, "involution classes, k = 0..n"};
      case Family::SO: break;
    }
    return {PredictionStatus::Unsupported, std::nullopt, "no RP^2 count for this family"};
  }
  const FiniteAbelianGroup h2 = fa_quotient_by_squares(covering_kernel(g).group).quotient;
  return {PredictionStatus::Count, h2.size(), "|pi_1(G)/2 pi_1(G)| for crosscap number not in {1, 2, 4}"};
}

}  // namespace flatmod
