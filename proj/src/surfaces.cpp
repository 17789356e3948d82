#include "flatmod/surfaces.hpp"

#include "flatmod/errors.hpp"

namespace flatmod {

std::string surface_kind_name(SurfaceKind k) {
  return k == SurfaceKind::Orientable ? "orientable" : "nonorientable";
}

SurfacePresentation SurfacePresentation::orientable(int genus) {
  if (genus < 0) throw ValidationError("orientable surface genus must be >= 0");
  return {SurfaceKind::Orientable, genus};
}

SurfacePresentation SurfacePresentation::nonorientable(int crosscaps) {
  if (crosscaps < 1) throw ValidationError("nonorientable surface needs at least one crosscap");
  return {SurfaceKind::Nonorientable, crosscaps};
}

int SurfacePresentation::handles() const {
  if (is_orientable()) return count_;
  return count_ % 2 ? (count_ - 1) / 2 : (count_ - 2) / 2;
}

int SurfacePresentation::squares() const {
  if (is_orientable()) return 0;
  return count_ % 2 ? 1 : 2;
}

std::vector<std::string> SurfacePresentation::generator_names() const {
  std::vector<std::string> out;
  for (int i = 1; i <= handles(); ++i) {
    out.push_back("a" + std::to_string(i));
    out.push_back("b" + std::to_string(i));
  }
  if (squares() == 1) out.push_back("c");
  if (squares() == 2) {
    out.push_back("c1");
    out.push_back("c2");
  }
  return out;
}

std::string SurfacePresentation::name() const {
  if (is_orientable()) return "orientable genus " + std::to_string(count_);
  return "nonorientable with " + std::to_string(count_) + " crosscaps";
}

GroupElement evaluate_relation(std::span<const GroupElement> images, const SurfacePresentation& p,
                               const GroupDescriptor& group) {
  if (static_cast<int>(images.size()) != p.generator_count())
    throw DimensionError("evaluate_relation: " + p.name() + " has " + std::to_string(p.generator_count()) +
                         " generators, got " + std::to_string(images.size()));
  GroupElement value = GroupElement::identity(group);
  for (const auto& g : images)
    if (!(g.descriptor() == group)) throw DimensionError("evaluate_relation: descriptor mismatch");
  const int l = p.handles();
  for (int i = 0; i < l; ++i) {
    const GroupElement& a = images[2 * i];
    const GroupElement& b = images[2 * i + 1];
    value = value * a * b * inv(a) * inv(b);
  }
  for (int s = 0; s < p.squares(); ++s) {
    const GroupElement& c = images[2 * l + s];
    value = value * c * c;
  }
  return value;
}

double relation_residual(std::span<const GroupElement> images, const SurfacePresentation& p,
                         const GroupDescriptor& group) {
  return distance(evaluate_relation(images, p, group), GroupElement::identity(group));
}

Representation::Representation(SurfacePresentation p, GroupDescriptor g, std::vector<GroupElement> images, bool strict,
                               double tol)
    : presentation_(p), group_(std::move(g)), images_(std::move(images)) {
  residual_ = relation_residual(images_, presentation_, group_);
  if (strict && residual_ > tol)
    throw RelationError("relation violated: residual " + std::to_string(residual_) + " exceeds " + std::to_string(tol));
}

Representation conjugate_representation(const Representation& rep, const GroupElement& g) {
  if (!(g.descriptor() == rep.group())) throw DimensionError("conjugate_representation: descriptor mismatch");
  std::vector<GroupElement> out;
  out.reserve(rep.images().size());
  const GroupElement gi = inv(g);
  for (const auto& x : rep.images()) out.push_back(g * x * gi);
  return Representation(rep.presentation(), rep.group(), std::move(out), false);
}

CommutatorPair commutator_preimage(const GroupElement& g) {
  const GroupDescriptor& d = g.descriptor();
  if (d.family() != Family::SU) throw UnsupportedError("commutator_preimage: SU(n) only");
  const GroupDescriptor su = GroupDescriptor::su(d.n());
  const GroupElement target = g.with_descriptor(su);
  const TorusConjugation tc = conjugate_to_torus(target);
  const CartanVector xi = torus_log(tc.angles);
  const CoxeterRealization w = coxeter_element(d.n());
  const CartanVector xi_prime = coxeter_solve(w, xi);
  const GroupElement h = tc.frame;
  const GroupElement hi = inv(h);
  return {(h * w.rep * hi).with_descriptor(d), (h * torus_exp(xi_prime) * hi).with_descriptor(d)};
}

namespace {

void require_simply_connected(const GroupDescriptor& cover) {
  if (!cover.simply_connected()) throw UnsupportedError("fiber sampling needs a simply connected cover, got " + cover.name());
}

}  // namespace

FiberPoint sample_fiber_nonorientable(const SurfacePresentation& p, const GroupDescriptor& cover,
                                      const CenterElement& k, std::uint64_t seed) {
  if (p.is_orientable()) throw UnsupportedError("sample_fiber_nonorientable: orientable presentation (use commutator_preimage)");
  require_simply_connected(cover);
  if (!(k.element.descriptor() == cover)) throw DimensionError("sample_fiber_nonorientable: k is not central in " + cover.name());
  std::mt19937_64 rng(seed);
  std::vector<GroupElement> images;
  const int free_count = p.generator_count() - 1;
  for (int i = 0; i < free_count; ++i) images.push_back(random_element(cover, rng));

  GroupElement prefix = GroupElement::identity(cover);
  const int l = p.handles();
  for (int i = 0; i < l; ++i) {
    const GroupElement& a = images[2 * i];
    const GroupElement& b = images[2 * i + 1];
    prefix = prefix * a * b * inv(a) * inv(b);
  }
  if (p.squares() == 2) prefix = prefix * images.back() * images.back();
  images.push_back(any_square_root(inv(prefix) * k.element));

  const GroupElement value = evaluate_relation(images, p, cover);
  return {p, cover, k, std::move(images), payload_distance(value, k.element)};
}

FiberPoint sample_fiber_orientable(const SurfacePresentation& p, const GroupDescriptor& cover,
                                   const CenterElement& k, std::uint64_t seed) {
  if (!p.is_orientable() || p.handles() < 1) throw UnsupportedError("sample_fiber_orientable: orientable genus >= 1 only");
  require_simply_connected(cover);
  if (!(k.element.descriptor() == cover)) throw DimensionError("sample_fiber_orientable: k is not central in " + cover.name());

  if (cover == GroupDescriptor::spin(3)) {
    // Sample in SU(2) and transport through the isomorphism; centers match coordinate-wise.
    const GroupDescriptor su2 = GroupDescriptor::su(2);
    const CenterData z = enumerate_center(su2);
    FiberPoint in_su2 = sample_fiber_orientable(p, su2, z.elements.at(k.coords.at(0)), seed);
    std::vector<GroupElement> images;
    for (const auto& x : in_su2.images) images.push_back(su2_to_spin3(x));
    const GroupElement value = evaluate_relation(images, p, cover);
    return {p, cover, k, std::move(images), payload_distance(value, k.element)};
  }
  if (cover.family() != Family::SU) throw UnsupportedError("sample_fiber_orientable: SU(n) or Spin(3) only");

  std::mt19937_64 rng(seed);
  std::vector<GroupElement> images;
  GroupElement prefix = GroupElement::identity(cover);
  for (int i = 0; i + 1 < p.handles(); ++i) {
    GroupElement a = random_element(cover, rng);
    GroupElement b = random_element(cover, rng);
    prefix = prefix * a * b * inv(a) * inv(b);
    images.push_back(std::move(a));
    images.push_back(std::move(b));
  }
  CommutatorPair last = commutator_preimage(inv(prefix) * k.element);
  images.push_back(std::move(last.a));
  images.push_back(std::move(last.b));
  const GroupElement value = evaluate_relation(images, p, cover);
  return {p, cover, k, std::move(images), payload_distance(value, k.element)};
}

Representation project_fiber_point(const FiberPoint& point, const GroupDescriptor& target, bool strict) {
  std::vector<GroupElement> images;
  for (const auto& x : point.images) images.push_back(project_cover(x, target));
  return Representation(point.presentation, target, std::move(images), strict);
}

}  // namespace flatmod
