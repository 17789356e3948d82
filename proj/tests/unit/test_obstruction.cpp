#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "flatmod/errors.hpp"
#include "flatmod/obstruction.hpp"

using namespace flatmod;

namespace {

const Complex I(0, 1);

RealMatrix diag3(double a, double b, double c) {
  RealMatrix m = RealMatrix::Zero(3, 3);
  m(0, 0) = a, m(1, 1) = b, m(2, 2) = c;
  return m;
}

Representation random_rep(const GroupDescriptor& g, const SurfacePresentation& s, const CenterElement& k, std::uint64_t seed) {
  const FiberPoint p = s.is_orientable() ? sample_fiber_orientable(s, g.cover(), k, seed)
                                         : sample_fiber_nonorientable(s, g.cover(), k, seed);
  return project_fiber_point(p, g);
}

// Class of an SO(3) representation computed through quaternion lifts to SU(2).
int so3_oracle(const Representation& rep) {
  std::vector<GroupElement> lifts;
  for (const GroupElement& r : rep.images())
    lifts.push_back(GroupElement::trusted(GroupDescriptor::su(2), oracle::so3_to_su2(r.orthogonal())));
  const GroupElement v = evaluate_relation(lifts, rep.presentation(), GroupDescriptor::su(2));
  return oracle::scalar_root_index(v.unitary());
}

// Class of a PSU(n) representation: scalar index of the relation word in SU(n), reduced mod squares.
int psu_oracle(const Representation& rep) {
  std::vector<GroupElement> lifts;
  for (const GroupElement& r : rep.images()) lifts.push_back(r.with_descriptor(GroupDescriptor::su(rep.group().n())));
  const int m = oracle::scalar_root_index(evaluate_relation(lifts, rep.presentation(), GroupDescriptor::su(rep.group().n())).unitary());
  if (rep.presentation().is_orientable()) return m;
  return rep.group().n() % 2 ? 0 : m % 2;
}

}  // namespace

TEST_CASE("lift_generators examples") {
  const GroupDescriptor so3 = GroupDescriptor::so(3);
  const Representation triv(SurfacePresentation::orientable(1), so3, {GroupElement::identity(so3), GroupElement::identity(so3)});
  for (const GroupElement& x : lift_generators(triv)) CHECK(std::abs(std::abs(x.spinor()[0]) - 1.0) <= 1e-14);

  const Representation rp2(SurfacePresentation::nonorientable(1), so3, {GroupElement::from_orthogonal(so3, diag3(-1, -1, 1))});
  const GroupElement c = lift_generators(rp2)[0];
  CHECK(std::abs(std::abs(c.spinor()[0b011]) - 1.0) <= 1e-14);

  std::mt19937_64 rng(51);
  const GroupDescriptor psu3 = GroupDescriptor::adjoint(Family::SU, 3);
  const Representation r = random_rep(psu3, SurfacePresentation::nonorientable(3), enumerate_center(GroupDescriptor::su(3)).elements[1], 5);
  const std::vector<GroupElement> lifts = lift_generators(r);
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    CHECK(lifts[i].descriptor() == GroupDescriptor::su(3));
    CHECK(max_abs(lifts[i].unitary() - r.images()[i].unitary()) == 0.0);
  }
}

TEST_CASE("obstruction examples") {
  const GroupDescriptor so3 = GroupDescriptor::so(3);
  SUBCASE("trivial representation") {
    for (const SurfacePresentation& s : {SurfacePresentation::orientable(2), SurfacePresentation::nonorientable(5)}) {
      const Representation rep(s, so3, std::vector<GroupElement>(s.generator_count(), GroupElement::identity(so3)));
      CHECK(obstruction(rep).is_identity());
    }
  }
  SUBCASE("RP^2 with a rotation by pi") {
    const Representation rep(SurfacePresentation::nonorientable(1), so3, {GroupElement::from_orthogonal(so3, diag3(-1, -1, 1))});
    const ObstructionClass c = obstruction(rep);
    CHECK(c.ambient == FiniteAbelianGroup::cyclic(2));
    CHECK(c.value == Residues{1});
    CHECK(c.surface_kind == SurfaceKind::Nonorientable);
  }
  SUBCASE("torus from the quaternion pair") {
    ComplexMatrix a(2, 2), b(2, 2);
    a << I, 0, 0, -I;
    b << 0, 1, -1, 0;
    const GroupDescriptor su2 = GroupDescriptor::su(2);
    const GroupElement ra = project_cover(su2_to_spin3(GroupElement::from_unitary(su2, a)), so3);
    const GroupElement rb = project_cover(su2_to_spin3(GroupElement::from_unitary(su2, b)), so3);
    const Representation rep(SurfacePresentation::orientable(1), so3, {ra, rb});
    const ObstructionClass c = obstruction(rep);
    CHECK(c.value == Residues{1});
    CHECK(c.surface_kind == SurfaceKind::Orientable);
  }
  SUBCASE("genus zero") {
    const Representation rep(SurfacePresentation::orientable(0), so3, {});
    CHECK(obstruction(rep).is_identity());
  }
  SUBCASE("simply connected group") {
    const GroupDescriptor su3 = GroupDescriptor::su(3);
    const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(3), su3, enumerate_center(su3).elements[0], 4);
    const ObstructionClass c = obstruction(Representation(p.presentation, su3, p.images));
    CHECK(c.ambient.size() == 1);
    CHECK(c.is_identity());
  }
}

TEST_CASE("kernel recognition fails loudly") {
  const KernelData k = covering_kernel(GroupDescriptor::so(3));
  const GroupElement off = GroupElement::trusted(GroupDescriptor::spin(3), Clifford::blade(3, 0b011));
  CHECK_THROWS_AS(recognize_kernel_element(off, k), KernelRecognitionError);
  CHECK(recognize_kernel_element(k.elements[1].element, k) == k.coords[1]);
}

TEST_CASE("obstruction agrees with independent oracles") {
  std::mt19937_64 rng(52);
  const GroupDescriptor so3 = GroupDescriptor::so(3);
  const CenterData spin3 = enumerate_center(GroupDescriptor::spin(3));
  for (const SurfacePresentation& s : {SurfacePresentation::orientable(1), SurfacePresentation::orientable(3),
                                       SurfacePresentation::nonorientable(1), SurfacePresentation::nonorientable(3),
                                       SurfacePresentation::nonorientable(6)})
    for (const CenterElement& k : spin3.elements)
      for (int t = 0; t < 10; ++t) {
        const Representation rep = random_rep(so3, s, k, rng());
        const ObstructionClass c = obstruction(rep);
        CHECK(c.value == Residues{so3_oracle(rep)});
        CHECK(c.value == k.coords);
      }
  for (int n : {3, 4}) {
    const GroupDescriptor g = GroupDescriptor::adjoint(Family::SU, n);
    for (const SurfacePresentation& s : {SurfacePresentation::orientable(2), SurfacePresentation::nonorientable(3),
                                         SurfacePresentation::nonorientable(6)})
      for (const CenterElement& k : enumerate_center(g.cover()).elements)
        for (int t = 0; t < 5; ++t) {
          const Representation rep = random_rep(g, s, k, rng());
          const ObstructionClass c = obstruction(rep);
          CHECK(c.value == Residues{psu_oracle(rep)});
        }
  }
}

TEST_CASE("obstruction is lift independent and conjugation invariant") {
  std::mt19937_64 rng(53);
  for (const GroupDescriptor& g : {GroupDescriptor::so(3), GroupDescriptor::adjoint(Family::SU, 3), GroupDescriptor::adjoint(Family::SU, 4),
                                   GroupDescriptor::so(5), GroupDescriptor::adjoint(Family::Spin, 6)})
    for (const SurfacePresentation& s : {SurfacePresentation::orientable(2), SurfacePresentation::nonorientable(3), SurfacePresentation::nonorientable(6)}) {
      const bool orientable_ok = g.family() == Family::SU || g == GroupDescriptor::so(3);
      if (s.is_orientable() && !orientable_ok) continue;
      for (const CenterElement& k : covering_kernel(g).elements) {
        const Representation rep = random_rep(g, s, k, rng());
        const LiftIndependenceReport r = obstruction_lift_independence_test(rep, 20, rng());
        CHECK(r.constant);
        CHECK(r.trials == 20);
        const ObstructionClass c = obstruction(rep);
        for (int t = 0; t < 10; ++t) CHECK(obstruction(conjugate_representation(rep, random_element(g, rng))) == c);
      }
    }
}

TEST_CASE("nonorientable raw kernel values move by squares only") {
  const GroupDescriptor psu4 = GroupDescriptor::adjoint(Family::SU, 4);
  const KernelData kernel = covering_kernel(psu4);
  const Representation rep = random_rep(psu4, SurfacePresentation::nonorientable(3), kernel.elements[1], 8);
  const LiftIndependenceReport r = obstruction_lift_independence_test(rep, 50, 9);
  bool moved = false;
  for (const Residues& raw : r.raw_kernel_values) {
    CHECK((raw[0] - r.raw_kernel_values[0][0]) % 2 == 0);
    moved = moved || raw != r.raw_kernel_values[0];
  }
  CHECK(moved);
  CHECK(r.constant);
}

TEST_CASE("trivial kernel is vacuously lift independent") {
  const GroupDescriptor su2 = GroupDescriptor::su(2);
  const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(3), su2, enumerate_center(su2).elements[0], 2);
  CHECK(obstruction_lift_independence_test(Representation(p.presentation, su2, p.images), 5, 1).constant);
}

TEST_CASE("every class is realized") {
  for (const GroupDescriptor& g : {GroupDescriptor::so(3), GroupDescriptor::adjoint(Family::SU, 4), GroupDescriptor::adjoint(Family::Spin, 4)})
    for (int crosscaps : {3, 6}) {
      const KernelData kernel = covering_kernel(g);
      const SquaresQuotient sq = fa_quotient_by_squares(kernel.group);
      std::set<Residues> seen;
      for (std::size_t i = 0; i < kernel.elements.size(); ++i) {
        const ObstructionClass c = obstruction(random_rep(g, SurfacePresentation::nonorientable(crosscaps), kernel.elements[i], i));
        CHECK(c.value == sq.project(kernel.coords[i]));
        seen.insert(c.value);
      }
      CHECK(static_cast<long>(seen.size()) == sq.quotient.size());
    }
}

TEST_CASE("h2 coefficients") {
  const GroupDescriptor so3 = GroupDescriptor::so(3), psu3 = GroupDescriptor::adjoint(Family::SU, 3);
  CHECK(h2_coefficients(SurfacePresentation::nonorientable(3), so3) == FiniteAbelianGroup::cyclic(2));
  CHECK(h2_coefficients(SurfacePresentation::nonorientable(3), psu3).size() == 1);
  CHECK(h2_coefficients(SurfacePresentation::orientable(2), psu3) == FiniteAbelianGroup::cyclic(3));
  CHECK(h2_coefficients(SurfacePresentation::nonorientable(5), GroupDescriptor::adjoint(Family::Spin, 4)).size() == 4);
}

TEST_CASE("component count predictions") {
  const GroupDescriptor so3 = GroupDescriptor::so(3), psu3 = GroupDescriptor::adjoint(Family::SU, 3);
  auto count = [](const SurfacePresentation& s, const GroupDescriptor& g) {
    const ComponentPrediction p = predict_component_count(s, g);
    REQUIRE(p.status == PredictionStatus::Count);
    return *p.count;
  };
  CHECK(count(SurfacePresentation::orientable(2), so3) == 2);
  CHECK(count(SurfacePresentation::nonorientable(5), so3) == 2);
  CHECK(count(SurfacePresentation::nonorientable(3), psu3) == 1);
  CHECK(count(SurfacePresentation::orientable(2), psu3) == 3);
  CHECK(count(SurfacePresentation::orientable(1), psu3) == 3);
  CHECK(count(SurfacePresentation::orientable(0), psu3) == 1);
  CHECK(count(SurfacePresentation::nonorientable(1), GroupDescriptor::su(4)) == 3);
  CHECK(count(SurfacePresentation::nonorientable(1), GroupDescriptor::sp(3)) == 4);
  CHECK(count(SurfacePresentation::nonorientable(1), GroupDescriptor::spin(5)) == 3);
  CHECK(count(SurfacePresentation::nonorientable(7), GroupDescriptor::adjoint(Family::SU, 6)) == 2);
  for (int k : {2, 4})
    for (const GroupDescriptor& g : {so3, psu3, GroupDescriptor::su(2), GroupDescriptor::sp(2)}) {
      const ComponentPrediction p = predict_component_count(SurfacePresentation::nonorientable(k), g);
      CHECK(p.status == PredictionStatus::OpenCase);
      CHECK(!p.count.has_value());
    }
  CHECK(predict_component_count(SurfacePresentation::nonorientable(1), so3).status == PredictionStatus::Unsupported);
}
