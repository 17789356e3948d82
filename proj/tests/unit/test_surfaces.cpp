#include <doctest.h>

#include "flatmod/errors.hpp"
#include "flatmod/surfaces.hpp"

using namespace flatmod;

namespace {

const Complex I(0, 1);

GroupElement su2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return GroupElement::from_unitary(GroupDescriptor::su(2), m);
}

}  // namespace

TEST_CASE("presentations") {
  const SurfacePresentation t2 = SurfacePresentation::orientable(2);
  CHECK(t2.generator_count() == 4);
  CHECK(t2.generator_names() == std::vector<std::string>{"a1", "b1", "a2", "b2"});
  CHECK(SurfacePresentation::orientable(0).generator_count() == 0);
  const SurfacePresentation n5 = SurfacePresentation::nonorientable(5);
  CHECK(n5.handles() == 2);
  CHECK(n5.squares() == 1);
  CHECK(n5.generator_count() == 5);
  CHECK(n5.generator_names().back() == "c");
  const SurfacePresentation n6 = SurfacePresentation::nonorientable(6);
  CHECK(n6.handles() == 2);
  CHECK(n6.squares() == 2);
  CHECK(n6.generator_names().back() == "c2");
  CHECK(SurfacePresentation::nonorientable(1).generator_count() == 1);
  CHECK(SurfacePresentation::nonorientable(2).generator_count() == 2);
  CHECK_THROWS(SurfacePresentation::nonorientable(0));
  CHECK_THROWS(SurfacePresentation::orientable(-1));
}

TEST_CASE("relation examples") {
  for (const SurfacePresentation& p : {SurfacePresentation::orientable(0), SurfacePresentation::orientable(3),
                                       SurfacePresentation::nonorientable(1), SurfacePresentation::nonorientable(6)}) {
    const GroupDescriptor d = GroupDescriptor::su(3);
    const std::vector<GroupElement> e(p.generator_count(), GroupElement::identity(d));
    CHECK(relation_residual(e, p, d) == 0.0);
  }
  const GroupElement a = su2(I, 0, 0, -I), b = su2(0, 1, -1, 0);
  const std::vector<GroupElement> ab = {a, b};
  const GroupElement rel = evaluate_relation(ab, SurfacePresentation::orientable(1), GroupDescriptor::su(2));
  CHECK(max_abs(rel.unitary() + ComplexMatrix::Identity(2, 2)) <= 1e-15);

  RealMatrix c = RealMatrix::Identity(3, 3);
  c(0, 0) = c(1, 1) = -1;
  const GroupDescriptor so3 = GroupDescriptor::so(3);
  const std::vector<GroupElement> cs = {GroupElement::from_orthogonal(so3, c)};
  CHECK(relation_residual(cs, SurfacePresentation::nonorientable(1), so3) <= 1e-15);
}

TEST_CASE("relation word order") {
  std::mt19937_64 rng(41);
  const GroupDescriptor d = GroupDescriptor::su(3);
  std::vector<GroupElement> x;
  for (int i = 0; i < 6; ++i) x.push_back(random_element(d, rng));
  const GroupElement odd = evaluate_relation(std::span(x).first(5), SurfacePresentation::nonorientable(5), d);
  const GroupElement expect_odd = x[0] * x[1] * inv(x[0]) * inv(x[1]) * x[2] * x[3] * inv(x[2]) * inv(x[3]) * x[4] * x[4];
  CHECK(payload_distance(odd, expect_odd) <= 1e-12);
  const GroupElement even = evaluate_relation(x, SurfacePresentation::nonorientable(6), d);
  const GroupElement expect_even =
      x[0] * x[1] * inv(x[0]) * inv(x[1]) * x[2] * x[3] * inv(x[2]) * inv(x[3]) * x[4] * x[4] * x[5] * x[5];
  CHECK(payload_distance(even, expect_even) <= 1e-12);
  CHECK_THROWS(evaluate_relation(std::span(x).first(4), SurfacePresentation::nonorientable(5), d));
}

TEST_CASE("representation validation") {
  const GroupElement a = su2(I, 0, 0, -I), b = su2(0, 1, -1, 0);
  CHECK_THROWS_AS(Representation(SurfacePresentation::orientable(1), GroupDescriptor::su(2), {a, b}), RelationError);
  const Representation loose(SurfacePresentation::orientable(1), GroupDescriptor::su(2), {a, b}, false);
  CHECK(!loose.satisfies_relation());
  // The same pair is a representation into PSU(2).
  const GroupDescriptor psu2 = GroupDescriptor::adjoint(Family::SU, 2);
  const Representation ok(SurfacePresentation::orientable(1), psu2, {a.with_descriptor(psu2), b.with_descriptor(psu2)});
  CHECK(ok.residual() <= 1e-15);
  CHECK_THROWS(Representation(SurfacePresentation::orientable(1), GroupDescriptor::su(2), {a}));
  CHECK(Representation(SurfacePresentation::orientable(0), GroupDescriptor::su(2), {}).residual() == 0.0);
}

TEST_CASE("conjugation equivariance") {
  std::mt19937_64 rng(42);
  const GroupDescriptor d = GroupDescriptor::su(3);
  const SurfacePresentation p = SurfacePresentation::nonorientable(5);
  const CenterData z = enumerate_center(d);
  for (int t = 0; t < 20; ++t) {
    std::vector<GroupElement> x;
    for (int i = 0; i < 5; ++i) x.push_back(random_element(d, rng));
    const GroupElement g = random_element(d, rng);
    std::vector<GroupElement> gx;
    for (const GroupElement& y : x) gx.push_back(g * y * inv(g));
    CHECK(payload_distance(evaluate_relation(gx, p, d), g * evaluate_relation(x, p, d) * inv(g)) <= 1e-10);
  }
  const FiberPoint fp = sample_fiber_nonorientable(p, d, z.elements[0], 7);
  const Representation rep(p, d, fp.images);
  const Representation same = conjugate_representation(rep, GroupElement::identity(d));
  const Representation central = conjugate_representation(rep, z.elements[2].element);
  for (int i = 0; i < 5; ++i) {
    CHECK(payload_distance(same.images()[i], rep.images()[i]) == 0.0);
    CHECK(payload_distance(central.images()[i], rep.images()[i]) <= 1e-14);
  }
}

TEST_CASE("commutator_preimage examples") {
  const GroupDescriptor d = GroupDescriptor::su(2);
  const CommutatorPair id = commutator_preimage(GroupElement::identity(d));
  CHECK(payload_distance(id.a, coxeter_element(2).rep) <= 1e-14);
  CHECK(payload_distance(id.b, GroupElement::identity(d)) <= 1e-14);

  const CommutatorPair m = commutator_preimage(enumerate_center(d).elements[1].element);
  ComplexMatrix a(2, 2);
  a << 0, -1, 1, 0;
  CHECK(max_abs(m.a.unitary() - a) <= 1e-14);
  RealVector xp(2);
  xp << -std::numbers::pi / 2, std::numbers::pi / 2;
  CHECK(payload_distance(m.b, torus_exp(CartanVector(xp))) <= 1e-14);
  CHECK(max_abs((m.a * m.b * inv(m.a) * inv(m.b)).unitary() + ComplexMatrix::Identity(2, 2)) <= 1e-14);

  CHECK_THROWS_AS(commutator_preimage(GroupElement::identity(GroupDescriptor::so(3))), UnsupportedError);
}

TEST_CASE("commutator_preimage sweep") {
  std::mt19937_64 rng(43);
  double worst = 0;
  for (int n = 2; n <= 5; ++n) {
    const GroupDescriptor d = GroupDescriptor::su(n);
    for (int t = 0; t < 125; ++t) {
      const GroupElement g = random_element(d, rng);
      const CommutatorPair p = commutator_preimage(g);
      worst = std::max(worst, payload_distance(p.a * p.b * inv(p.a) * inv(p.b), g));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("nonorientable fiber sampling") {
  const GroupDescriptor su2 = GroupDescriptor::su(2);
  const CenterData z = enumerate_center(su2);
  SUBCASE("RP^2, k = e") {
    const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(1), su2, z.elements[0], 1);
    CHECK(payload_distance(p.images[0], GroupElement::identity(su2)) <= 1e-14);
  }
  SUBCASE("SU(2), k = -I, one handle") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(3), su2, z.elements[1], seed);
      const GroupElement rel = evaluate_relation(p.images, p.presentation, su2);
      CHECK(payload_distance(rel, z.elements[1].element) <= 1e-9);
      CHECK(p.residual <= 1e-9);
    }
  }
  SUBCASE("even case, SU(2), k = I") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(4), su2, z.elements[0], seed);
      CHECK(p.residual <= 1e-9);
    }
  }
  SUBCASE("other covers and determinism") {
    for (const GroupDescriptor& d : {GroupDescriptor::su(4), GroupDescriptor::spin(3), GroupDescriptor::spin(6), GroupDescriptor::sp(2)})
      for (const CenterElement& k : enumerate_center(d).elements)
        for (int crosscaps : {1, 3, 6}) {
          const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(crosscaps), d, k, 99);
          CHECK(payload_distance(evaluate_relation(p.images, p.presentation, d), k.element) <= 1e-9);
          const FiberPoint q = sample_fiber_nonorientable(SurfacePresentation::nonorientable(crosscaps), d, k, 99);
          for (std::size_t i = 0; i < p.images.size(); ++i) CHECK(payload_distance(p.images[i], q.images[i]) == 0.0);
        }
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(sample_fiber_nonorientable(SurfacePresentation::orientable(1), su2, z.elements[0], 1), UnsupportedError);
    CHECK_THROWS_AS(sample_fiber_nonorientable(SurfacePresentation::nonorientable(3), GroupDescriptor::so(3),
                                               z.elements[0], 1), UnsupportedError);
  }
}

TEST_CASE("orientable fiber sampling") {
  for (const GroupDescriptor& d : {GroupDescriptor::su(2), GroupDescriptor::su(3), GroupDescriptor::spin(3)})
    for (const CenterElement& k : enumerate_center(d).elements)
      for (int genus = 1; genus <= 3; ++genus)
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
          const FiberPoint p = sample_fiber_orientable(SurfacePresentation::orientable(genus), d, k, seed);
          CHECK(payload_distance(evaluate_relation(p.images, p.presentation, d), k.element) <= 1e-9);
        }
  CHECK_THROWS_AS(sample_fiber_orientable(SurfacePresentation::orientable(1), GroupDescriptor::sp(2),
                                          enumerate_center(GroupDescriptor::sp(2)).elements[0], 1), UnsupportedError);
}

TEST_CASE("projected fiber points are representations") {
  const GroupDescriptor so3 = GroupDescriptor::so(3);
  const CenterData z = enumerate_center(GroupDescriptor::spin(3));
  for (const CenterElement& k : z.elements) {
    const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(5), so3.cover(), k, 3);
    const Representation rep = project_fiber_point(p, so3);
    CHECK(rep.satisfies_relation());
  }
}
