#include "flatmod/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "flatmod/components.hpp"
#include "flatmod/obstruction.hpp"
#include "flatmod/paths.hpp"

namespace flatmod {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

struct Runner {
  std::vector<SelftestResult> results;

  void run(const std::string& name, const std::function<std::string(bool&)>& body) {
    bool ok = true;
    std::string detail;
    try {
      detail = body(ok);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    results.push_back({name, ok, detail});
  }
};

Clifford random_clifford(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> c(std::size_t{1} << n);
  for (double& v : c) v = g(rng);
  return Clifford(n, c);
}

CartanVector random_cartan(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  RealVector v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  v.array() -= v.mean();
  return CartanVector(v);
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed) {
  Runner r;
  std::mt19937_64 rng(seed);

  r.run("clifford associativity and reference product", [&](bool& ok) {
    double worst = 0;
    for (int n = 1; n <= 5; ++n)
      for (int t = 0; t < 10; ++t) {
        const Clifford x = random_clifford(n, rng), y = random_clifford(n, rng), z = random_clifford(n, rng);
        worst = std::max(worst, ((x * y) * z).max_abs_diff(x * (y * z)) / (1 + (x * y * z).norm()));
        worst = std::max(worst, clifford_mul(x, y).max_abs_diff(clifford_mul_reference(x, y)));
      }
    ok = worst <= 1e-12;
    return "max deviation " + fmt(worst);
  });

  r.run("quotient by squares", [&](bool& ok) {
    ok = fa_quotient_by_squares(FiniteAbelianGroup::cyclic(4)).quotient.size() == 2 &&
         fa_quotient_by_squares(FiniteAbelianGroup::cyclic(3)).quotient.size() == 1 &&
         fa_quotient_by_squares(FiniteAbelianGroup({2, 2})).quotient.size() == 4;
    return std::string("Z/4, Z/3, Z/2 x Z/2");
  });

  r.run("unitary eigendecomposition reconstructs", [&](bool& ok) {
    double worst = 0;
    for (int n = 2; n <= 6; ++n)
      for (int t = 0; t < 5; ++t) {
        const ComplexMatrix u = random_unitary(n, rng);
        const UnitaryEig e = unitary_eig(u);
        worst = std::max(worst, max_abs(e.vectors * phase_diagonal(e.angles) * e.vectors.adjoint() - u));
      }
    ok = worst <= 1e-10;
    return "max deviation " + fmt(worst);
  });

  r.run("covering kernels are central and map to the identity", [&](bool& ok) {
    const std::vector<GroupDescriptor> groups = {GroupDescriptor::so(3), GroupDescriptor::so(5),
                                                 GroupDescriptor::adjoint(Family::SU, 3),
                                                 GroupDescriptor::adjoint(Family::Sp, 2),
                                                 GroupDescriptor::adjoint(Family::Spin, 6)};
    double worst = 0;
    for (const GroupDescriptor& d : groups) {
      const KernelData k = covering_kernel(d);
      const GroupElement x = random_element(d.cover(), rng);
      for (const CenterElement& z : k.elements) {
        worst = std::max(worst, payload_distance(z.element * x, x * z.element));
        worst = std::max(worst, distance(project_cover(z.element, d), GroupElement::identity(d)));
      }
    }
    ok = worst <= 1e-10;
    return "max deviation " + fmt(worst);
  });

  r.run("square roots square back", [&](bool& ok) {
    double worst = 0;
    for (const GroupDescriptor& d : {GroupDescriptor::su(3), GroupDescriptor::so(4), GroupDescriptor::sp(2),
                                     GroupDescriptor::spin(5)})
      for (int t = 0; t < 5; ++t) {
        const GroupElement g = random_element(d, rng);
        const GroupElement s = any_square_root(g);
        worst = std::max(worst, payload_distance(s * s, g));
      }
    ok = worst <= 1e-9;
    return "max deviation " + fmt(worst);
  });

  r.run("Spin lift projects back", [&](bool& ok) {
    double worst = 0;
    for (int n = 3; n <= 7; ++n) {
      const GroupElement rot = random_element(GroupDescriptor::so(n), rng);
      worst = std::max(worst, payload_distance(project_cover(lift_so_to_spin(rot), GroupDescriptor::so(n)), rot));
    }
    ok = worst <= 1e-10;
    return "max deviation " + fmt(worst);
  });

  r.run("Coxeter solve, commutation identity and eigenvalue margin", [&](bool& ok) {
    double solve = 0, ident = 0, margin = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 2; n <= 6; ++n) {
      const CoxeterRealization w = coxeter_element(n);
      for (int t = 0; t < 10; ++t) {
        const CartanVector xi = random_cartan(n, rng);
        const CartanVector xp = coxeter_solve(w, xi);
        solve = std::max(solve, (weyl_action(w, xp).xi() - xp.xi() - xi.xi()).cwiseAbs().maxCoeff());
        ident = std::max(ident, commutation_identity_check(w, xi, unit(rng)));
      }
      margin = std::max(margin, std::abs(coxeter_unit_eigenvalue_margin(w) - 2 * std::sin(std::numbers::pi / n)));
    }
    ok = solve <= 1e-10 && ident <= 1e-9 && margin <= 1e-10;
    return "solve " + fmt(solve) + ", identity " + fmt(ident) + ", margin " + fmt(margin);
  });

  r.run("commutator preimages", [&](bool& ok) {
    double worst = 0;
    for (int n = 2; n <= 5; ++n) {
      const GroupDescriptor d = GroupDescriptor::su(n);
      std::vector<GroupElement> targets;
      for (const CenterElement& z : enumerate_center(d).elements) targets.push_back(z.element);
      for (int t = 0; t < 5; ++t) targets.push_back(random_element(d, rng));
      for (const GroupElement& g : targets) {
        const CommutatorPair p = commutator_preimage(g);
        worst = std::max(worst, payload_distance(p.a * p.b * inv(p.a) * inv(p.b), g));
      }
    }
    ok = worst <= 1e-9;
    return "max residual " + fmt(worst);
  });

  r.run("fiber samples land in the fiber", [&](bool& ok) {
    double worst = 0;
    for (const GroupDescriptor& d : {GroupDescriptor::su(2), GroupDescriptor::su(4), GroupDescriptor::spin(3),
                                     GroupDescriptor::sp(2)})
      for (const CenterElement& k : enumerate_center(d).elements)
        for (int crosscaps : {3, 6}) {
          const FiberPoint p = sample_fiber_nonorientable(SurfacePresentation::nonorientable(crosscaps), d, k, rng());
          worst = std::max(worst, p.residual);
        }
    for (const GroupDescriptor& d : {GroupDescriptor::su(3), GroupDescriptor::spin(3)})
      for (const CenterElement& k : enumerate_center(d).elements) {
        const FiberPoint p = sample_fiber_orientable(SurfacePresentation::orientable(2), d, k, rng());
        worst = std::max(worst, p.residual);
      }
    ok = worst <= 1e-9;
    return "max residual " + fmt(worst);
  });

  r.run("obstruction is lift- and conjugation-invariant", [&](bool& ok) {
    int cases = 0;
    for (const GroupDescriptor& g : {GroupDescriptor::so(3), GroupDescriptor::adjoint(Family::SU, 3)})
      for (int crosscaps : {3, 6})
        for (const CenterElement& k : enumerate_center(g.cover()).elements) {
          const Representation rep =
              project_fiber_point(sample_fiber_nonorientable(SurfacePresentation::nonorientable(crosscaps), g.cover(), k, rng()), g);
          const ObstructionClass c = obstruction(rep);
          if (!obstruction_lift_independence_test(rep, 5, rng()).constant) ok = false;
          if (!(obstruction(conjugate_representation(rep, random_element(g, rng))) == c)) ok = false;
          ++cases;
        }
    return std::to_string(cases) + " representations";
  });

  r.run("obstruction realizes every class", [&](bool& ok) {
    for (const GroupDescriptor& g : {GroupDescriptor::so(3), GroupDescriptor::adjoint(Family::SU, 4)}) {
      const KernelData kernel = covering_kernel(g);
      const SquaresQuotient sq = fa_quotient_by_squares(kernel.group);
      std::vector<Residues> seen;
      for (std::size_t i = 0; i < kernel.elements.size(); ++i) {
        const Representation rep = project_fiber_point(
            sample_fiber_nonorientable(SurfacePresentation::nonorientable(3), g.cover(), kernel.elements[i], rng()), g);
        const ObstructionClass c = obstruction(rep);
        if (c.value != sq.project(kernel.coords[i])) ok = false;
        if (std::find(seen.begin(), seen.end(), c.value) == seen.end()) seen.push_back(c.value);
      }
      if (static_cast<long>(seen.size()) != sq.quotient.size()) ok = false;
    }
    return std::string("SO(3), PSU(4) with 3 crosscaps");
  });

  r.run("relation paths stay in the fiber", [&](bool& ok) {
    double worst = 0, ends = 0;
    for (int n = 2; n <= 4; ++n) {
      const GroupDescriptor d = GroupDescriptor::su(n);
      for (const CenterElement& k : enumerate_center(d).elements) {
        const PathReport odd = validate_path(connect_odd(k, random_element(d, rng), 1), 21, 1e-9);
        const PathReport even =
            validate_path(connect_even(k, random_element(d, rng), random_element(d, rng), 2), 21, 1e-9);
        worst = std::max({worst, odd.max_residual, even.max_residual});
        ends = std::max({ends, odd.start_residual, odd.end_residual, even.start_residual, even.end_residual});
      }
    }
    ok = worst <= 1e-9 && ends <= 1e-10;
    return "max residual " + fmt(worst) + ", endpoints " + fmt(ends);
  });

  r.run("corrupted path is rejected", [&](bool& ok) {
    const GroupDescriptor d = GroupDescriptor::su(3);
    const CenterElement k = enumerate_center(d).elements[1];
    RelationPath p = connect_odd(k, random_element(d, rng), 1);
    p.frames[0].xi_prime = p.frames[0].xi_prime * -1.0;
    const PathReport rep = validate_path(p, 11, 1e-9);
    ok = !rep.passed && rep.max_residual > 1e-3;
    return "max residual " + fmt(rep.max_residual);
  });

  r.run("involution counts and classification", [&](bool& ok) {
    for (int n = 2; n <= 8; ++n)
      if (static_cast<int>(involutions_su(n).size()) != n / 2 + 1) ok = false;
    for (int n = 1; n <= 4; ++n)
      if (static_cast<int>(involutions_sp(n).size()) != n + 1) ok = false;
    for (const InvolutionClass& c : involutions_su(5)) {
      const GroupElement h = random_element(GroupDescriptor::su(5), rng);
      if (classify_involution(h * c.representative * inv(h)) != c.index) ok = false;
    }
    for (const InvolutionClass& c : involutions_sp(3)) {
      const GroupElement h = random_element(GroupDescriptor::sp(3), rng);
      if (classify_involution(h * c.representative * inv(h)) != c.index) ok = false;
    }
    return std::string("SU n = 2..8, Sp n = 1..4");
  });

  r.run("Spin square report is consistent", [&](bool& ok) {
    std::string counts;
    for (int n = 3; n <= 7; ++n) {
      const SpinSquareReport rep = enumerate_spin_square_classes(n);
      for (const SpinCandidate& c : rep.candidates) {
        if (c.cross_check > 1e-12) ok = false;
        if (c.square_sign != (c.j % 2 ? -1 : 1)) ok = false;
      }
      counts += (counts.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(rep.computed_count) + "/" +
                std::to_string(rep.paper_count);
    }
    return "computed/published " + counts;
  });

  r.run("component predictions", [&](bool& ok) {
    auto count = [](const std::string& kind, int c, const GroupDescriptor& g) {
      const SurfacePresentation s =
          kind == "o" ? SurfacePresentation::orientable(c) : SurfacePresentation::nonorientable(c);
      const ComponentPrediction p = predict_component_count(s, g);
      return p.status == PredictionStatus::Count ? *p.count : -1L;
    };
    const GroupDescriptor psu3 = GroupDescriptor::adjoint(Family::SU, 3);
    ok = count("o", 2, GroupDescriptor::so(3)) == 2 && count("n", 5, GroupDescriptor::so(3)) == 2 &&
         count("n", 3, psu3) == 1 && count("o", 2, psu3) == 3;
    for (int c : {2, 4})
      if (predict_component_count(SurfacePresentation::nonorientable(c), GroupDescriptor::so(3)).status !=
          PredictionStatus::OpenCase)
        ok = false;
    return std::string("spot values and open cases");
  });

  return r.results;
}

}  // namespace flatmod
