// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "../oracles.hpp"
#include "flatmod/components.hpp"
#include "flatmod/obstruction.hpp"
#include "flatmod/paths.hpp"

using namespace flatmod;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) {
    o.passed = false;
    o.detail += "; runtime " + std::to_string(secs) + " s over budget";
  }
  if (!o.passed) ++failures;
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
}

CartanVector random_cartan(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  RealVector v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  v.array() -= v.mean();
  return CartanVector(v);
}

Representation random_rep(const GroupDescriptor& g, const SurfacePresentation& s, const CenterElement& k, std::uint64_t seed) {
  const FiberPoint p = s.is_orientable() ? sample_fiber_orientable(s, g.cover(), k, seed)
                                         : sample_fiber_nonorientable(s, g.cover(), k, seed);
  return project_fiber_point(p, g);
}

// Eigenvalue multiplicity of -1 computed from the characteristic data of a diagonalizable involution:
// trace = (#+1) - (#-1).
int minus_count_from_trace(const ComplexMatrix& m) {
  return static_cast<int>(std::lround((m.rows() - m.trace().real()) / 2));
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);

  criterion(1, "RP^2 involution counts for SU(n), Sp(n)", 1.0, [&]() -> Outcome {
    bool ok = true;
    std::ostringstream why;
    for (int n = 2; n <= 8; ++n) {
      const auto list = involutions_su(n);
      if (static_cast<int>(list.size()) != n / 2 + 1) ok = false, why << " SU(" << n << ") count";
      std::set<int> indices;
      for (const InvolutionClass& c : list) {
        const ComplexMatrix& m = c.representative.unitary();
        ComplexMatrix expect = ComplexMatrix::Identity(n, n);
        for (int i = 0; i < 2 * c.index; ++i) expect(i, i) = -1.0;
        if (max_abs(m - expect) > 0) ok = false, why << " SU(" << n << ") representative " << c.index;
        // Same class after a random conjugation, and the class agrees with the trace count.
        const GroupElement h = random_element(GroupDescriptor::su(n), rng);
        const int cls = classify_involution(h * c.representative * inv(h));
        if (cls != c.index || minus_count_from_trace(m) != 2 * cls) ok = false, why << " SU(" << n << ") classify " << c.index;
        indices.insert(cls);
      }
      if (indices.size() != list.size()) ok = false, why << " SU(" << n << ") duplicate classes";
    }
    for (int n = 1; n <= 4; ++n) {
      const auto list = involutions_sp(n);
      if (static_cast<int>(list.size()) != n + 1) ok = false, why << " Sp(" << n << ") count";
      std::set<int> indices;
      for (const InvolutionClass& c : list) {
        const ComplexMatrix& m = c.representative.unitary();
        ComplexMatrix expect = ComplexMatrix::Identity(2 * n, 2 * n);
        for (int i = 0; i < c.index; ++i) expect(i, i) = expect(n + i, n + i) = -1.0;
        if (max_abs(m - expect) > 0) ok = false, why << " Sp(" << n << ") representative " << c.index;
        const GroupElement h = random_element(GroupDescriptor::sp(n), rng);
        const int cls = classify_involution(h * c.representative * inv(h));
        if (cls != c.index || minus_count_from_trace(m) != 2 * cls) ok = false, why << " Sp(" << n << ") classify " << c.index;
        indices.insert(cls);
      }
      if (indices.size() != list.size()) ok = false, why << " Sp(" << n << ") duplicate classes";
    }
    return {ok, ok ? "SU(2..8) give [n/2]+1, Sp(1..4) give n+1, representatives match element-for-element" : why.str()};
  });

  criterion(2, "obstruction well-definedness", 60.0, [&]() -> Outcome {
    const GroupDescriptor so3 = GroupDescriptor::so(3), psu3 = GroupDescriptor::adjoint(Family::SU, 3);
    std::vector<SurfacePresentation> surfaces = {SurfacePresentation::orientable(1), SurfacePresentation::orientable(2),
                                                 SurfacePresentation::orientable(3), SurfacePresentation::nonorientable(3),
                                                 SurfacePresentation::nonorientable(5), SurfacePresentation::nonorientable(6)};
    long reps = 0, checks = 0;
    std::string bad;
    for (const GroupDescriptor& g : {so3, psu3}) {
      const KernelData kernel = covering_kernel(g);
      std::uniform_int_distribution<std::size_t> pick(0, kernel.elements.size() - 1);
      for (const SurfacePresentation& s : surfaces)
        for (int r = 0; r < 100; ++r) {
          const Representation rep = random_rep(g, s, kernel.elements[pick(rng)], rng());
          const ObstructionClass c = obstruction(rep);
          const LiftIndependenceReport lift = obstruction_lift_independence_test(rep, 100, rng());
          if (!lift.constant || !(lift.reference == c)) bad = g.name() + " " + s.name() + " lift";
          for (int t = 0; t < 100; ++t)
            if (!(obstruction(conjugate_representation(rep, random_element(g, rng))) == c)) bad = g.name() + " " + s.name() + " conjugation";
          ++reps;
          checks += 200;
        }
    }
    return {bad.empty(), std::to_string(reps) + " representations, " + std::to_string(checks) + " perturbed evaluations" +
                             (bad.empty() ? ", all classes equal" : ", mismatch: " + bad)};
  });

  criterion(3, "surjectivity of the nonorientable obstruction", 30.0, [&]() -> Outcome {
    std::ostringstream detail;
    bool ok = true;
    for (const GroupDescriptor& g : {GroupDescriptor::so(3), GroupDescriptor::adjoint(Family::SU, 4)})
      for (int crosscaps : {3, 6}) {
        const KernelData kernel = covering_kernel(g);
        const SquaresQuotient sq = fa_quotient_by_squares(kernel.group);
        std::set<Residues> realized;
        for (std::size_t i = 0; i < kernel.elements.size(); ++i) {
          const Representation rep = random_rep(g, SurfacePresentation::nonorientable(crosscaps), kernel.elements[i], rng());
          const ObstructionClass c = obstruction(rep);
          if (c.value != sq.project(kernel.coords[i])) ok = false;
          realized.insert(c.value);
        }
        std::set<Residues> all;
        for (const Residues& r : sq.quotient.elements()) all.insert(r);
        if (realized != all) ok = false;
        detail << g.name() << "/k=" << crosscaps << ": " << realized.size() << "/" << all.size() << " classes; ";
      }
    return {ok, detail.str()};
  });

  criterion(4, "relation paths stay in the fiber", 60.0, [&]() -> Outcome {
    double worst = 0, ends = 0;
    int paths = 0;
    for (int n = 2; n <= 4; ++n) {
      const GroupDescriptor d = GroupDescriptor::su(n);
      for (const CenterElement& k : enumerate_center(d).elements)
        for (int t = 0; t < 20; ++t) {
          const RelationPath odd = connect_odd(k, random_element(d, rng), 1 + t % 2);
          const RelationPath even = connect_even(k, random_element(d, rng), random_element(d, rng), 2 + t % 2);
          for (const RelationPath* p : {&odd, &even}) {
            const PathReport r = validate_path(*p, 101, 1e-9);
            worst = std::max(worst, r.max_residual);
            ends = std::max({ends, r.start_residual, r.end_residual});
            // Last coordinates at t = 0 and t = 1 against their defining values.
            const std::vector<GroupElement> g0 = p->at(0.0), g1 = p->at(1.0);
            ends = std::max(ends, payload_distance(g0.back(), central_square_root_in_torus(k)));
            ends = std::max(ends, payload_distance(g1.back(), p->end.back()));
            ++paths;
          }
        }
    }
    const bool ok = worst <= 1e-9 && ends <= 1e-10;
    return {ok, std::to_string(paths) + " paths x 101 samples, max residual " + sci(worst) + ", endpoint residual " + sci(ends)};
  });

  criterion(5, "Coxeter machinery", 60.0, [&]() -> Outcome {
    double solve = 0, ident = 0, margin = 0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 2; n <= 6; ++n) {
      const CoxeterRealization w = coxeter_element(n);
      for (int t = 0; t < 100; ++t) {
        const CartanVector xi = random_cartan(n, rng);
        const CartanVector xp = coxeter_solve(w, xi);
        solve = std::max(solve, (weyl_action(w, xp).xi() - xp.xi() - xi.xi()).norm());
        const double s = unit(rng);
        ident = std::max(ident, commutation_identity_check(w, xi, s));
        // Same identity recomputed with a Taylor-series exponential.
        oracle::CMat e_xp(n, n), e_xi(n, n);
        e_xp.setZero();
        e_xi.setZero();
        for (int j = 0; j < n; ++j) {
          e_xp(j, j) = Complex(0, s * xp.xi()(j));
          e_xi(j, j) = Complex(0, s * xi.xi()(j));
        }
        const ComplexMatrix& a = w.rep.unitary();
        ident = std::max(ident, (a * oracle::expm(e_xp) * a.adjoint() * oracle::expm(-e_xp) - oracle::expm(e_xi)).norm());
      }
    }
    for (int n = 2; n <= 12; ++n) {
      // Closed form of min |lambda - 1| over the nontrivial n-th roots of unity.
      margin = std::max(margin, std::abs(coxeter_unit_eigenvalue_margin(coxeter_element(n)) - 2 * std::sin(std::numbers::pi / n)));
    }
    const bool ok = solve <= 1e-10 && ident <= 1e-9 && margin <= 1e-10;
    return {ok, "solve residual " + sci(solve) + ", identity residual " + sci(ident) + ", margin error " + sci(margin)};
  });

  criterion(6, "commutator preimages", 60.0, [&]() -> Outcome {
    double worst = 0;
    int targets = 0;
    for (int n = 2; n <= 5; ++n) {
      const GroupDescriptor d = GroupDescriptor::su(n);
      std::vector<GroupElement> list;
      for (const CenterElement& z : enumerate_center(d).elements) list.push_back(z.element);
      while (list.size() < 125) list.push_back(random_element(d, rng));
      for (const GroupElement& g : list) {
        const CommutatorPair p = commutator_preimage(g);
        const ComplexMatrix& a = p.a.unitary();
        const ComplexMatrix& b = p.b.unitary();
        worst = std::max(worst, (a * b * a.adjoint() * b.adjoint() - g.unitary()).norm());
        ++targets;
      }
    }
    return {worst <= 1e-9, std::to_string(targets) + " targets incl. all central elements, max residual " + sci(worst)};
  });

  criterion(7, "component count predictions", 1.0, [&]() -> Outcome {
    const GroupDescriptor so3 = GroupDescriptor::so(3), psu3 = GroupDescriptor::adjoint(Family::SU, 3);
    auto count = [](const SurfacePresentation& s, const GroupDescriptor& g) -> long {
      const ComponentPrediction p = predict_component_count(s, g);
      return p.status == PredictionStatus::Count ? *p.count : -1;
    };
    bool ok = count(SurfacePresentation::orientable(2), so3) == 2 && count(SurfacePresentation::nonorientable(5), so3) == 2 &&
              count(SurfacePresentation::nonorientable(3), psu3) == 1 && count(SurfacePresentation::orientable(2), psu3) == 3;
    const std::vector<GroupDescriptor> groups = {so3, psu3, GroupDescriptor::su(3), GroupDescriptor::so(5),
                                                 GroupDescriptor::adjoint(Family::SU, 4), GroupDescriptor::adjoint(Family::Spin, 4),
                                                 GroupDescriptor::adjoint(Family::Sp, 2), GroupDescriptor(Family::SU, 6, {{2}})};
    for (const GroupDescriptor& g : groups) {
      const std::vector<int> orders = covering_kernel(g).group.cyclic_orders();
      long k_size = 1;
      for (int d : orders) k_size *= d;
      for (int genus = 1; genus <= 4; ++genus)
        if (count(SurfacePresentation::orientable(genus), g) != k_size) ok = false;
      for (int c : {3, 5, 6, 7, 8})
        if (count(SurfacePresentation::nonorientable(c), g) != oracle::squares_quotient_size(orders)) ok = false;
      for (int c : {2, 4}) {
        const ComponentPrediction p = predict_component_count(SurfacePresentation::nonorientable(c), g);
        if (p.status != PredictionStatus::OpenCase || p.count.has_value()) ok = false;
      }
    }
    return {ok, "spot values (2, 2, 1, 3); |K| and |K/2K| on 8 groups; k = 2, 4 flagged open"};
  });

  criterion(8, "Spin discrepancy report", 30.0, [&]() -> Outcome {
    bool ok = true;
    std::ostringstream detail;
    for (int n = 3; n <= 7; ++n) {
      const SpinSquareReport r = enumerate_spin_square_classes(n);
      if (static_cast<int>(r.candidates.size()) != n / 2 + 1) ok = false;
      for (const SpinCandidate& c : r.candidates) {
        if (c.cross_check > 1e-12) ok = false;
        if (c.square.max_abs_diff(c.square_reference) > 1e-12) ok = false;
        if (c.j % 2 == 1 && c.square_sign != -1) ok = false;
        if (c.j % 2 == 0 && c.square_sign != 1) ok = false;
        if ((c.square_sign == -1) != (c.class_index == -1)) ok = false;
      }
      if (r.computed_count != static_cast<int>(r.classes.size()) || r.paper_count != n / 2 + 1) ok = false;
      if (r.discrepancy != (r.computed_count != r.paper_count || n >= 3)) ok = false;
      for (const SpinClass& c : r.classes)
        if ((c.representative * c.representative).max_abs_diff(Clifford::scalar(n, 1.0)) > 1e-12) ok = false;
      detail << "n=" << n << ": computed " << r.computed_count << " vs published " << r.paper_count << "; ";
    }
    detail << "odd-j candidates square to -1";
    return {ok, detail.str()};
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
