#include "flatmod/paths.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

void require_su(const GroupDescriptor& d, const char* what) {
  if (d.family() != Family::SU || !d.quotient().empty())
    throw UnsupportedError(std::string(what) + ": path constructions are implemented for SU(n) only");
}

// Frame g with g^-1 x g diagonal, and xi with exp(xi) = g^-1 x g * shift^-1.
FramedHandle make_frame(const CoxeterRealization& w, const GroupElement& x, const std::vector<double>& shift,
                        GroupElement& frame_out) {
  const TorusConjugation tc = conjugate_to_torus(x);
  const std::size_t n = tc.angles.size();

  // Reorder the eigenvectors so each torus coordinate sits next to the closest shift angle.
  std::vector<int> order;
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    int best = -1;
    double gap = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double d = std::abs(std::remainder(tc.angles[i] - shift[j], 2 * std::numbers::pi));
      if (best < 0 || d < gap - 1e-12) best = static_cast<int>(i), gap = d;
    }
    used[best] = true;
    order.push_back(best);
  }
  ComplexMatrix frame(n, n);
  std::vector<double> shifted(n);
  int inversions = 0;
  for (std::size_t j = 0; j < n; ++j) {
    frame.col(j) = tc.frame.unitary().col(order[j]);
    shifted[j] = std::remainder(tc.angles[order[j]] - shift[j], 2 * std::numbers::pi);
    for (std::size_t i = 0; i < j; ++i) inversions += order[i] > order[j];
  }
  if (inversions % 2) frame.col(0) *= -1.0;
  const CartanVector xi = torus_log(shifted);

  const UnitaryEig frame_eig = unitary_eig(frame);
  const CartanVector frame_log = torus_log(frame_eig.angles);
  frame_out = GroupElement::trusted(x.descriptor(), frame);
  return FramedHandle{frame_eig.vectors, frame_log, xi, coxeter_solve(w, xi)};
}

ComplexMatrix frame_at(const FramedHandle& f, double t) {
  std::vector<double> angles(f.frame_log.n());
  for (int j = 0; j < f.frame_log.n(); ++j) angles[j] = t * f.frame_log.xi()(j);
  return f.frame_vectors * phase_diagonal(angles) * f.frame_vectors.adjoint();
}

std::vector<double> torus_angles_of(const GroupElement& q) { return diagonal_angles(q.unitary()); }

}  // namespace

std::vector<GroupElement> RelationPath::at(double t) const {
  const GroupDescriptor& d = group;
  const ComplexMatrix& a = coxeter_rep.unitary();
  std::vector<GroupElement> out(presentation.generator_count(), GroupElement::identity(d));
  auto conj = [&](const ComplexMatrix& g, const ComplexMatrix& x) {
    return GroupElement::trusted(d, ComplexMatrix(g * x * g.adjoint()));
  };
  auto handle = [&](const FramedHandle& f, std::size_t slot) {
    const ComplexMatrix g = frame_at(f, t);
    out[slot] = conj(g, a);
    out[slot + 1] = conj(g, torus_exp(f.xi_prime, -2.0 * t).unitary());
    return g;
  };
  const ComplexMatrix& qm = q.unitary();
  const std::size_t last = out.size() - 1;
  if (frames.size() == 1) {
    const ComplexMatrix g = handle(frames[0], 0);
    out[last] = conj(g, qm * torus_exp(frames[0].xi, t).unitary());
  } else {
    handle(frames[1], 0);
    const ComplexMatrix g1 = handle(frames[0], 2);
    const ComplexMatrix g2 = frame_at(frames[1], t);
    out[last - 1] = conj(g1, torus_exp(frames[0].xi, t).unitary());
    out[last] = conj(g2, qm * torus_exp(frames[1].xi, t).unitary());
  }
  return out;
}

RelationPath connect_odd(const CenterElement& k, const GroupElement& c, int l) {
  const GroupDescriptor& d = c.descriptor();
  require_su(d, "connect_odd");
  if (!(k.element.descriptor() == d)) throw DimensionError("connect_odd: k and c live in different groups");
  if (l < 1) throw UnsupportedError("connect_odd: needs l >= 1 (crosscap number >= 3)");

  const int n = d.n();
  const CoxeterRealization w = coxeter_element(n);
  const GroupElement q = central_square_root_in_torus(k);
  GroupElement g = GroupElement::identity(d);
  FramedHandle frame = make_frame(w, c, torus_angles_of(q), g);

  const SurfacePresentation p = SurfacePresentation::nonorientable(2 * l + 1);
  const GroupElement e = GroupElement::identity(d);
  std::vector<GroupElement> start(p.generator_count(), e), end(p.generator_count(), e);
  start[0] = w.rep;
  start.back() = q;
  end[0] = g * w.rep * inv(g);
  end[1] = g * torus_exp(frame.xi_prime, -2.0) * inv(g);
  end.back() = c;

  return RelationPath{p, d, k, w.rep, q, {std::move(frame)}, std::move(start), std::move(end)};
}

RelationPath connect_even(const CenterElement& k, const GroupElement& c1, const GroupElement& c2, int l) {
  const GroupDescriptor& d = c1.descriptor();
  require_su(d, "connect_even");
  if (!(c2.descriptor() == d) || !(k.element.descriptor() == d))
    throw DimensionError("connect_even: k, c1 and c2 live in different groups");
  if (l < 2) throw UnsupportedError("connect_even: needs l >= 2 (crosscap number >= 6)");

  const int n = d.n();
  const CoxeterRealization w = coxeter_element(n);
  const GroupElement q = central_square_root_in_torus(k);
  GroupElement g1 = GroupElement::identity(d), g2 = GroupElement::identity(d);
  FramedHandle f1 = make_frame(w, c1, std::vector<double>(n, 0.0), g1);
  FramedHandle f2 = make_frame(w, c2, torus_angles_of(q), g2);

  const SurfacePresentation p = SurfacePresentation::nonorientable(2 * l + 2);
  const GroupElement e = GroupElement::identity(d);
  const std::size_t last = p.generator_count() - 1;
  std::vector<GroupElement> start(p.generator_count(), e), end(p.generator_count(), e);
  start[0] = w.rep;
  start[2] = w.rep;
  start[last] = q;
  end[0] = g2 * w.rep * inv(g2);
  end[1] = g2 * torus_exp(f2.xi_prime, -2.0) * inv(g2);
  end[2] = g1 * w.rep * inv(g1);
  end[3] = g1 * torus_exp(f1.xi_prime, -2.0) * inv(g1);
  end[last - 1] = c1;
  end[last] = c2;

  return RelationPath{p, d, k, w.rep, q, {std::move(f1), std::move(f2)}, std::move(start), std::move(end)};
}

PathReport validate_path(const RelationPath& p, int samples, double tol) {
  if (samples < 2) throw ValidationError("validate_path: need at least 2 samples");
  PathReport r;
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    const std::vector<GroupElement> tuple = p.at(t);
    const double res = payload_distance(evaluate_relation(tuple, p.presentation, p.group), p.k.element);
    r.residuals.push_back(res);
    r.max_residual = std::max(r.max_residual, res);
  }
  auto endpoint = [&](double t, const std::vector<GroupElement>& declared) {
    const std::vector<GroupElement> tuple = p.at(t);
    double worst = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) worst = std::max(worst, payload_distance(tuple[i], declared[i]));
    r.max_residual = std::max(
        r.max_residual, payload_distance(evaluate_relation(declared, p.presentation, p.group), p.k.element));
    return worst;
  };
  r.start_residual = endpoint(0.0, p.start);
  r.end_residual = endpoint(1.0, p.end);
  r.passed = r.max_residual <= tol;
  return r;
}

}  // namespace flatmod
