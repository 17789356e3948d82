#include "flatmod/components.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

int minus_one_multiplicity(const ComplexMatrix& m) {
  const UnitaryEig eig = unitary_eig(m);
  int count = 0;
  for (double a : eig.angles)
    if (std::abs(std::abs(a) - std::numbers::pi) < 1e-6) ++count;
  return count;
}

using BladeKey = std::vector<long>;

BladeKey key_of(const Clifford& x) {
  BladeKey k;
  for (double c : x.coeffs()) {
    const double r = std::round(c);
    if (std::abs(c - r) > 1e-9) throw ValidationError("spin class search: conjugate left the signed-blade lattice");
    k.push_back(static_cast<long>(r));
  }
  return k;
}

std::vector<double> spin_signature(const Clifford& x) {
  const int n = x.n();
  const BladeMask top = (BladeMask{1} << n) - 1;
  const GroupElement r = project_cover(GroupElement::trusted(GroupDescriptor::spin(n), x), GroupDescriptor::so(n));
  const double trace = r.orthogonal().trace();
  return {x[0], n % 2 == 0 ? x[top] : 0.0, std::round((n - trace) / 2)};
}

}  // namespace

std::vector<InvolutionClass> involutions_su(int n) {
  if (n < 2) throw ValidationError("involutions_su: n must be >= 2");
  const GroupDescriptor d = GroupDescriptor::su(n);
  std::vector<InvolutionClass> out;
  for (int j = 0; j <= n / 2; ++j) {
    ComplexMatrix m = ComplexMatrix::Identity(n, n);
    for (int i = 0; i < 2 * j; ++i) m(i, i) = -1.0;
    out.push_back({Family::SU, j, GroupElement::from_unitary(d, m), {static_cast<double>(2 * j)}});
  }
  return out;
}

std::vector<InvolutionClass> involutions_sp(int n) {
  if (n < 1) throw ValidationError("involutions_sp: n must be >= 1");
  const GroupDescriptor d = GroupDescriptor::sp(n);
  std::vector<InvolutionClass> out;
  for (int k = 0; k <= n; ++k) {
    ComplexMatrix m = ComplexMatrix::Identity(2 * n, 2 * n);
    for (int i = 0; i < k; ++i) {
      m(i, i) = -1.0;
      m(n + i, n + i) = -1.0;
    }
    out.push_back({Family::Sp, k, GroupElement::from_unitary(d, m), {static_cast<double>(2 * k)}});
  }
  return out;
}

int classify_involution(const GroupElement& g) {
  const GroupDescriptor& d = g.descriptor();
  if ((d.family() != Family::SU && d.family() != Family::Sp) || !d.quotient().empty())
    throw UnsupportedError("classify_involution: SU(n) and Sp(n) only");
  const ComplexMatrix& m = g.unitary();
  if (max_abs(m * m - ComplexMatrix::Identity(m.rows(), m.cols())) > 1e-8)
    throw ValidationError("classify_involution: g^2 is not the identity");
  const int minus = minus_one_multiplicity(m);
  if (minus % 2) throw ValidationError("classify_involution: odd number of -1 eigenvalues");
  return minus / 2;
}

SpinSquareReport enumerate_spin_square_classes(int n) {
  if (n < 3 || n > kMaxCliffordGenerators) throw ValidationError("enumerate_spin_square_classes: n must be in [3, 7]");
  SpinSquareReport rep;
  rep.n = n;
  rep.paper_count = n / 2 + 1;
  const Clifford one = Clifford::scalar(n, 1.0);
  const Clifford minus_one = Clifford::scalar(n, -1.0);

  // Torus elements with g^2 = 1: each plane factor is one of 1, B, -1, -B.
  const int planes = n / 2;
  std::vector<Clifford> involutions;
  int combos = 1;
  for (int p = 0; p < planes; ++p) combos *= 4;
  for (int code = 0; code < combos; ++code) {
    Clifford t = one;
    int c = code;
    for (int p = 0; p < planes; ++p, c /= 4) {
      const Clifford b = Clifford::blade(n, (BladeMask{0b11}) << (2 * p));
      const Clifford factors[4] = {one, b, minus_one, -b};
      t = t * factors[c % 4];
    }
    if ((t * t).max_abs_diff(one) <= 1e-12) involutions.push_back(t);
  }

  // Conjugation by the rotations (1 + e_a e_b)/sqrt(2) generates the lifted signed permutations.
  std::vector<Clifford> movers;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const BladeMask ab = (BladeMask{1} << a) | (BladeMask{1} << b);
      movers.push_back((one + Clifford::blade(n, ab)) * (1.0 / std::sqrt(2.0)));
    }

  std::map<BladeKey, int> class_of;
  for (const Clifford& t : involutions) {
    if (class_of.count(key_of(t))) continue;
    const int index = static_cast<int>(rep.classes.size());
    std::deque<Clifford> frontier{t};
    class_of[key_of(t)] = index;
    int orbit = 1;
    while (!frontier.empty()) {
      const Clifford x = frontier.front();
      frontier.pop_front();
      for (const Clifford& y : movers) {
        const Clifford z = y * x * y.reverse();
        BladeKey k = key_of(z);
        if (class_of.emplace(k, index).second) {
          ++orbit;
          std::vector<double> exact(k.begin(), k.end());
          frontier.emplace_back(n, exact);
        }
      }
    }
    rep.classes.push_back({index, t, spin_signature(t), orbit});
  }
  rep.computed_count = static_cast<int>(rep.classes.size());

  rep.unresolved_pairs = 0;
  for (std::size_t i = 0; i < rep.classes.size(); ++i)
    for (std::size_t j = i + 1; j < rep.classes.size(); ++j)
      if (rep.classes[i].signature == rep.classes[j].signature) ++rep.unresolved_pairs;

  bool candidates_ok = true;
  std::vector<int> hit_classes;
  for (int j = 0; j <= n / 2; ++j) {
    BladeMask mask = 0;
    for (int i = 0; i < 2 * j; ++i) mask |= BladeMask{1} << i;
    const Clifford cand = Clifford::blade(n, mask, j % 2 ? -1.0 : 1.0);
    const Clifford sq = clifford_mul(cand, cand);
    const Clifford sq_ref = clifford_mul_reference(cand, cand);
    int sign = 0;
    if (sq.max_abs_diff(one) <= 1e-12) sign = 1;
    if (sq.max_abs_diff(minus_one) <= 1e-12) sign = -1;
    int cls = -1;
    if (sign == 1) {
      const auto it = class_of.find(key_of(cand));
      if (it != class_of.end()) cls = it->second;
    }
    if (sign != 1) {
      candidates_ok = false;
      rep.notes.push_back("candidate j=" + std::to_string(j) + " squares to " + (sign == -1 ? "-1" : "a non-scalar") +
                          ", so it is not an involution");
    } else {
      for (int h : hit_classes)
        if (h == cls) {
          candidates_ok = false;
          rep.notes.push_back("candidate j=" + std::to_string(j) + " is conjugate to an earlier candidate");
        }
      hit_classes.push_back(cls);
    }
    rep.candidates.push_back({j, cand, sq, sq_ref, sq.max_abs_diff(sq_ref), sign, cls});
  }
  if (rep.computed_count != rep.paper_count)
    rep.notes.push_back("computed " + std::to_string(rep.computed_count) + " classes of g^2 = 1, published list has " +
                        std::to_string(rep.paper_count));
  rep.discrepancy = !candidates_ok || rep.computed_count != rep.paper_count;
  return rep;
}

}  // namespace flatmod
