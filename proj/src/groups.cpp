#include "flatmod/groups.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#include <Eigen/Eigenvalues>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

constexpr double kPi = std::numbers::pi;

// J = [[0, I], [-I, 0]] for the quaternionic structure on C^{2n}.
ComplexMatrix symplectic_j(int n) {
  ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = ComplexMatrix::Identity(n, n);
  j.bottomLeftCorner(n, n) = -ComplexMatrix::Identity(n, n);
  return j;
}

// Partner vector -J conj(v); eigenvalue conj(lambda) when v has eigenvalue lambda.
Eigen::VectorXcd quaternionic_partner(const Eigen::VectorXcd& v) {
  const auto n = v.size() / 2;
  Eigen::VectorXcd w(v.size());
  w.head(n) = -v.tail(n).conjugate();
  w.tail(n) = v.head(n).conjugate();
  return w;
}

BladeMask full_blade(int n) { return (BladeMask{1} << n) - 1; }

Clifford spin_center_payload(int n, const Residues& r) {
  const Clifford minus_one = Clifford::scalar(n, -1.0);
  const Clifford omega = Clifford::blade(n, full_blade(n));
  Clifford x = Clifford::scalar(n, 1.0);
  if (n % 2 == 1) {
    if (r[0]) x = minus_one;
  } else if (n % 4 == 2) {
    for (int i = 0; i < r[0]; ++i) x = x * omega;
  } else {
    if (r[0]) x = x * minus_one;
    if (r[1]) x = x * omega;
  }
  return x;
}

Residues spin_minus_one_coords(int n) {
  if (n % 2 == 1) return {1};
  if (n % 4 == 2) return {2};
  return {1, 0};
}

void check_same(const GroupDescriptor& a, const GroupDescriptor& b, const char* what) {
  if (!(a == b)) throw DimensionError(std::string(what) + ": descriptor mismatch (" + a.name() + " vs " + b.name() + ")");
}

Clifford vector_blade(const Eigen::VectorXd& v) {
  std::vector<double> c(v.data(), v.data() + v.size());
  return Clifford::vector(c);
}

// Rotation by theta taking f_a towards f_b lifts to cos(theta/2) + sin(theta/2) f_b f_a.
Clifford plane_rotor(const Eigen::VectorXd& fa, const Eigen::VectorXd& fb, double theta) {
  const int n = static_cast<int>(fa.size());
  return Clifford::scalar(n, std::cos(theta / 2)) + std::sin(theta / 2) * (vector_blade(fb) * vector_blade(fa));
}

RealMatrix rotation_block(double theta) {
  RealMatrix b(2, 2);
  b << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return b;
}

struct OrthogonalFrame {
  RealMatrix z;                // columns: plane pairs first, then the fixed vector (odd n)
  std::vector<double> angles;  // one per plane
};

// Z with det 1 such that Z^T R Z = blockdiag(rot(angles[0]), ..., [1]).
OrthogonalFrame orthogonal_frame(const RealMatrix& r) {
  const auto n = r.rows();
  Eigen::RealSchur<RealMatrix> schur(r);
  const RealMatrix& t = schur.matrixT();
  const RealMatrix& u = schur.matrixU();

  std::vector<std::pair<Eigen::Index, Eigen::Index>> planes;
  std::vector<double> angles;
  std::vector<Eigen::Index> plus, minus;
  for (Eigen::Index i = 0; i < n;) {
    if (i + 1 < n && std::abs(t(i + 1, i)) > 1e-14) {
      planes.emplace_back(i, i + 1);
      angles.push_back(std::atan2(t(i + 1, i), t(i, i)));
      i += 2;
    } else {
      (t(i, i) < 0 ? minus : plus).push_back(i);
      ++i;
    }
  }
  if (minus.size() % 2) throw ValidationError("orthogonal matrix has determinant -1");
  for (std::size_t k = 0; k < minus.size(); k += 2) {
    planes.emplace_back(minus[k], minus[k + 1]);
    angles.push_back(kPi);
  }
  std::size_t next_plus = 0;
  while (static_cast<Eigen::Index>(planes.size()) < n / 2) {
    planes.emplace_back(plus[next_plus], plus[next_plus + 1]);
    angles.push_back(0.0);
    next_plus += 2;
  }

  OrthogonalFrame f;
  f.z.resize(n, n);
  Eigen::Index col = 0;
  for (const auto& [a, b] : planes) {
    f.z.col(col++) = u.col(a);
    f.z.col(col++) = u.col(b);
  }
  for (; next_plus < plus.size(); ++next_plus) f.z.col(col++) = u.col(plus[next_plus]);
  if (f.z.determinant() < 0) {
    f.z.col(n - 1) *= -1.0;
    if (n % 2 == 0) angles.back() = -angles.back();
  }
  for (double& a : angles)
    if (a <= -kPi + 1e-12) a = kPi;
  f.angles = std::move(angles);
  return f;
}

struct QuaternionicFrame {
  ComplexMatrix g;             // in Sp(n)
  std::vector<double> angles;  // n angles in [0, pi]
};

// g in Sp(n) with g^* c g = diag(exp(i angles), exp(-i angles)).
QuaternionicFrame quaternionic_frame(const ComplexMatrix& c) {
  const int dim = static_cast<int>(c.rows());
  const int n = dim / 2;
  const UnitaryEig eig = unitary_eig(c);
  constexpr double kEdge = 1e-7;

  std::vector<Eigen::VectorXcd> chosen;
  std::vector<double> chosen_angles;
  auto orthogonalize = [&](Eigen::VectorXcd w) {
    for (const auto& v : chosen) {
      w -= v * v.dot(w);
      const Eigen::VectorXcd p = quaternionic_partner(v);
      w -= p * p.dot(w);
    }
    return w;
  };

  int start = 0;
  while (start < dim) {
    int stop = start + 1;
    while (stop < dim && eig.angles[stop - 1] - eig.angles[stop] <= kClusterTol) ++stop;
    double mean = 0;
    for (int k = start; k < stop; ++k) mean += eig.angles[k];
    mean /= (stop - start);
    const bool at_zero = std::abs(mean) < kEdge;
    const bool at_pi = std::abs(mean - kPi) < kEdge || std::abs(mean + kPi) < kEdge;
    if (at_zero || at_pi) {
      const int needed = (stop - start) / 2;
      int taken = 0;
      for (int k = start; k < stop && taken < needed; ++k) {
        Eigen::VectorXcd w = orthogonalize(eig.vectors.col(k));
        if (w.norm() > 0.5) {
          w.normalize();
          chosen.push_back(w);
          chosen_angles.push_back(at_zero ? 0.0 : kPi);
          ++taken;
        }
      }
      if (taken != needed) throw ValidationError("quaternionic frame: eigenspace is not quaternionic");
    } else if (mean > 0) {
      for (int k = start; k < stop; ++k) {
        Eigen::VectorXcd w = orthogonalize(eig.vectors.col(k));
        chosen.push_back(w.normalized());
        chosen_angles.push_back(eig.angles[k]);
      }
    }
    start = stop;
  }
  if (static_cast<int>(chosen.size()) != n) throw ValidationError("quaternionic frame: input is not in Sp(n)");

  QuaternionicFrame f;
  f.g.resize(dim, dim);
  for (int j = 0; j < n; ++j) {
    f.g.col(j) = chosen[j];
    f.g.col(n + j) = quaternionic_partner(chosen[j]);
  }
  f.angles = std::move(chosen_angles);
  return f;
}

ComplexMatrix sp_torus(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  std::vector<double> both(2 * n);
  for (int j = 0; j < n; ++j) {
    both[j] = angles[j];
    both[n + j] = -angles[j];
  }
  return phase_diagonal(both);
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors

std::string family_name(Family f) {
  switch (f) {
    case Family::SU: return "SU";
    case Family::SO: return "SO";
    case Family::Spin: return "Spin";
    case Family::Sp: return "Sp";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "SU") return Family::SU;
  if (name == "SO") return Family::SO;
  if (name == "Spin") return Family::Spin;
  if (name == "Sp") return Family::Sp;
  throw ValidationError("unknown group family '" + name + "'");
}

GroupDescriptor::GroupDescriptor(Family family, int n, std::vector<Residues> quotient_generators)
    : family_(family), n_(n) {
  switch (family) {
    case Family::SU:
      if (n < 2) throw ValidationError("SU(n) requires n >= 2");
      break;
    case Family::SO:
    case Family::Spin:
      if (n < 3 || n > kMaxCliffordGenerators) throw ValidationError("SO(n)/Spin(n) require 3 <= n <= 7");
      break;
    case Family::Sp:
      if (n < 1) throw ValidationError("Sp(n) requires n >= 1");
      break;
  }
  const FiniteAbelianGroup center = cover_center_group();
  if (family == Family::SO) {
    if (!quotient_generators.empty()) throw ValidationError("SO(n) takes no explicit quotient");
    quotient_generators = {spin_minus_one_coords(n)};
  }
  std::set<Residues> closure{center.identity()};
  for (const auto& g : quotient_generators)
    if (!center.contains(g)) throw ValidationError("quotient generator is not an element of the center " + center.to_string());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Residues> current(closure.begin(), closure.end());
    for (const auto& a : current)
      for (const auto& g : quotient_generators)
        if (closure.insert(center.add(a, g)).second) grew = true;
  }
  quotient_ = closure.size() > 1 ? std::vector<Residues>(closure.begin(), closure.end()) : std::vector<Residues>{};
}

GroupDescriptor GroupDescriptor::adjoint(Family family, int n) {
  if (family == Family::SO) throw ValidationError("adjoint: use Spin as the family");
  GroupDescriptor cover(family, n);
  const FiniteAbelianGroup z = cover.cover_center_group();
  std::vector<Residues> gens;
  for (std::size_t i = 0; i < z.rank(); ++i) {
    Residues r = z.identity();
    r[i] = 1;
    gens.push_back(r);
  }
  return GroupDescriptor(family, n, gens);
}

GroupDescriptor GroupDescriptor::cover() const {
  return GroupDescriptor(family_ == Family::SO ? Family::Spin : family_, n_);
}

int GroupDescriptor::matrix_dim() const {
  switch (family_) {
    case Family::SU:
    case Family::SO: return n_;
    case Family::Sp: return 2 * n_;
    case Family::Spin: return 0;
  }
  return 0;
}

FiniteAbelianGroup GroupDescriptor::cover_center_group() const {
  switch (family_) {
    case Family::SU: return FiniteAbelianGroup::cyclic(n_);
    case Family::Sp: return FiniteAbelianGroup::cyclic(2);
    case Family::SO:
    case Family::Spin:
      if (n_ % 2 == 1) return FiniteAbelianGroup::cyclic(2);
      if (n_ % 4 == 2) return FiniteAbelianGroup::cyclic(4);
      return FiniteAbelianGroup({2, 2});
  }
  return {};
}

std::string GroupDescriptor::name() const {
  std::string s = family_name(family_) + "(" + std::to_string(n_) + ")";
  if (family_ == Family::SO || quotient_.empty()) return s;
  if (static_cast<long>(quotient_.size()) == cover_center_group().size()) return "P" + s;
  s += "/{";
  for (std::size_t i = 0; i < quotient_.size(); ++i) {
    if (i) s += ",";
    for (std::size_t j = 0; j < quotient_[i].size(); ++j) s += (j ? ":" : "") + std::to_string(quotient_[i][j]);
  }
  return s + "}";
}

// ---------------------------------------------------------------------------
// Elements

GroupElement GroupElement::identity(const GroupDescriptor& d) {
  switch (d.family()) {
    case Family::SU:
    case Family::Sp: return GroupElement(d, ComplexMatrix(ComplexMatrix::Identity(d.matrix_dim(), d.matrix_dim())));
    case Family::SO: return GroupElement(d, RealMatrix(RealMatrix::Identity(d.n(), d.n())));
    case Family::Spin: return GroupElement(d, Clifford::scalar(d.n(), 1.0));
  }
  throw UnsupportedError("identity: unknown family");
}

GroupElement GroupElement::from_unitary(const GroupDescriptor& d, ComplexMatrix m, double tol) {
  if (d.family() != Family::SU && d.family() != Family::Sp)
    throw ValidationError("from_unitary: " + d.name() + " does not use a unitary payload");
  const int dim = d.matrix_dim();
  if (m.rows() != dim || m.cols() != dim) throw DimensionError("from_unitary: expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
  if (!is_unitary(m, tol)) throw ValidationError("from_unitary: matrix is not unitary within tolerance");
  if (std::abs(m.determinant() - Complex(1.0, 0.0)) > tol) throw ValidationError("from_unitary: determinant is not 1");
  if (d.family() == Family::Sp) {
    const ComplexMatrix j = symplectic_j(d.n());
    if (max_abs(j * m.conjugate() * j.inverse() - m) > tol)
      throw ValidationError("from_unitary: matrix is not quaternionic (J conj(m) J^-1 != m)");
  }
  return GroupElement(d, std::move(m));
}

GroupElement GroupElement::from_orthogonal(const GroupDescriptor& d, RealMatrix m, double tol) {
  if (d.family() != Family::SO) throw ValidationError("from_orthogonal: " + d.name() + " does not use an orthogonal payload");
  if (m.rows() != d.n() || m.cols() != d.n()) throw DimensionError("from_orthogonal: wrong matrix size");
  if (!m.allFinite()) throw ValidationError("from_orthogonal: non-finite entry");
  if ((m.transpose() * m - RealMatrix::Identity(d.n(), d.n())).cwiseAbs().maxCoeff() > tol)
    throw ValidationError("from_orthogonal: matrix is not orthogonal within tolerance");
  if (std::abs(m.determinant() - 1.0) > tol) throw ValidationError("from_orthogonal: determinant is not 1");
  return GroupElement(d, std::move(m));
}

GroupElement GroupElement::from_spinor(const GroupDescriptor& d, Clifford x, double tol) {
  if (d.family() != Family::Spin) throw ValidationError("from_spinor: " + d.name() + " does not use a Clifford payload");
  if (x.n() != d.n()) throw DimensionError("from_spinor: Clifford generator count does not match n");
  if (!x.is_even(tol)) throw ValidationError("from_spinor: element has odd-grade components");
  if ((x * x.reverse()).max_abs_diff(Clifford::scalar(d.n(), 1.0)) > tol)
    throw ValidationError("from_spinor: x * reverse(x) != 1");
  return GroupElement(d, std::move(x));
}

GroupElement GroupElement::trusted(const GroupDescriptor& d, Payload p) { return GroupElement(d, std::move(p)); }

const ComplexMatrix& GroupElement::unitary() const {
  if (!is_unitary_payload()) throw UnsupportedError(desc_.name() + " element has no unitary payload");
  return std::get<ComplexMatrix>(payload_);
}

const RealMatrix& GroupElement::orthogonal() const {
  if (!is_orthogonal_payload()) throw UnsupportedError(desc_.name() + " element has no orthogonal payload");
  return std::get<RealMatrix>(payload_);
}

const Clifford& GroupElement::spinor() const {
  if (!is_spinor_payload()) throw UnsupportedError(desc_.name() + " element has no Clifford payload");
  return std::get<Clifford>(payload_);
}

ComplexMatrix GroupElement::as_complex() const {
  if (is_unitary_payload()) return unitary();
  if (is_orthogonal_payload()) return orthogonal().cast<Complex>();
  throw UnsupportedError("as_complex: Spin elements have no matrix payload");
}

std::vector<double> GroupElement::flatten() const {
  if (is_spinor_payload()) {
    const auto c = spinor().coeffs();
    return {c.begin(), c.end()};
  }
  const ComplexMatrix m = as_complex();
  std::vector<double> out;
  out.reserve(2 * m.size());
  for (Eigen::Index k = 0; k < m.size(); ++k) out.push_back(m.data()[k].real());
  for (Eigen::Index k = 0; k < m.size(); ++k) out.push_back(m.data()[k].imag());
  return out;
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  check_same(a.descriptor(), b.descriptor(), "mul");
  return std::visit(
      [&](const auto& pa) -> GroupElement {
        using T = std::decay_t<decltype(pa)>;
        const T& pb = std::get<T>(b.payload());
        if constexpr (std::is_same_v<T, Clifford>) {
          return GroupElement::trusted(a.descriptor(), pa * pb);
        } else {
          return GroupElement::trusted(a.descriptor(), T(pa * pb));
        }
      },
      a.payload());
}

GroupElement inv(const GroupElement& a) {
  return std::visit(
      [&](const auto& p) -> GroupElement {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Clifford>) {
          return GroupElement::trusted(a.descriptor(), p.reverse());
        } else if constexpr (std::is_same_v<T, RealMatrix>) {
          return GroupElement::trusted(a.descriptor(), RealMatrix(p.transpose()));
        } else {
          return GroupElement::trusted(a.descriptor(), ComplexMatrix(p.adjoint()));
        }
      },
      a.payload());
}

double payload_distance(const GroupElement& a, const GroupElement& b) {
  if (a.is_spinor_payload() && b.is_spinor_payload()) return (a.spinor() - b.spinor()).norm();
  if (a.is_spinor_payload() || b.is_spinor_payload()) throw DimensionError("payload_distance: mixed payload kinds");
  const ComplexMatrix ma = a.as_complex();
  const ComplexMatrix mb = b.as_complex();
  if (ma.rows() != mb.rows()) throw DimensionError("payload_distance: size mismatch");
  return (ma - mb).norm();
}

GroupElement apply_center(const CenterElement& z, const GroupElement& x) {
  const GroupElement zz = z.element.with_descriptor(x.descriptor());
  return mul(zz, x);
}

double distance(const GroupElement& a, const GroupElement& b) {
  check_same(a.descriptor(), b.descriptor(), "distance");
  const GroupDescriptor& d = a.descriptor();
  if (d.family() == Family::SO || d.quotient().empty()) return payload_distance(a, b);
  const CenterData center = enumerate_center(d.cover());
  double best = std::numeric_limits<double>::infinity();
  for (const auto& z : center.elements)
    if (std::find(d.quotient().begin(), d.quotient().end(), z.coords) != d.quotient().end())
      best = std::min(best, payload_distance(apply_center(z, a), b));
  return best;
}

GroupElement canonical(const GroupElement& g) {
  const GroupDescriptor& d = g.descriptor();
  if (d.family() == Family::SO || d.quotient().empty()) return g;
  const CenterData center = enumerate_center(d.cover());
  auto key = [](const GroupElement& x) {
    std::vector<long long> k;
    for (double v : x.flatten()) k.push_back(std::llround(v / 1e-8));
    return k;
  };
  std::optional<GroupElement> best;
  std::vector<long long> best_key;
  for (const auto& z : center.elements) {
    if (std::find(d.quotient().begin(), d.quotient().end(), z.coords) == d.quotient().end()) continue;
    GroupElement cand = apply_center(z, g);
    auto k = key(cand);
    if (!best || k < best_key) {
      best = cand;
      best_key = std::move(k);
    }
  }
  return *best;
}

// ---------------------------------------------------------------------------
// Centers and kernels

CenterData enumerate_center(const GroupDescriptor& d) {
  if (!d.simply_connected()) throw UnsupportedError("enumerate_center: " + d.name() + " is not simply connected");
  CenterData out;
  out.group = d.cover_center_group();
  for (const Residues& r : out.group.elements()) {
    switch (d.family()) {
      case Family::SU: {
        const Complex zeta = std::polar(1.0, 2.0 * kPi * r[0] / d.n());
        const ComplexMatrix m = zeta * ComplexMatrix::Identity(d.n(), d.n());
        out.elements.push_back({GroupElement::trusted(d, m), r});
        break;
      }
      case Family::Sp: {
        const double s = r[0] ? -1.0 : 1.0;
        const ComplexMatrix m = s * ComplexMatrix::Identity(2 * d.n(), 2 * d.n());
        out.elements.push_back({GroupElement::trusted(d, m), r});
        break;
      }
      case Family::Spin:
        out.elements.push_back({GroupElement::trusted(d, spin_center_payload(d.n(), r)), r});
        break;
      case Family::SO: break;
    }
  }
  return out;
}

KernelData covering_kernel(const GroupDescriptor& d) {
  const GroupDescriptor cov = d.cover();
  const CenterData center = enumerate_center(cov);
  auto element_of = [&](const Residues& r) -> const CenterElement& {
    for (const auto& z : center.elements)
      if (z.coords == r) return z;
    throw ValidationError("covering_kernel: residue not in center");
  };

  KernelData k;
  const std::vector<Residues>& sub = d.quotient();
  if (sub.size() <= 1) {
    k.group = FiniteAbelianGroup::trivial();
    k.coords = {Residues{}};
    k.elements = {element_of(center.group.identity())};
    return k;
  }
  const long order = static_cast<long>(sub.size());
  for (const auto& h : sub) {
    if (center.group.order_of(h) != order) continue;
    k.group = FiniteAbelianGroup::cyclic(static_cast<int>(order));
    for (long j = 0; j < order; ++j) {
      k.coords.push_back({static_cast<int>(j)});
      k.elements.push_back(element_of(center.group.scale(h, j)));
    }
    return k;
  }
  if (order == center.group.size()) {
    k.group = center.group;
    for (const auto& z : center.elements) {
      k.coords.push_back(z.coords);
      k.elements.push_back(z);
    }
    return k;
  }
  throw UnsupportedError("covering_kernel: non-cyclic proper kernel subgroup");
}

// ---------------------------------------------------------------------------
// Square roots and torus conjugation

GroupElement square_root(const GroupElement& g) {
  const GroupDescriptor& d = g.descriptor();
  switch (d.family()) {
    case Family::SU: {
      const UnitaryEig eig = unitary_eig(g.unitary());
      std::vector<double> half(eig.angles.size());
      Complex det(1.0, 0.0);
      for (std::size_t i = 0; i < half.size(); ++i) {
        half[i] = eig.angles[i] / 2;
        det *= std::polar(1.0, half[i]);
      }
      // The halved angles give det = +-1; flip the last eigenvalue when it is -1.
      if (det.real() < 0) half.back() += kPi;
      return GroupElement::trusted(d, ComplexMatrix(eig.vectors * phase_diagonal(half) * eig.vectors.adjoint()));
    }
    case Family::Sp: {
      const QuaternionicFrame f = quaternionic_frame(g.unitary());
      std::vector<double> half(f.angles);
      for (double& a : half) a /= 2;
      return GroupElement::trusted(d, ComplexMatrix(f.g * sp_torus(half) * f.g.adjoint()));
    }
    case Family::SO: {
      const OrthogonalFrame f = orthogonal_frame(g.orthogonal());
      RealMatrix s = RealMatrix::Identity(d.n(), d.n());
      for (std::size_t p = 0; p < f.angles.size(); ++p) s.block(2 * p, 2 * p, 2, 2) = rotation_block(f.angles[p] / 2);
      return GroupElement::trusted(d, RealMatrix(f.z * s * f.z.transpose()));
    }
    case Family::Spin:
      throw UnsupportedError("square_root: Spin payloads go through spin_square_root");
  }
  throw UnsupportedError("square_root: unknown family");
}

GroupElement spin_square_root(const GroupElement& x) {
  const GroupDescriptor& d = x.descriptor();
  if (d.family() != Family::Spin) throw UnsupportedError("spin_square_root: not a Spin element");
  const int n = d.n();
  const GroupElement r = project_cover(x.with_descriptor(d.cover()), GroupDescriptor::so(n));
  const OrthogonalFrame f = orthogonal_frame(r.orthogonal());
  std::vector<double> angles = f.angles;

  auto rotor = [&](double scale) {
    Clifford y = Clifford::scalar(n, 1.0);
    for (std::size_t p = 0; p < angles.size(); ++p)
      y = y * plane_rotor(f.z.col(2 * p), f.z.col(2 * p + 1), angles[p] * scale);
    return y;
  };
  // rotor(1) is +-x; a full extra turn in the first plane flips the sign.
  if ((rotor(1.0) - x.spinor()).norm() > (rotor(1.0) + x.spinor()).norm()) angles[0] += 2 * kPi;
  return GroupElement::trusted(d, rotor(0.5));
}

GroupElement any_square_root(const GroupElement& g) {
  return g.descriptor().family() == Family::Spin ? spin_square_root(g) : square_root(g);
}

GroupElement central_square_root_in_torus(const CenterElement& k) {
  const GroupDescriptor& d = k.element.descriptor();
  if (d.family() != Family::SU || k.coords.size() != 1)
    throw UnsupportedError("central_square_root_in_torus: SU(n) center elements only");
  const int n = d.n();
  const int m = k.coords[0];
  std::vector<double> theta(n, kPi * m / n);
  theta[0] += kPi * (m % 2);
  return GroupElement::trusted(d, phase_diagonal(theta));
}

TorusConjugation conjugate_to_torus(const GroupElement& c) {
  const GroupDescriptor& d = c.descriptor();
  switch (d.family()) {
    case Family::SU: {
      UnitaryEig eig = unitary_eig(c.unitary());
      const Complex det = eig.vectors.determinant();
      eig.vectors.col(0) *= std::conj(det) / std::abs(det);
      return {GroupElement::trusted(d, eig.vectors), eig.angles};
    }
    case Family::Sp: {
      QuaternionicFrame f = quaternionic_frame(c.unitary());
      return {GroupElement::trusted(d, std::move(f.g)), std::move(f.angles)};
    }
    case Family::SO: {
      OrthogonalFrame f = orthogonal_frame(c.orthogonal());
      return {GroupElement::trusted(d, std::move(f.z)), std::move(f.angles)};
    }
    case Family::Spin: break;
  }
  throw UnsupportedError("conjugate_to_torus: matrix payloads only");
}

// ---------------------------------------------------------------------------
// Spin <-> SO

GroupElement lift_so_to_spin(const GroupElement& r) {
  const GroupDescriptor& d = r.descriptor();
  if (d.family() != Family::SO) throw ValidationError("lift_so_to_spin: expected an SO(n) element");
  const RealMatrix& m = r.orthogonal();
  const int n = d.n();
  if ((m.transpose() * m - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() > kMatrixTol)
    throw ValidationError("lift_so_to_spin: matrix is not orthogonal");

  RealMatrix a = m;
  Clifford x = Clifford::scalar(n, 1.0);
  // Row rotation G = [[c, s], [-s, c]] on rows (j, i); G^T rotates e_j towards e_i by phi.
  auto apply = [&](int j, int i, double c, double s) {
    const Eigen::RowVectorXd rj = a.row(j);
    const Eigen::RowVectorXd ri = a.row(i);
    a.row(j) = c * rj + s * ri;
    a.row(i) = -s * rj + c * ri;
    const double phi = std::atan2(s, c);
    const BladeMask ji = (BladeMask{1} << j) | (BladeMask{1} << i);
    // cos(phi/2) + sin(phi/2) e_i e_j, with e_i e_j = -e_j e_i for j < i.
    x = x * (Clifford::scalar(n, std::cos(phi / 2)) - Clifford::blade(n, ji, std::sin(phi / 2)));
  };
  for (int j = 0; j + 1 < n; ++j) {
    for (int i = j + 1; i < n; ++i) {
      const double aj = a(j, j), ai = a(i, j);
      if (ai == 0.0) continue;
      const double h = std::hypot(aj, ai);
      apply(j, i, aj / h, ai / h);
    }
    if (a(j, j) < 0) apply(j, j + 1, -1.0, 0.0);
  }
  if (a(n - 1, n - 1) < 0) throw ValidationError("lift_so_to_spin: determinant is -1");
  return GroupElement::trusted(d.cover(), x);
}

GroupElement project_cover(const GroupElement& x, const GroupDescriptor& target) {
  if (x.descriptor() == target) return x;
  if (!(target.cover() == x.descriptor()))
    throw DimensionError("project_cover: " + x.descriptor().name() + " is not the cover of " + target.name());
  if (target.family() == Family::SO) {
    const int n = target.n();
    const Clifford& s = x.spinor();
    const Clifford rev = s.reverse();
    RealMatrix m(n, n);
    for (int j = 0; j < n; ++j) {
      const Clifford image = s * Clifford::blade(n, BladeMask{1} << j) * rev;
      for (int i = 0; i < n; ++i) m(i, j) = image[BladeMask{1} << i];
    }
    return GroupElement::trusted(target, std::move(m));
  }
  return canonical(x.with_descriptor(target));
}

GroupElement su2_to_spin3(const GroupElement& u) {
  if (!(u.descriptor() == GroupDescriptor::su(2))) throw ValidationError("su2_to_spin3: expected an SU(2) element");
  const ComplexMatrix& m = u.unitary();
  // m = a0 I + sum_k a_k (-i sigma_k); a_k = Re tr(m i sigma_k) / 2.
  const Complex i(0.0, 1.0);
  ComplexMatrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -i, i, 0;
  s3 << 1, 0, 0, -1;
  const double a0 = m.trace().real() / 2;
  const double a1 = (m * i * s1).trace().real() / 2;
  const double a2 = (m * i * s2).trace().real() / 2;
  const double a3 = (m * i * s3).trace().real() / 2;
  Clifford x = Clifford::scalar(3, a0);
  x[0b110] = -a1;  // e2 e3
  x[0b101] = a2;   // e3 e1 = -e1 e3
  x[0b011] = -a3;  // e1 e2
  return GroupElement::trusted(GroupDescriptor::spin(3), x);
}

GroupElement random_element(const GroupDescriptor& d, std::mt19937_64& rng) {
  const GroupDescriptor cov = d.family() == Family::SO ? d : d.cover();
  std::optional<GroupElement> x;
  switch (d.family()) {
    case Family::SU:
      x = GroupElement::trusted(cov, random_special_unitary(d.n(), rng));
      break;
    case Family::Sp: {
      // Polar factor of a quaternionic Ginibre matrix is Haar on Sp(n).
      const int n = d.n();
      std::normal_distribution<double> normal(0.0, 1.0);
      ComplexMatrix a(n, n), b(n, n);
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          const double ar = normal(rng), ai = normal(rng), br = normal(rng), bi = normal(rng);
          a(i, j) = Complex(ar, ai);
          b(i, j) = Complex(br, bi);
        }
      ComplexMatrix m(2 * n, 2 * n);
      m << a, b, -b.conjugate(), a.conjugate();
      Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
      x = GroupElement::trusted(cov, ComplexMatrix(svd.matrixU() * svd.matrixV().adjoint()));
      break;
    }
    case Family::SO:
      x = GroupElement::trusted(d, random_special_orthogonal(d.n(), rng));
      break;
    case Family::Spin: {
      const GroupElement r = GroupElement::trusted(GroupDescriptor::so(d.n()), random_special_orthogonal(d.n(), rng));
      GroupElement lifted = lift_so_to_spin(r);
      if (std::uniform_int_distribution<int>(0, 1)(rng)) lifted = GroupElement::trusted(cov, -lifted.spinor());
      x = lifted;
      break;
    }
  }
  if (d.family() == Family::SO || d.quotient().empty()) return *x;
  return canonical(x->with_descriptor(d));
}

}  // namespace flatmod
