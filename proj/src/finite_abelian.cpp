#include "flatmod/finite_abelian.hpp"

#include <numeric>

#include "flatmod/errors.hpp"

namespace flatmod {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (int d : orders_)
    if (d < 1) throw ValidationError("FiniteAbelianGroup: cyclic orders must be positive");
}

long FiniteAbelianGroup::size() const {
  long s = 1;
  for (int d : orders_) s *= d;
  return s;
}

bool FiniteAbelianGroup::contains(const Residues& r) const {
  if (r.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] < 0 || r[i] >= orders_[i]) return false;
  return true;
}

void FiniteAbelianGroup::require(const Residues& r) const {
  if (!contains(r)) throw DimensionError("residue vector does not belong to " + to_string());
}

Residues FiniteAbelianGroup::add(const Residues& a, const Residues& b) const {
  require(a);
  require(b);
  Residues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

Residues FiniteAbelianGroup::neg(const Residues& a) const {
  require(a);
  Residues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (orders_[i] - a[i]) % orders_[i];
  return r;
}

Residues FiniteAbelianGroup::scale(const Residues& a, long k) const {
  require(a);
  Residues r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long d = orders_[i];
    r[i] = static_cast<int>(((a[i] * (k % d)) % d + d) % d);
  }
  return r;
}

long FiniteAbelianGroup::order_of(const Residues& a) const {
  require(a);
  long m = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long d = orders_[i];
    const long oi = d / std::gcd(d, static_cast<long>(a[i]));
    m = std::lcm(m, oi);
  }
  return m;
}

std::vector<Residues> FiniteAbelianGroup::elements() const {
  std::vector<Residues> out;
  out.reserve(static_cast<std::size_t>(size()));
  Residues r = identity();
  while (true) {
    out.push_back(r);
    std::size_t i = r.size();
    while (i > 0) {
      --i;
      if (++r[i] < orders_[i]) break;
      r[i] = 0;
      if (i == 0) return out;
    }
    if (r.empty()) return out;
  }
}

std::string FiniteAbelianGroup::to_string() const {
  std::string s;
  for (int d : orders_) {
    if (d == 1) continue;
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(d);
  }
  return s.empty() ? "1" : s;
}

Residues SquaresQuotient::project(const Residues& r) const {
  if (!source.contains(r)) throw DimensionError("project: residue vector not in " + source.to_string());
  Residues out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i] % quotient.cyclic_orders()[i];
  return out;
}

SquaresQuotient fa_quotient_by_squares(const FiniteAbelianGroup& group) {
  std::vector<int> orders;
  for (int d : group.cyclic_orders()) orders.push_back(std::gcd(2, d));
  return SquaresQuotient{group, FiniteAbelianGroup(std::move(orders))};
}

}  // namespace flatmod
