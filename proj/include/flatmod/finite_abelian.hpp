#pragma once

#include <string>
#include <vector>

namespace flatmod {

/// Residue vector (r_1, ..., r_m) with 0 <= r_i < d_i.
using Residues = std::vector<int>;

/// Z/d_1 x ... x Z/d_m with componentwise arithmetic. The empty product is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  static FiniteAbelianGroup trivial() { return FiniteAbelianGroup{}; }
  static FiniteAbelianGroup cyclic(int d) { return FiniteAbelianGroup({d}); }

  const std::vector<int>& cyclic_orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  long size() const;

  Residues identity() const { return Residues(orders_.size(), 0); }
  bool contains(const Residues& r) const;
  Residues add(const Residues& a, const Residues& b) const;
  Residues neg(const Residues& a) const;
  Residues scale(const Residues& a, long k) const;
  /// Smallest m >= 1 with m*a = 0.
  long order_of(const Residues& a) const;
  /// Every element, in lexicographic residue order.
  std::vector<Residues> elements() const;

  /// "Z/2 x Z/4"; "1" for the trivial group.
  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  void require(const Residues& r) const;
  std::vector<int> orders_;
};

/// K -> K/2K where 2K = {k + k}. Componentwise Z/d -> Z/gcd(2, d).
struct SquaresQuotient {
  FiniteAbelianGroup source;
  FiniteAbelianGroup quotient;
  Residues project(const Residues& r) const;
};

SquaresQuotient fa_quotient_by_squares(const FiniteAbelianGroup& group);

}  // namespace flatmod
