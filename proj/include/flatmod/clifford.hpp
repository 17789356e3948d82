#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace flatmod {

/// Bitmask of a basis blade: bit (i-1) set means e_i is a factor.
using BladeMask = std::uint32_t;

inline constexpr int kMaxCliffordGenerators = 7;

/// Element of the real Clifford algebra Cl(n, 0), i.e. e_i^2 = +1 and
/// e_i e_j = -e_j e_i for i != j.
///
/// Coefficients are stored in 2^n slots indexed by BladeMask, so slot 0 is
/// the scalar, slot 0b11 is e_1 e_2, and so on.
class Clifford {
 public:
  explicit Clifford(int n);
  Clifford(int n, std::vector<double> coeffs);

  static Clifford scalar(int n, double value);
  static Clifford blade(int n, BladeMask mask, double coeff = 1.0);
  /// Grade-1 element sum_i v[i] e_{i+1}.
  static Clifford vector(std::span<const double> v);

  int n() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  double operator[](BladeMask mask) const { return coeffs_[mask]; }
  double& operator[](BladeMask mask) { return coeffs_[mask]; }
  std::span<const double> coeffs() const { return coeffs_; }

  /// Reversion: e_{i1}...e_{ik} -> e_{ik}...e_{i1}.
  Clifford reverse() const;
  bool is_even(double tol) const;
  /// Euclidean norm of the coefficient vector.
  double norm() const;
  double max_abs_diff(const Clifford& other) const;

  Clifford operator+(const Clifford& other) const;
  Clifford operator-(const Clifford& other) const;
  Clifford operator-() const;
  Clifford operator*(double s) const;
  Clifford operator*(const Clifford& other) const;

 private:
  int n_;
  std::vector<double> coeffs_;
};

inline Clifford operator*(double s, const Clifford& x) { return x * s; }

/// Product through the precomputed blade sign table. Throws DimensionError on mismatched n.
Clifford clifford_mul(const Clifford& x, const Clifford& y);

/// Product by explicit word reduction: each blade pair is concatenated as an index
/// sequence, sorted with one sign flip per transposition, and equal neighbours cancelled.
/// Shares no code with the blade table; used as a cross-check.
Clifford clifford_mul_reference(const Clifford& x, const Clifford& y);

/// Sign of e_A e_B = sign * e_{A xor B} from the blade table.
int blade_sign(int n, BladeMask a, BladeMask b);
int blade_grade(BladeMask mask);

/// "" for the scalar blade, "134" for e_1 e_3 e_4.
std::string blade_label(BladeMask mask);
BladeMask parse_blade_label(const std::string& label, int n);

}  // namespace flatmod
