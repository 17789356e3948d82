#include "flatmod/clifford.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <mutex>

#include "flatmod/errors.hpp"

namespace flatmod {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxCliffordGenerators)
    throw DimensionError("Clifford: generator count must be in [1, 7], got " + std::to_string(n));
}

// Number of transpositions needed to sort e_A e_B into canonical order.
int reorder_swaps(BladeMask a, BladeMask b) {
  int swaps = 0;
  for (int j = 0; j < 32; ++j)
    if (b & (1u << j)) swaps += std::popcount(a >> (j + 1));
  return swaps;
}

using SignTable = std::vector<signed char>;

const SignTable& sign_table(int n) {
  static std::array<SignTable, kMaxCliffordGenerators + 1> tables;
  static std::array<std::once_flag, kMaxCliffordGenerators + 1> flags;
  std::call_once(flags[n], [n] {
    const BladeMask dim = 1u << n;
    SignTable t(static_cast<std::size_t>(dim) * dim);
    for (BladeMask a = 0; a < dim; ++a)
      for (BladeMask b = 0; b < dim; ++b) t[a * dim + b] = (reorder_swaps(a, b) % 2) ? -1 : 1;
    tables[n] = std::move(t);
  });
  return tables[n];
}

}  // namespace

Clifford::Clifford(int n) : n_(n) {
  check_n(n);
  coeffs_.assign(std::size_t{1} << n, 0.0);
}

Clifford::Clifford(int n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  check_n(n);
  if (coeffs_.size() != (std::size_t{1} << n))
    throw DimensionError("Clifford: expected 2^n coefficients");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw ValidationError("Clifford: non-finite coefficient");
}

Clifford Clifford::scalar(int n, double value) {
  Clifford x(n);
  x.coeffs_[0] = value;
  return x;
}

Clifford Clifford::blade(int n, BladeMask mask, double coeff) {
  Clifford x(n);
  if (mask >= x.size()) throw DimensionError("Clifford::blade: mask out of range");
  x.coeffs_[mask] = coeff;
  return x;
}

Clifford Clifford::vector(std::span<const double> v) {
  Clifford x(static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) x.coeffs_[BladeMask{1} << i] = v[i];
  return x;
}

Clifford Clifford::reverse() const {
  Clifford r = *this;
  for (BladeMask m = 0; m < size(); ++m) {
    const int g = std::popcount(m);
    if ((g * (g - 1) / 2) % 2) r.coeffs_[m] = -r.coeffs_[m];
  }
  return r;
}

bool Clifford::is_even(double tol) const {
  for (BladeMask m = 0; m < size(); ++m)
    if ((std::popcount(m) % 2) && std::abs(coeffs_[m]) > tol) return false;
  return true;
}

double Clifford::norm() const {
  double s = 0;
  for (double c : coeffs_) s += c * c;
  return std::sqrt(s);
}

double Clifford::max_abs_diff(const Clifford& other) const {
  if (other.n_ != n_) throw DimensionError("Clifford: mismatched generator count");
  double d = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) d = std::max(d, std::abs(coeffs_[i] - other.coeffs_[i]));
  return d;
}

Clifford Clifford::operator+(const Clifford& other) const {
  if (other.n_ != n_) throw DimensionError("Clifford: mismatched generator count");
  Clifford r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  return r;
}

Clifford Clifford::operator-(const Clifford& other) const { return *this + (-other); }

Clifford Clifford::operator-() const { return *this * -1.0; }

Clifford Clifford::operator*(double s) const {
  Clifford r = *this;
  for (double& c : r.coeffs_) c *= s;
  return r;
}

Clifford Clifford::operator*(const Clifford& other) const { return clifford_mul(*this, other); }

Clifford clifford_mul(const Clifford& x, const Clifford& y) {
  if (x.n() != y.n()) throw DimensionError("clifford_mul: mismatched generator count");
  const int n = x.n();
  const BladeMask dim = 1u << n;
  const SignTable& table = sign_table(n);
  Clifford r(n);
  for (BladeMask a = 0; a < dim; ++a) {
    const double xa = x[a];
    if (xa == 0.0) continue;
    for (BladeMask b = 0; b < dim; ++b) {
      const double yb = y[b];
      if (yb == 0.0) continue;
      r[a ^ b] += table[a * dim + b] * xa * yb;
    }
  }
  return r;
}

Clifford clifford_mul_reference(const Clifford& x, const Clifford& y) {
  if (x.n() != y.n()) throw DimensionError("clifford_mul_reference: mismatched generator count");
  const int n = x.n();
  auto indices = [n](BladeMask m) {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
      if (m & (1u << (i - 1))) out.push_back(i);
    return out;
  };
  Clifford r(n);
  for (BladeMask a = 0; a < x.size(); ++a) {
    for (BladeMask b = 0; b < y.size(); ++b) {
      const double c = x[a] * y[b];
      if (c == 0.0) continue;
      std::vector<int> word = indices(a);
      const std::vector<int> rhs = indices(b);
      word.insert(word.end(), rhs.begin(), rhs.end());
      // Bubble sort; each exchange of distinct generators is one anticommutation.
      double sign = 1.0;
      for (std::size_t pass = 0; pass < word.size(); ++pass)
        for (std::size_t i = 0; i + 1 < word.size(); ++i)
          if (word[i] > word[i + 1]) {
            std::swap(word[i], word[i + 1]);
            sign = -sign;
          }
      BladeMask result = 0;
      for (std::size_t i = 0; i < word.size();) {
        if (i + 1 < word.size() && word[i] == word[i + 1]) {
          i += 2;  // e_i e_i = +1
        } else {
          result |= 1u << (word[i] - 1);
          ++i;
        }
      }
      r[result] += sign * c;
    }
  }
  return r;
}

int blade_sign(int n, BladeMask a, BladeMask b) {
  check_n(n);
  const BladeMask dim = 1u << n;
  if (a >= dim || b >= dim) throw DimensionError("blade_sign: mask out of range");
  return sign_table(n)[a * dim + b];
}

int blade_grade(BladeMask mask) { return std::popcount(mask); }

std::string blade_label(BladeMask mask) {
  std::string s;
  for (int i = 0; i < kMaxCliffordGenerators; ++i)
    if (mask & (1u << i)) s.push_back(static_cast<char>('1' + i));
  return s;
}

BladeMask parse_blade_label(const std::string& label, int n) {
  BladeMask mask = 0;
  int previous = 0;
  for (char ch : label) {
    const int i = ch - '0';
    if (i < 1 || i > n || i <= previous)
      throw ValidationError("blade label '" + label + "' must list increasing generator indices in [1, n]");
    mask |= 1u << (i - 1);
    previous = i;
  }
  return mask;
}

}  // namespace flatmod
