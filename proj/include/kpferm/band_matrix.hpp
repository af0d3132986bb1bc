#pragma once

#include "kpferm/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace kpferm {

/// Banded infinite matrix with entries a_{ij}, i, j in Z, a_{ij} = 0 for |i - j| > band.
///
/// A finite matrix stores its support. A periodic matrix (a_{i+p,j+p} = a_{ij})
/// stores one period of generators: the entries whose row lies in [0, p).
class BandMatrix {
 public:
  using Key = std::pair<int, int>;

  BandMatrix() = default;
  explicit BandMatrix(int band, std::optional<int> period = std::nullopt);

  /// Finite unit matrix E_ij.
  static BandMatrix unit(int i, int j);

  int band() const noexcept { return band_; }
  const std::optional<int>& period() const noexcept { return period_; }
  bool periodic() const noexcept { return period_.has_value(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Adds v at (i, j) (and at every translate when periodic).
  void add(int i, int j, const Rational& v);
  Rational at(int i, int j) const;
  /// Stored entries: the full support, or one period of generators.
  const std::map<Key, Rational>& generators() const noexcept { return entries_; }

  /// Same matrix with a larger declared band.
  BandMatrix with_band(int band) const;
  /// Same periodic matrix re-expressed with period p (a multiple of the current one).
  BandMatrix with_period(int p) const;
  /// The matrix b_{ij} = a_{i-d, j-d}.
  BandMatrix shifted(int d) const;

  BandMatrix& operator+=(const BandMatrix& o);
  BandMatrix& operator-=(const BandMatrix& o);
  BandMatrix& operator*=(const Rational& k);
  friend BandMatrix operator+(BandMatrix a, const BandMatrix& b) { return a += b; }
  friend BandMatrix operator-(BandMatrix a, const BandMatrix& b) { return a -= b; }
  friend BandMatrix operator*(const Rational& k, BandMatrix a) { return a *= k; }

  /// Equality as infinite matrices; band and period representation do not matter.
  friend bool operator==(const BandMatrix& a, const BandMatrix& b);

  std::string to_string() const;

 private:
  Key normalize(int i, int j) const;

  int band_ = 0;
  std::optional<int> period_;
  std::map<Key, Rational> entries_;
};

/// Matrix product; banded inputs give a banded output (periodic when both are).
BandMatrix multiply(const BandMatrix& x, const BandMatrix& y);

/// XY - YX.
BandMatrix commutator(const BandMatrix& x, const BandMatrix& y);

int floor_div(int a, int b);
int lcm_int(int a, int b);

}  // namespace kpferm
