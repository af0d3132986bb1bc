#include "kpferm/band_matrix.hpp"

#include "kpferm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kpferm {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

BandMatrix::BandMatrix(int band, std::optional<int> period) : band_(band), period_(period) {
  if (band < 0) throw_invalid("BandMatrix: band must be non-negative");
  if (period && *period <= 0) throw_invalid("BandMatrix: period must be positive");
}

BandMatrix BandMatrix::unit(int i, int j) {
  BandMatrix m(std::abs(i - j));
  m.add(i, j, Rational(1));
  return m;
}

BandMatrix::Key BandMatrix::normalize(int i, int j) const {
  if (!period_) return {i, j};
  const int shift = floor_div(i, *period_) * *period_;
  return {i - shift, j - shift};
}

void BandMatrix::add(int i, int j, const Rational& v) {
  if (std::abs(i - j) > band_) {
    throw_invalid("BandMatrix: entry (" + std::to_string(i) + "," + std::to_string(j) +
                  ") outside band " + std::to_string(band_));
  }
  if (kpferm::is_zero(v)) return;
  const Key key = normalize(i, j);
  auto [it, inserted] = entries_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (kpferm::is_zero(it->second)) entries_.erase(it);
  }
}

Rational BandMatrix::at(int i, int j) const {
  if (std::abs(i - j) > band_) return Rational(0);
  auto it = entries_.find(normalize(i, j));
  return it == entries_.end() ? Rational(0) : it->second;
}

BandMatrix BandMatrix::with_band(int band) const {
  if (band < band_) throw_invalid("BandMatrix::with_band: cannot shrink the band");
  BandMatrix out = *this;
  out.band_ = band;
  return out;
}

BandMatrix BandMatrix::with_period(int p) const {
  if (!period_) throw_invalid("BandMatrix::with_period: matrix is not periodic");
  if (p % *period_ != 0) throw_invalid("BandMatrix::with_period: new period must be a multiple");
  BandMatrix out(band_, p);
  for (int copy = 0; copy < p / *period_; ++copy) {
    const int d = copy * *period_;
    for (const auto& [key, v] : entries_) out.add(key.first + d, key.second + d, v);
  }
  return out;
}

BandMatrix BandMatrix::shifted(int d) const {
  BandMatrix out(band_, period_);
  for (const auto& [key, v] : entries_) out.add(key.first + d, key.second + d, v);
  return out;
}

BandMatrix& BandMatrix::operator+=(const BandMatrix& o) {
  if (o.is_zero()) {
    band_ = std::max(band_, o.band_);
    return *this;
  }
  if (is_zero()) {
    const int b = std::max(band_, o.band_);
    *this = o;
    band_ = b;
    return *this;
  }
  if (periodic() != o.periodic()) {
    throw_invalid("BandMatrix: cannot add a finite matrix to a periodic one");
  }
  band_ = std::max(band_, o.band_);
  if (!periodic()) {
    for (const auto& [key, v] : o.entries_) add(key.first, key.second, v);
    return *this;
  }
  const int p = lcm_int(*period_, *o.period_);
  if (p != *period_) *this = with_period(p);
  const BandMatrix other = (p == *o.period_) ? o : o.with_period(p);
  for (const auto& [key, v] : other.entries_) add(key.first, key.second, v);
  return *this;
}

BandMatrix& BandMatrix::operator-=(const BandMatrix& o) { return *this += Rational(-1) * o; }

BandMatrix& BandMatrix::operator*=(const Rational& k) {
  if (kpferm::is_zero(k)) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, v] : entries_) v *= k;
  return *this;
}

bool operator==(const BandMatrix& a, const BandMatrix& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.periodic() != b.periodic()) return false;
  if (!a.periodic()) return a.entries_ == b.entries_;
  const int p = lcm_int(*a.period_, *b.period_);
  const int band = std::max(a.band_, b.band_);
  for (int i = 0; i < p; ++i) {
    for (int j = i - band; j <= i + band; ++j) {
      if (a.at(i, j) != b.at(i, j)) return false;
    }
  }
  return true;
}

std::string BandMatrix::to_string() const {
  std::string out = "BandMatrix(band=" + std::to_string(band_);
  if (period_) out += ", period=" + std::to_string(*period_);
  out += ") {";
  bool first = true;
  for (const auto& [key, v] : entries_) {
    out += first ? " " : ", ";
    first = false;
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): " + format_rational(v);
  }
  return out + " }";
}

BandMatrix multiply(const BandMatrix& x, const BandMatrix& y) {
  const int band = x.band() + y.band();
  if (x.is_zero() || y.is_zero()) return BandMatrix(band);
  if (x.periodic() && y.periodic()) {
    const int p = lcm_int(*x.period(), *y.period());
    BandMatrix out(band, p);
    for (int i = 0; i < p; ++i) {
      for (int j = i - x.band(); j <= i + x.band(); ++j) {
        const Rational xij = x.at(i, j);
        if (kpferm::is_zero(xij)) continue;
        for (int k = j - y.band(); k <= j + y.band(); ++k) {
          const Rational yjk = y.at(j, k);
          if (!kpferm::is_zero(yjk)) out.add(i, k, xij * yjk);
        }
      }
    }
    return out;
  }
  BandMatrix out(band);
  if (!x.periodic() && !y.periodic()) {
    for (const auto& [kx, vx] : x.generators()) {
      for (const auto& [ky, vy] : y.generators()) {
        if (kx.second == ky.first) out.add(kx.first, ky.second, vx * vy);
      }
    }
    return out;
  }
  if (x.periodic()) {
    for (const auto& [ky, vy] : y.generators()) {
      const int j = ky.first;
      for (int i = j - x.band(); i <= j + x.band(); ++i) {
        const Rational xij = x.at(i, j);
        if (!kpferm::is_zero(xij)) out.add(i, ky.second, xij * vy);
      }
    }
    return out;
  }
  for (const auto& [kx, vx] : x.generators()) {
    const int j = kx.second;
    for (int k = j - y.band(); k <= j + y.band(); ++k) {
      const Rational yjk = y.at(j, k);
      if (!kpferm::is_zero(yjk)) out.add(kx.first, k, vx * yjk);
    }
  }
  return out;
}

BandMatrix commutator(const BandMatrix& x, const BandMatrix& y) {
  return multiply(x, y) - multiply(y, x);
}

}  // namespace kpferm
