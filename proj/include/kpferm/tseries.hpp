#pragma once

// Truncated power series in T1, T2, ... graded by weight(T_n) = n.

#include "kpferm/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace kpferm {

/// Exponent vector: entry k is the power of T_{k+1}; trailing zeros trimmed.
using Monomial = std::vector<int>;

int monomial_weight(const Monomial& m);
Monomial monomial_var(int n, int power = 1);

/// Weight ascending, then exponent vectors in descending lexicographic order
/// (T1^2 before T2).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class TSeries {
 public:
  using map_type = std::map<Monomial, Rational, MonomialOrder>;

  explicit TSeries(int weight_cut = 0);
  static TSeries constant(int weight_cut, const Rational& c);
  /// The series T_n (zero if n exceeds the cut).
  static TSeries variable(int weight_cut, int n);

  int weight_cut() const noexcept { return cut_; }
  const map_type& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * m; silently dropped when the weight exceeds the cut.
  void add(const Monomial& m, const Rational& c);
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient({}); }

  /// Same series with a smaller (or equal) cut.
  TSeries truncated(int cut) const;
  /// Terms of weight exactly w.
  TSeries homogeneous(int w) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const Rational& k);
  TSeries& operator*=(const TSeries& o);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const TSeries& b) { return a *= b; }
  friend TSeries operator*(const Rational& k, TSeries a) { return a *= k; }
  /// Same cut and same coefficients.
  friend bool operator==(const TSeries& a, const TSeries& b) {
    return a.cut_ == b.cut_ && a.terms_ == b.terms_;
  }

  /// d/dT_n; the result is exact only up to weight cut - n, and is cut there.
  TSeries derivative(int n) const;

  /// "1 + 1/2*T1^2 + T2"; "0" for the zero series.
  std::string to_string() const;

 private:
  int cut_;
  map_type terms_;
};

/// exp of a series with zero constant term.
TSeries series_exp(const TSeries& f);
/// log of a series with constant term 1.
TSeries series_log(const TSeries& g);

}  // namespace kpferm
