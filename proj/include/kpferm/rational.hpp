#pragma once

#include <gmpxx.h>

#include <array>
#include <string>
#include <string_view>

namespace kpferm {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws Error(Parse).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q = 1) form.
std::string format_rational(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// n/d in canonical form (the two-argument mpq_class constructor does not reduce).
inline Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

/// Element of Q(i, sqrt 2), stored over the Q-basis {1, i, sqrt2, i*sqrt2}.
///
/// Only the neutral-fermion operators need this ring; every charged-fermion
/// computation stays in Rational.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(const Rational& re) { c_[0] = re; }  // NOLINT: implicit lift
  ExtRational(Rational one, Rational i, Rational sqrt2, Rational i_sqrt2)
      : c_{std::move(one), std::move(i), std::move(sqrt2), std::move(i_sqrt2)} {}

  static ExtRational imaginary_unit() { return {0, 1, 0, 0}; }
  static ExtRational sqrt2() { return {0, 0, 1, 0}; }
  /// 1/sqrt(2) = sqrt(2)/2.
  static ExtRational inv_sqrt2() { return {0, 0, Rational(1, 2), 0}; }

  const Rational& part(int k) const { return c_[static_cast<std::size_t>(k)]; }
  bool is_rational() const { return is_zero(c_[1]) && is_zero(c_[2]) && is_zero(c_[3]); }

  ExtRational& operator+=(const ExtRational& o);
  ExtRational& operator-=(const ExtRational& o);
  ExtRational& operator*=(const ExtRational& o);

  friend ExtRational operator+(ExtRational a, const ExtRational& b) { return a += b; }
  friend ExtRational operator-(ExtRational a, const ExtRational& b) { return a -= b; }
  friend ExtRational operator*(ExtRational a, const ExtRational& b) { return a *= b; }
  friend ExtRational operator-(const ExtRational& a) { return ExtRational() - a; }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

inline bool is_zero(const ExtRational& q) {
  return is_zero(q.part(0)) && is_zero(q.part(1)) && is_zero(q.part(2)) && is_zero(q.part(3));
}

}  // namespace kpferm
