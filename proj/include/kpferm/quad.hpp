#pragma once

// Normal-ordered quadratic elements acting on the Fock space.
//
// a-block entries use DJKM labels: a_ij multiplies :psi_i psi*_j:, with the
// contraction <psi_i psi*_j> = delta_ij [i <= -1]. The optional b and c blocks
// (D'-infinity) hold b_jk psi_j psi_k and c_jk psi*_j psi*_k, stored with j < k.
//
// The E_ij matrix picture of loopalg.hpp is related by one index shift:
// r(E_ij) = :psi_{i-1} psi*_{j-1}:, which makes the matrix cocycle
// alpha(E_ij, E_ji) = [i <= 0 < j] - [j <= 0 < i] the commutator anomaly.

#include "kpferm/band_matrix.hpp"
#include "kpferm/fock.hpp"
#include "kpferm/loopalg.hpp"
#include "kpferm/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

namespace kpferm {

struct QuadElement {
  using Key = std::pair<int, int>;

  int band = 0;
  BandMatrix a;
  std::map<Key, Rational> b;
  std::map<Key, Rational> c;
  Rational central;

  QuadElement() = default;
  explicit QuadElement(int band, std::optional<int> period = std::nullopt)
      : band(band), a(band, period) {}

  void add_a(int i, int j, const Rational& v) { a.add(i, j, v); }
  /// Adds v psi_j psi_k, re-ordered to j < k.
  void add_b(int j, int k, const Rational& v);
  /// Adds v psi*_j psi*_k, re-ordered to j < k.
  void add_c(int j, int k, const Rational& v);

  bool extended() const noexcept { return !b.empty() || !c.empty(); }
  bool periodic() const noexcept { return a.periodic(); }
  /// Throws when the band or block invariants are violated.
  void validate() const;

  friend bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.central == y.central;
  }
};

/// Linear action of X on v. Periodic a-blocks act with finitely many terms per
/// basis state; the number of produced terms is checked against
/// quad_support_bound.
FockVector apply_quad(const QuadElement& x, const FockVector& v);

/// Upper bound on the number of basis states apply_quad can produce from s.
std::size_t quad_support_bound(const QuadElement& x, const BasisState& s);

/// r-hat: E_ij -> :psi_{i-1} psi*_{j-1}:, c -> 1.
QuadElement quad_from_matrix(const CentralMatrix& m);
/// Inverse of quad_from_matrix on a-block elements.
CentralMatrix matrix_of(const QuadElement& x);
/// A-infinity bracket of two a-block elements, cocycle included.
QuadElement quad_bracket(const QuadElement& x, const QuadElement& y);

}  // namespace kpferm
