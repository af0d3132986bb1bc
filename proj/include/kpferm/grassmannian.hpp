#pragma once

// Big-cell points of the Sato Grassmannian in affine coordinates.
//
// U is spanned by f_n = z^{n+1/2} + sum_m a_{n,m} z^{-m-1/2}, n >= 0, and
// |U> = f_0 ^ f_1 ^ ... = exp(A)|vac> with
// A = sum a_{n,m} psi_{-m-1/2} psi*_{-n-1/2}.

#include "kpferm/fock.hpp"
#include "kpferm/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace kpferm {

/// Finitely supported affine coordinates a_{n,m}, n, m >= 0.
class AffineCoords {
 public:
  using Key = std::pair<int, int>;  // (n, m)

  void set(int n, int m, const Rational& v);
  Rational at(int n, int m) const;
  const std::map<Key, Rational>& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  /// Largest n and m carrying a non-zero entry, -1 when empty.
  int max_n() const;
  int max_m() const;

  friend bool operator==(const AffineCoords&, const AffineCoords&) = default;

 private:
  std::map<Key, Rational> entries_;
};

/// (-1)^{n_1 + ... + n_l} det[a_{n_i, m_j}]; both lists strictly decreasing.
Rational plucker_minor(const AffineCoords& a, const std::vector<int>& ms, const std::vector<int>& ns);

/// The basis state z^{-m_1-1/2} ^ ... ^ z^{-m_l-1/2} ^ (vacuum without the
/// z^{n_i+1/2}), with the sign that brings this wedge to canonical order.
SignedState frobenius_state(const std::vector<int>& ms, const std::vector<int>& ns);

/// Frobenius coordinates (ms; ns) of a charge-0 state.
std::pair<std::vector<int>, std::vector<int>> frobenius_coordinates(const BasisState& s);

/// exp(A)|vac>, exact on all basis states of energy <= energy_cut.
FockVector bogoliubov_state(const AffineCoords& a, int energy_cut);

/// <psi(xi) psi*(eta)>_U = i_{xi,eta} 1/(xi - eta) + A(xi, eta).
class Kernel {
 public:
  Kernel(const AffineCoords& coords, bool polar_part) : coords_(&coords), polar_(polar_part) {}

  bool polar_part() const noexcept { return polar_; }
  /// Coefficient of xi^{xi_exp} eta^{eta_exp}.
  Rational coefficient(int xi_exp, int eta_exp) const;

 private:
  const AffineCoords* coords_;
  bool polar_;
};

/// Coefficient of xi^{-p-1} eta^{-q-1} in <psi(xi) psi*(eta)>_U. With
/// use_state the value comes from the Fock state; otherwise from the
/// coordinates (it equals a_{p,q}).
Rational two_point_cell(const AffineCoords& a, int p, int q, bool use_state);

}  // namespace kpferm
