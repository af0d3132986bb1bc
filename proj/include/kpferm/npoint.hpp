#pragma once

// Connected n-point functions of the free energy: the closed cyclic-sum
// formula in terms of the kernel, and the differentiation oracle.

#include "kpferm/grassmannian.hpp"
#include "kpferm/rational.hpp"
#include "kpferm/tseries.hpp"

#include <map>
#include <vector>

namespace kpferm {

inline constexpr int kMaxNPoint = 6;

/// Sum of entries first, then lexicographic.
struct CellOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Cells (j_1, ..., j_n), all j_i >= 1 and sum <= weight_cut; zero cells are not stored.
struct NPointTable {
  int n = 2;
  int weight_cut = 0;
  std::map<std::vector<int>, Rational, CellOrder> cells;

  Rational at(const std::vector<int>& j) const;
  friend bool operator==(const NPointTable&, const NPointTable&) = default;
};

/// Coefficient of xi_i^p xi_j^q in A-hat(xi_i, xi_j): the kernel A plus, for
/// i != j, the expansion of 1/(xi_i - xi_j) in the direction fixed by i < j or i > j.
Rational kernel_hat_cell(const AffineCoords& a, int i, int j, int p, int q);

/// (-1)^{n-1} sum over n-cycles of prod A-hat(xi_s(k), xi_s(k+1)), cell by cell.
NPointTable npoint_formula(const AffineCoords& a, int n, int weight_cut);

/// n-th mixed derivatives of log tau at T = 0.
NPointTable npoint_oracle(const AffineCoords& a, int n, int weight_cut);

/// Derivative table of a given free energy f (cells up to f's weight cut).
NPointTable npoint_from_series(const TSeries& f, int n);

/// All cells (j_1..j_n) with j_i >= 1 and sum <= weight_cut, in CellOrder.
std::vector<std::vector<int>> npoint_cells(int n, int weight_cut);

}  // namespace kpferm
