#pragma once

// Infinite matrices with the central extension of A-infinity, the loop algebra
// gl_n[t, 1/t] and its embedding into banded periodic matrices.
//
// Matrix coordinates here follow the E_ij picture: the cocycle is
// alpha(E_ij, E_ji) = 1 for i <= 0 < j. A matrix index k corresponds to the
// DJKM fermion label k - 1 (see quad.hpp).

#include "kpferm/band_matrix.hpp"
#include "kpferm/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace kpferm {

/// Element of A-infinity: matrix part plus a multiple of the central element c.
struct CentralMatrix {
  BandMatrix matrix;
  Rational central;

  friend bool operator==(const CentralMatrix& a, const CentralMatrix& b) {
    return a.matrix == b.matrix && a.central == b.central;
  }
};

/// alpha(X, Y) = sum_{i <= 0, j >= 1} (X_ij Y_ji - Y_ij X_ji).
Rational cocycle_pairs(const BandMatrix& x, const BandMatrix& y);

/// [X, Y] = XY - YX + alpha(X, Y) c.
CentralMatrix ainf_bracket(const CentralMatrix& x, const CentralMatrix& y);

/// Dense n x n rational matrix, 0-based.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n);
  /// Unit matrix e_ij with 1-based indices, as in gl_n.
  static SquareMatrix unit(int n, int i, int j);

  int size() const noexcept { return n_; }
  Rational& operator()(int i, int j) { return data_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return data_[index(i, j)]; }

  bool is_zero() const;
  Rational trace() const;
  SquareMatrix transposed() const;

  SquareMatrix& operator+=(const SquareMatrix& o);
  SquareMatrix& operator-=(const SquareMatrix& o);
  SquareMatrix& operator*=(const Rational& k);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(const Rational& k, SquareMatrix a) { return a *= k; }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  int n_ = 0;
  std::vector<Rational> data_;
};

/// Laurent polynomial a(t) = sum_k t^k a_k with a_k in gl_n.
class LoopElement {
 public:
  LoopElement() = default;
  explicit LoopElement(int size);

  int size() const noexcept { return size_; }
  void add(int k, const SquareMatrix& m);
  /// Adds v * t^k e_ij (1-based i, j).
  void add_unit(int k, int i, int j, const Rational& v);
  const std::map<int, SquareMatrix>& terms() const noexcept { return terms_; }
  SquareMatrix coefficient(int k) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator*=(const Rational& k);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator*(const Rational& k, LoopElement a) { return a *= k; }
  friend bool operator==(const LoopElement& a, const LoopElement& b) {
    return a.size_ == b.size_ && a.terms_ == b.terms_;
  }

 private:
  int size_ = 1;
  std::map<int, SquareMatrix> terms_;
};

/// Pointwise bracket a(t)b(t) - b(t)a(t).
LoopElement loop_bracket(const LoopElement& a, const LoopElement& b);

/// R(e_ij(k)) = sum_l E_{n(l-k)+i, nl+j}: an n-periodic band matrix.
BandMatrix loop_embed(const LoopElement& a);

/// res tr(a'(t) b(t)) = sum_k k tr(a_k b_{-k}).
Rational residue_cocycle(const LoopElement& a, const LoopElement& b);

/// Images of a basis of a finite-dimensional Lie algebra under an embedding into gl_n.
struct EmbeddingData {
  int size = 0;
  std::vector<SquareMatrix> images;

  /// Checks linear independence and closure of the span under commutators.
  void validate() const;
  /// Structure constants c with [x_a, x_b] = sum_c c[a][b][c] x_c.
  std::vector<std::vector<std::vector<Rational>>> structure_constants() const;
};

/// X(t) = sum_k t^k sum_b coeffs_k[b] x_b over the abstract basis.
struct AbstractLoop {
  std::map<int, std::vector<Rational>> terms;
};

LoopElement push_forward(const EmbeddingData& e, const AbstractLoop& x);

/// alpha_iota(X, Y) = alpha(R(iota X), R(iota Y)), computed as a residue.
Rational affinized_cocycle(const EmbeddingData& e, const AbstractLoop& x, const AbstractLoop& y);

/// Order-2 automorphism of gl_n: X -> D P X P^{-1} D^{-1}, or with `transpose`
/// set, X -> -D P X^T P^{-1} D^{-1}; P permutes basis vectors, D = diag(signs).
struct DiagramAutomorphism {
  std::vector<int> perm;   // 0-based images of basis vectors
  std::vector<int> signs;  // entries +1 / -1
  bool transpose = false;

  SquareMatrix apply(const SquareMatrix& x) const;
  /// Throws unless this is an involution of gl_n of the right size.
  void validate(int n) const;
};

/// Projection (a + sigma(a)) / 2, with sigma acting coefficient-wise; `twisted`
/// additionally multiplies the t^k part by (-1)^k. Only order k = 2 is supported.
LoopElement diagram_fixed_part(const LoopElement& a, const DiagramAutomorphism& sigma, int order,
                               bool twisted);

}  // namespace kpferm
