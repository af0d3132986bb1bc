#include "kpferm/loopalg.hpp"

#include "kpferm/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

namespace kpferm {

Rational cocycle_pairs(const BandMatrix& x, const BandMatrix& y) {
  const int band = std::max(x.band(), y.band());
  Rational total = 0;
  for (int i = 1 - band; i <= 0; ++i) {
    for (int j = 1; j <= i + band; ++j) total += x.at(i, j) * y.at(j, i) - y.at(i, j) * x.at(j, i);
  }
  return total;
}

CentralMatrix ainf_bracket(const CentralMatrix& x, const CentralMatrix& y) {
  return {commutator(x.matrix, y.matrix), cocycle_pairs(x.matrix, y.matrix)};
}

SquareMatrix::SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n * n)) {
  if (n <= 0) throw_invalid("SquareMatrix: size must be positive");
}

SquareMatrix SquareMatrix::unit(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) throw_invalid("SquareMatrix::unit: index out of range");
  SquareMatrix m(n);
  m(i - 1, j - 1) = 1;
  return m;
}

bool SquareMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return kpferm::is_zero(q); });
}

Rational SquareMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

SquareMatrix SquareMatrix::transposed() const {
  SquareMatrix t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& o) {
  if (o.n_ != n_) throw_invalid("SquareMatrix: size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& o) {
  if (o.n_ != n_) throw_invalid("SquareMatrix: size mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator*=(const Rational& k) {
  for (auto& q : data_) q *= k;
  return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.n_ != b.n_) throw_invalid("SquareMatrix: size mismatch");
  SquareMatrix c(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int k = 0; k < a.n_; ++k) {
      if (is_zero(a(i, k))) continue;
      for (int j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LoopElement::LoopElement(int size) : size_(size) {
  if (size <= 0) throw_invalid("LoopElement: size must be positive");
}

void LoopElement::add(int k, const SquareMatrix& m) {
  if (m.size() != size_) throw_invalid("LoopElement: coefficient size mismatch");
  auto [it, inserted] = terms_.try_emplace(k, m);
  if (!inserted) it->second += m;
  if (it->second.is_zero()) terms_.erase(it);
}

void LoopElement::add_unit(int k, int i, int j, const Rational& v) {
  add(k, v * SquareMatrix::unit(size_, i, j));
}

SquareMatrix LoopElement::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? SquareMatrix(size_) : it->second;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  if (o.size_ != size_) throw_invalid("LoopElement: size mismatch");
  for (const auto& [k, m] : o.terms_) add(k, m);
  return *this;
}

LoopElement& LoopElement::operator*=(const Rational& k) {
  if (kpferm::is_zero(k)) {
    terms_.clear();
    return *this;
  }
  for (auto& [deg, m] : terms_) m *= k;
  return *this;
}

LoopElement loop_bracket(const LoopElement& a, const LoopElement& b) {
  if (a.size() != b.size()) throw_invalid("loop_bracket: size mismatch");
  LoopElement out(a.size());
  for (const auto& [ka, ma] : a.terms())
    for (const auto& [kb, mb] : b.terms()) out.add(ka + kb, ma * mb - mb * ma);
  return out;
}

BandMatrix loop_embed(const LoopElement& a) {
  const int n = a.size();
  int max_deg = 0;
  for (const auto& [k, m] : a.terms()) max_deg = std::max(max_deg, std::abs(k));
  BandMatrix out(n * max_deg + n, n);
  for (const auto& [k, m] : a.terms()) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const Rational& v = m(i - 1, j - 1);
        if (!is_zero(v)) out.add(-n * k + i, j, v);
      }
  }
  return out;
}

Rational residue_cocycle(const LoopElement& a, const LoopElement& b) {
  if (a.size() != b.size()) throw_invalid("residue_cocycle: size mismatch");
  Rational total = 0;
  for (const auto& [k, m] : a.terms()) {
    if (k == 0) continue;
    auto it = b.terms().find(-k);
    if (it == b.terms().end()) continue;
    total += Rational(k) * (m * it->second).trace();
  }
  return total;
}

namespace {

std::vector<Rational> flatten(const SquareMatrix& m) {
  std::vector<Rational> v;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) v.push_back(m(i, j));
  return v;
}

// Solves sum_b c_b basis[b] = target exactly; nullopt when target is outside the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<std::vector<Rational>>& basis,
                                                   const std::vector<Rational>& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = basis[c][r];
    aug[r][cols] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && is_zero(aug[p][c])) ++p;
    if (p == rows) continue;
    std::swap(aug[p], aug[row]);
    const Rational inv = 1 / aug[row][c];
    for (auto& q : aug[row]) q *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero(aug[r][c])) continue;
      const Rational f = aug[r][c];
      for (std::size_t k = c; k <= cols; ++k) aug[r][k] -= f * aug[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!is_zero(aug[r][cols])) return std::nullopt;
  }
  std::vector<Rational> sol(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) sol[pivot_col[r]] = aug[r][cols];
  return sol;
}

}  // namespace

void EmbeddingData::validate() const {
  if (size <= 0) throw_invalid("EmbeddingData: size must be positive");
  std::vector<std::vector<Rational>> flat;
  for (const auto& m : images) {
    if (m.size() != size) throw_invalid("EmbeddingData: image has the wrong size");
    // Independence: the new image must not lie in the span of the previous ones.
    if (!flat.empty() && solve_in_span(flat, flatten(m))) {
      throw_invalid("EmbeddingData: basis images are linearly dependent");
    }
    if (flat.empty() && m.is_zero()) throw_invalid("EmbeddingData: zero basis image");
    flat.push_back(flatten(m));
  }
  (void)structure_constants();
}

std::vector<std::vector<std::vector<Rational>>> EmbeddingData::structure_constants() const {
  std::vector<std::vector<Rational>> flat;
  for (const auto& m : images) flat.push_back(flatten(m));
  const std::size_t d = images.size();
  std::vector<std::vector<std::vector<Rational>>> c(d, std::vector<std::vector<Rational>>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const SquareMatrix br = images[a] * images[b] - images[b] * images[a];
      auto sol = solve_in_span(flat, flatten(br));
      if (!sol) throw_invalid("EmbeddingData: span of the images is not closed under commutators");
      c[a][b] = std::move(*sol);
    }
  return c;
}

LoopElement push_forward(const EmbeddingData& e, const AbstractLoop& x) {
  LoopElement out(e.size);
  for (const auto& [k, coeffs] : x.terms) {
    if (coeffs.size() != e.images.size()) {
      throw_invalid("affinized loop: coefficient vector length does not match the embedding basis");
    }
    SquareMatrix m(e.size);
    for (std::size_t b = 0; b < coeffs.size(); ++b) {
      if (!is_zero(coeffs[b])) m += coeffs[b] * e.images[b];
    }
    out.add(k, m);
  }
  return out;
}

Rational affinized_cocycle(const EmbeddingData& e, const AbstractLoop& x, const AbstractLoop& y) {
  return residue_cocycle(push_forward(e, x), push_forward(e, y));
}

SquareMatrix DiagramAutomorphism::apply(const SquareMatrix& x) const {
  const int n = x.size();
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto pi = static_cast<std::size_t>(i);
      const auto pj = static_cast<std::size_t>(j);
      const Rational& v = transpose ? x(j, i) : x(i, j);
      if (is_zero(v)) continue;
      Rational w = v * signs[static_cast<std::size_t>(perm[pi])] * signs[static_cast<std::size_t>(perm[pj])];
      if (transpose) w = -w;
      out(perm[pi], perm[pj]) += w;
    }
  return out;
}

void DiagramAutomorphism::validate(int n) const {
  if (static_cast<int>(perm.size()) != n || static_cast<int>(signs.size()) != n) {
    throw_invalid("DiagramAutomorphism: permutation/sign data must have length n");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n));
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw_invalid("DiagramAutomorphism: perm is not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw_invalid("DiagramAutomorphism: signs must be +1 or -1");
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const SquareMatrix e = SquareMatrix::unit(n, i, j);
      if (!(apply(apply(e)) == e)) throw_invalid("DiagramAutomorphism: map is not an involution");
    }
}

LoopElement diagram_fixed_part(const LoopElement& a, const DiagramAutomorphism& sigma, int order,
                               bool twisted) {
  if (order != 2) throw_invalid("diagram_fixed_part: only order 2 automorphisms are supported");
  sigma.validate(a.size());
  LoopElement out(a.size());
  const Rational half(1, 2);
  for (const auto& [k, m] : a.terms()) {
    SquareMatrix image = sigma.apply(m);
    if (twisted && (k % 2 != 0)) image *= Rational(-1);
    out.add(k, half * (m + image));
  }
  return out;
}

}  // namespace kpferm
