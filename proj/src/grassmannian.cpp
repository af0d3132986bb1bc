#include "kpferm/grassmannian.hpp"

#include "kpferm/error.hpp"

#include <algorithm>

namespace kpferm {

void AffineCoords::set(int n, int m, const Rational& v) {
  if (n < 0 || m < 0) throw_invalid("AffineCoords: indices must be non-negative");
  if (kpferm::is_zero(v)) {
    entries_.erase({n, m});
  } else {
    entries_[{n, m}] = v;
  }
}

Rational AffineCoords::at(int n, int m) const {
  auto it = entries_.find({n, m});
  return it == entries_.end() ? Rational(0) : it->second;
}

int AffineCoords::max_n() const {
  int r = -1;
  for (const auto& [key, v] : entries_) r = std::max(r, key.first);
  return r;
}

int AffineCoords::max_m() const {
  int r = -1;
  for (const auto& [key, v] : entries_) r = std::max(r, key.second);
  return r;
}

namespace {

void check_strictly_decreasing(const std::vector<int>& xs, const char* what) {
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] < 0) throw_invalid(std::string(what) + ": entries must be non-negative");
    if (k > 0 && xs[k] >= xs[k - 1]) throw_invalid(std::string(what) + ": entries must be strictly decreasing");
  }
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m[r][c])) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

Rational plucker_minor(const AffineCoords& a, const std::vector<int>& ms, const std::vector<int>& ns) {
  if (ms.size() != ns.size()) throw_invalid("plucker_minor: ms and ns must have equal length");
  check_strictly_decreasing(ms, "plucker_minor");
  check_strictly_decreasing(ns, "plucker_minor");
  const std::size_t l = ms.size();
  std::vector<std::vector<Rational>> m(l, std::vector<Rational>(l));
  int nsum = 0;
  for (std::size_t i = 0; i < l; ++i) {
    nsum += ns[i];
    for (std::size_t j = 0; j < l; ++j) m[i][j] = a.at(ns[i], ms[j]);
  }
  Rational det = determinant(std::move(m));
  return nsum % 2 == 0 ? det : Rational(-det);
}

SignedState frobenius_state(const std::vector<int>& ms, const std::vector<int>& ns) {
  if (ms.size() != ns.size()) throw_invalid("frobenius_state: ms and ns must have equal length");
  check_strictly_decreasing(ms, "frobenius_state");
  check_strictly_decreasing(ns, "frobenius_state");
  std::vector<HalfIndex> factors;
  for (int m : ms) factors.push_back(HalfIndex::from_twice(-2 * m - 1));
  const int top = ns.empty() ? -1 : ns.front();
  for (int k = 0; k <= top; ++k) {
    if (std::find(ns.begin(), ns.end(), k) == ns.end()) factors.push_back(HalfIndex::from_twice(2 * k + 1));
  }
  const FockVector w = normalize_wedge(factors, HalfIndex::from_twice(2 * top + 3));
  if (w.size() != 1) throw_internal("frobenius_state: wedge did not normalize to one state");
  const auto& [state, coeff] = *w.terms().begin();
  return {coeff > 0 ? 1 : -1, state};
}

std::pair<std::vector<int>, std::vector<int>> frobenius_coordinates(const BasisState& s) {
  if (s.charge != 0) throw_invalid("frobenius_coordinates: state must have charge 0");
  // Occupied negative slots -m-1 give the m's; empty non-negative slots n give the n's.
  const auto [lo, tail] = occupied_window(s);
  std::vector<int> ms;
  std::vector<int> ns;
  for (int slot = std::min(lo, 0); slot < std::max(tail, 0); ++slot) {
    const bool occ = slot_occupied(s, slot);
    if (slot < 0 && occ) ms.push_back(-slot - 1);
    if (slot >= 0 && !occ) ns.push_back(slot);
  }
  std::reverse(ms.begin(), ms.end());
  std::reverse(ns.begin(), ns.end());
  std::sort(ms.rbegin(), ms.rend());
  std::sort(ns.rbegin(), ns.rend());
  return {ms, ns};
}

FockVector bogoliubov_state(const AffineCoords& a, int energy_cut) {
  if (energy_cut < 0) throw_invalid("bogoliubov_state: energy_cut must be non-negative");
  FockVector total(BasisState::vacuum());
  FockVector term = total;
  for (int k = 1; k <= energy_cut && !term.is_zero_vector(); ++k) {
    FockVector next;
    for (const auto& [s, c] : term.terms()) {
      for (const auto& [key, v] : a.entries()) {
        const auto [n, m] = key;
        if (s.energy() + n + m + 1 > energy_cut) continue;
        if (auto r = move_slot(s, n, -m - 1)) next.add(r->state, Rational(r->sign) * v * c);
      }
    }
    next *= Rational(1, k);
    total += next;
    term = std::move(next);
  }
  return total;
}

Rational Kernel::coefficient(int xi_exp, int eta_exp) const {
  Rational v = 0;
  if (polar_ && eta_exp >= 0 && xi_exp == -eta_exp - 1) v += 1;
  if (xi_exp <= -1 && eta_exp <= -1) v += coords_->at(-xi_exp - 1, -eta_exp - 1);
  return v;
}

Rational two_point_cell(const AffineCoords& a, int p, int q, bool use_state) {
  if (p < 0 || q < 0) throw_invalid("two_point_cell: p and q must be non-negative");
  if (!use_state) return Kernel(a, true).coefficient(-p - 1, -q - 1);
  const FockVector u = bogoliubov_state(a, p + q + 1);
  const FockVector w = apply_fermion(FermionKind::PsiStar, HalfIndex::from_twice(2 * q + 1), u);
  return vev(apply_fermion(FermionKind::Psi, HalfIndex::from_twice(2 * p + 1), w));
}

}  // namespace kpferm
