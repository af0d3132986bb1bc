#include "kpferm/fock.hpp"

#include <algorithm>
#include <cstdlib>

namespace kpferm {

namespace {

// Explicit occupied slots below `tail`; every slot >= tail is occupied.
struct SlotWindow {
  std::vector<int> slots;
  int tail = 0;
};

SlotWindow window_of(const BasisState& s, int min_tail) {
  SlotWindow w;
  const int len = static_cast<int>(s.partition.size());
  w.slots.reserve(s.partition.size() + 4);
  for (int k = 0; k < len; ++k) w.slots.push_back(k - s.charge - s.partition[static_cast<std::size_t>(k)]);
  w.tail = len - s.charge;
  while (w.tail < min_tail) w.slots.push_back(w.tail++);
  return w;
}

BasisState state_of(const SlotWindow& w) {
  BasisState out;
  const int len = static_cast<int>(w.slots.size());
  out.charge = len - w.tail;
  out.partition.reserve(w.slots.size());
  for (int k = 0; k < len; ++k) out.partition.push_back(k - out.charge - w.slots[static_cast<std::size_t>(k)]);
  while (!out.partition.empty() && out.partition.back() == 0) out.partition.pop_back();
  return out;
}

int parity_sign(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

// Removes `slot` from the window; returns the wedge sign or 0 if absent.
int erase_slot(SlotWindow& w, int slot) {
  auto it = std::lower_bound(w.slots.begin(), w.slots.end(), slot);
  if (it == w.slots.end() || *it != slot) return 0;
  const auto pos = static_cast<std::size_t>(it - w.slots.begin());
  w.slots.erase(it);
  return parity_sign(pos);
}

// Inserts `slot` (which must be below the tail); returns sign or 0 if occupied.
int insert_slot(SlotWindow& w, int slot) {
  auto it = std::lower_bound(w.slots.begin(), w.slots.end(), slot);
  if (it != w.slots.end() && *it == slot) return 0;
  const auto pos = static_cast<std::size_t>(it - w.slots.begin());
  w.slots.insert(it, slot);
  return parity_sign(pos);
}

}  // namespace

std::string HalfIndex::to_string() const {
  return std::to_string(twice_r_) + "/2";
}

BasisState BasisState::make(int charge, std::vector<int> partition) {
  for (std::size_t k = 0; k < partition.size(); ++k) {
    if (partition[k] <= 0) throw_invalid("BasisState: partition entries must be positive");
    if (k > 0 && partition[k] > partition[k - 1]) {
      throw_invalid("BasisState: partition must be weakly decreasing");
    }
  }
  return BasisState{charge, std::move(partition)};
}

int BasisState::energy() const noexcept {
  int e = 0;
  for (int p : partition) e += p;
  return e;
}

std::string BasisState::to_string() const {
  std::string out = "|" + std::to_string(charge) + "; (";
  for (std::size_t k = 0; k < partition.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(partition[k]);
  }
  return out + ")>";
}

std::optional<SignedState> fill_slot(const BasisState& s, int slot) {
  SlotWindow w = window_of(s, slot + 1);
  const int sign = insert_slot(w, slot);
  if (sign == 0) return std::nullopt;
  return SignedState{sign, state_of(w)};
}

std::optional<SignedState> empty_slot(const BasisState& s, int slot) {
  SlotWindow w = window_of(s, slot + 1);
  const int sign = erase_slot(w, slot);
  if (sign == 0) return std::nullopt;
  return SignedState{sign, state_of(w)};
}

std::optional<SignedState> move_slot(const BasisState& s, int from, int to) {
  SlotWindow w = window_of(s, std::max(from, to) + 1);
  const int s1 = erase_slot(w, from);
  if (s1 == 0) return std::nullopt;
  const int s2 = insert_slot(w, to);
  if (s2 == 0) return std::nullopt;
  return SignedState{s1 * s2, state_of(w)};
}

bool slot_occupied(const BasisState& s, int slot) {
  const int len = static_cast<int>(s.partition.size());
  if (slot >= len - s.charge) return true;
  for (int k = 0; k < len; ++k) {
    if (k - s.charge - s.partition[static_cast<std::size_t>(k)] == slot) return true;
  }
  return false;
}

std::pair<int, int> occupied_window(const BasisState& s) {
  const int tail = static_cast<int>(s.partition.size()) - s.charge;
  if (s.partition.empty()) return {tail, tail};
  return {-s.charge - s.partition.front(), tail};
}

FockVector normalize_wedge(const std::vector<HalfIndex>& factors, HalfIndex tail_start,
                           const Rational& coeff) {
  const int tail = tail_start.slot();
  std::vector<int> slots;
  slots.reserve(factors.size());
  for (const auto& f : factors) {
    if (f.slot() >= tail) {
      throw_invalid("normalize_wedge: factor z^" + f.to_string() + " overlaps the tail starting at z^" +
                    tail_start.to_string());
    }
    slots.push_back(f.slot());
  }
  // Insertion sort, counting transpositions.
  std::size_t swaps = 0;
  for (std::size_t i = 1; i < slots.size(); ++i) {
    for (std::size_t j = i; j > 0 && slots[j - 1] >= slots[j]; --j) {
      if (slots[j - 1] == slots[j]) return {};
      std::swap(slots[j - 1], slots[j]);
      ++swaps;
    }
  }
  FockVector out;
  SlotWindow w{std::move(slots), tail};
  out.add(state_of(w), swaps % 2 == 0 ? coeff : Rational(-coeff));
  return out;
}

std::optional<SignedState> apply_fermion(FermionKind kind, HalfIndex r, const BasisState& s) {
  if (kind == FermionKind::Psi) return fill_slot(s, r.slot());
  return empty_slot(s, r.negated().slot());
}

std::vector<SignedState> boson_terms(int n, const BasisState& s) {
  std::vector<SignedState> out;
  if (n == 0) throw_invalid("apply_boson: n must be non-zero (use charge_of for alpha_0)");
  const int tail0 = occupied_window(s).second;
  const SlotWindow base = window_of(s, tail0 + std::abs(n));
  for (int u : base.slots) {
    const int target = u + n;
    if (target >= base.tail) continue;
    if (std::binary_search(base.slots.begin(), base.slots.end(), target)) continue;
    SlotWindow w = base;
    const int s1 = erase_slot(w, u);
    const int s2 = insert_slot(w, target);
    out.push_back({s1 * s2, state_of(w)});
  }
  return out;
}

FockVector apply_boson(int n, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    for (const auto& t : boson_terms(n, s)) out.add(t.state, t.sign > 0 ? c : Rational(-c));
  }
  return out;
}

namespace {

void partitions_rec(int left, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(left, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(left - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BasisState> basis_states(int charge, int max_energy) {
  std::vector<BasisState> out;
  for (int e = 0; e <= max_energy; ++e) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_rec(e, e, cur, parts);
    for (auto& p : parts) out.push_back(BasisState{charge, std::move(p)});
  }
  return out;
}

BasisState l_vacuum(int l) { return BasisState{l, {}}; }

FockVector chevalley_apply(ChevalleyGen gen, int i, const FockVector& v) {
  const auto psi = [](int k, const FockVector& x) {
    return apply_fermion(FermionKind::Psi, HalfIndex::from_djkm_psi(k), x);
  };
  const auto psi_star = [](int k, const FockVector& x) {
    return apply_fermion(FermionKind::PsiStar, HalfIndex::from_djkm_psi_star(k), x);
  };
  switch (gen) {
    case ChevalleyGen::E:
      return psi(i - 1, psi_star(i, v));
    case ChevalleyGen::F:
      return psi(i, psi_star(i - 1, v));
    case ChevalleyGen::H:
      return psi(i - 1, psi_star(i - 1, v)) - psi(i, psi_star(i, v));
  }
  throw_internal("chevalley_apply: unknown generator");
}

ExtFockVector apply_neutral(int m, bool hatted, const ExtFockVector& v) {
  ExtFockVector created = apply_fermion(FermionKind::Psi, HalfIndex::from_djkm_psi(m), v);
  ExtFockVector annihilated = apply_fermion(FermionKind::PsiStar, HalfIndex::from_djkm_psi_star(-m), v);
  const ExtRational sign = (m % 2 == 0) ? ExtRational(1) : ExtRational(-1);
  if (!hatted) {
    created += sign * annihilated;
    return ExtRational::inv_sqrt2() * created;
  }
  created -= sign * annihilated;
  return (ExtRational::imaginary_unit() * ExtRational::inv_sqrt2()) * created;
}

ExtFockVector to_ext(const FockVector& v) {
  ExtFockVector out;
  for (const auto& [s, c] : v.terms()) out.add(s, ExtRational(c));
  return out;
}

}  // namespace kpferm
