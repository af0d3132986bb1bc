#pragma once

// Semi-infinite wedge space: basis states, charged fermions, bosonic modes,
// vacuum expectation values and the Chevalley action of A-infinity.
//
// Exponent conventions. A basis state is z^{a_1} ^ z^{a_2} ^ ... with
// a_1 < a_2 < ... half-integers. Internally every exponent a is stored as the
// integer "slot" s = a - 1/2, so the vacuum occupies slots 0, 1, 2, ...
//
// psi_r inserts z^r (slot r - 1/2); psi*_r removes z^{-r} (slot -r - 1/2).
// DJKM labels: psi_i = psi_{-i-1/2} fills slot -i-1, psi*_i = psi*_{i+1/2}
// empties slot -i-1.

#include "kpferm/error.hpp"
#include "kpferm/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kpferm {

/// Half-integer index r, stored as 2r (always odd).
class HalfIndex {
 public:
  static HalfIndex from_twice(int twice_r) {
    if (twice_r % 2 == 0) throw_invalid("HalfIndex: 2r must be odd, got " + std::to_string(twice_r));
    return HalfIndex(twice_r);
  }
  /// DJKM psi_i corresponds to psi_{-i-1/2}.
  static HalfIndex from_djkm_psi(int i) { return HalfIndex(-2 * i - 1); }
  /// DJKM psi*_i corresponds to psi*_{i+1/2}.
  static HalfIndex from_djkm_psi_star(int i) { return HalfIndex(2 * i + 1); }

  int twice() const noexcept { return twice_r_; }
  int to_djkm_psi() const noexcept { return (-twice_r_ - 1) / 2; }
  int to_djkm_psi_star() const noexcept { return (twice_r_ - 1) / 2; }
  /// Slot of the exponent r, i.e. r - 1/2.
  int slot() const noexcept { return (twice_r_ - 1) / 2; }
  HalfIndex negated() const noexcept { return HalfIndex(-twice_r_); }

  friend auto operator<=>(const HalfIndex&, const HalfIndex&) = default;

  std::string to_string() const;

 private:
  explicit HalfIndex(int twice_r) : twice_r_(twice_r) {}
  int twice_r_;
};

/// Charge plus partition; decodes to a_k = k - 1/2 - charge - lambda_k.
struct BasisState {
  int charge = 0;
  std::vector<int> partition;

  static BasisState vacuum() { return {}; }
  /// Validates the partition (positive, weakly decreasing).
  static BasisState make(int charge, std::vector<int> partition);

  int energy() const noexcept;

  friend auto operator<=>(const BasisState&, const BasisState&) = default;

  std::string to_string() const;
};

struct SignedState {
  int sign = 1;
  BasisState state;
};

// Wedge primitives on single basis states. nullopt means the result is zero.
std::optional<SignedState> fill_slot(const BasisState& s, int slot);
std::optional<SignedState> empty_slot(const BasisState& s, int slot);
/// Empties `from` then fills `to` (the action of psi_{to+1/2} psi*_{-from-1/2}).
std::optional<SignedState> move_slot(const BasisState& s, int from, int to);
bool slot_occupied(const BasisState& s, int slot);
/// Lowest occupied slot and first slot of the all-occupied tail.
std::pair<int, int> occupied_window(const BasisState& s);

/// Finite linear combination of basis states; zero coefficients are never stored.
template <class Scalar>
class BasicFockVector {
 public:
  using map_type = std::map<BasisState, Scalar>;

  BasicFockVector() = default;
  explicit BasicFockVector(const BasisState& s, Scalar c = Scalar(1)) { add(s, c); }

  void add(const BasisState& s, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  Scalar coefficient(const BasisState& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Scalar() : it->second;
  }

  const map_type& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero_vector() const noexcept { return terms_.empty(); }

  BasicFockVector& operator+=(const BasicFockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
  }
  BasicFockVector& operator-=(const BasicFockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, Scalar() - c);
    return *this;
  }
  BasicFockVector& operator*=(const Scalar& k) {
    if (is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto& [s, c] : terms_) c *= k;
    return *this;
  }

  friend BasicFockVector operator+(BasicFockVector a, const BasicFockVector& b) { return a += b; }
  friend BasicFockVector operator-(BasicFockVector a, const BasicFockVector& b) { return a -= b; }
  friend BasicFockVector operator*(const Scalar& k, BasicFockVector v) { return v *= k; }
  friend bool operator==(const BasicFockVector& a, const BasicFockVector& b) {
    return a.terms_ == b.terms_;
  }

 private:
  map_type terms_;
};

using FockVector = BasicFockVector<Rational>;
using ExtFockVector = BasicFockVector<ExtRational>;

/// Applies a state-level map that returns at most one signed state.
template <class Scalar, class F>
BasicFockVector<Scalar> map_states(const BasicFockVector<Scalar>& v, F&& f) {
  BasicFockVector<Scalar> out;
  for (const auto& [s, c] : v.terms()) {
    if (auto r = f(s)) out.add(r->state, r->sign > 0 ? c : Scalar(Scalar() - c));
  }
  return out;
}

/// Canonical form of factors[0] ^ factors[1] ^ ... ^ z^{tail} ^ z^{tail+1} ^ ...
/// Zero when a factor repeats; throws when a factor lies inside the tail.
FockVector normalize_wedge(const std::vector<HalfIndex>& factors, HalfIndex tail_start,
                           const Rational& coeff = Rational(1));

enum class FermionKind { Psi, PsiStar };

std::optional<SignedState> apply_fermion(FermionKind kind, HalfIndex r, const BasisState& s);

template <class Scalar>
BasicFockVector<Scalar> apply_fermion(FermionKind kind, HalfIndex r,
                                      const BasicFockVector<Scalar>& v) {
  return map_states(v, [&](const BasisState& s) { return apply_fermion(kind, r, s); });
}

/// Coefficient of the vacuum.
template <class Scalar>
Scalar vev(const BasicFockVector<Scalar>& v) {
  return v.coefficient(BasisState::vacuum());
}

/// alpha_n = sum_r :psi_r psi*_{n-r}:, n != 0. Moves one particle up by n slots.
FockVector apply_boson(int n, const FockVector& v);
std::vector<SignedState> boson_terms(int n, const BasisState& s);

inline int charge_of(const BasisState& s) noexcept { return s.charge; }

/// All basis states of the given charge with energy <= max_energy, by energy
/// then partition.
std::vector<BasisState> basis_states(int charge, int max_energy);

/// The highest weight vector |l> of F^(l) (charge l, empty partition).
BasisState l_vacuum(int l);

enum class ChevalleyGen { E, F, H };

/// e_i = psi_{i-1} psi*_i, f_i = psi_i psi*_{i-1},
/// h_i = psi_{i-1} psi*_{i-1} - psi_i psi*_i (plain products, DJKM labels).
FockVector chevalley_apply(ChevalleyGen gen, int i, const FockVector& v);

/// phi_m = (psi_m + (-1)^m psi*_{-m}) / sqrt2,
/// hat phi_m = i (psi_m - (-1)^m psi*_{-m}) / sqrt2 (DJKM labels).
ExtFockVector apply_neutral(int m, bool hatted, const ExtFockVector& v);

ExtFockVector to_ext(const FockVector& v);

}  // namespace kpferm
