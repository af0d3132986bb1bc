#pragma once

// Property checks shared by `selftest` (reduced sizes) and the acceptance
// suite (full sizes). Each compares two independent computations exactly.

#include "kpferm/fock.hpp"
#include "kpferm/sampling.hpp"

#include <functional>
#include <string>
#include <vector>

namespace kpferm {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe);
  bool passed() const { return failures == 0 && checks > 0; }
  void merge(const CheckResult& o);
};

/// alpha_n on one basis state (n != 0).
using BosonFn = std::function<std::vector<SignedState>(int, const BasisState&)>;

BosonFn standard_boson();
/// alpha_n with the sign flipped for odd n: a deliberately broken convention.
BosonFn sign_flipped_boson();

FockVector apply_boson_with(const BosonFn& boson, int n, const FockVector& v);

/// Bogoliubov coefficients = signed Plücker minors on all charge-0 states up to `energy`.
CheckResult check_plucker_bogoliubov(Rng& rng, int samples, int box, int energy);
/// <vac| exp(sum T_n alpha_n) |lambda> = s_lambda for all |lambda| <= max_size.
CheckResult check_schur_pinning(int max_size, const BosonFn& boson);
/// Direct and Schur paths of the tau function.
CheckResult check_tau_paths(Rng& rng, int samples, int box, int weight, const BosonFn& boson);
/// Closed n-point formula against derivatives of log tau.
CheckResult check_npoint(Rng& rng, int samples, int box, const std::vector<int>& ns, int weight,
                         const BosonFn& boson);
/// Two-point cells: coordinate path against the fermionic path.
CheckResult check_two_point(Rng& rng, int samples, int box, int max_cell);
/// Canonical anticommutation relations for |2r|, |2s| <= max_twice.
CheckResult check_car(int max_twice, int energy, int max_charge);
/// [alpha_m, alpha_n] = m delta_{m,-n} for |m|, |n| <= max_mode.
CheckResult check_heisenberg(int max_mode, int energy, int max_charge, const BosonFn& boson);
/// [r(X), r(Y)] = r([X, Y]) with the cocycle, for finite and periodic X, Y.
CheckResult check_representation(Rng& rng, int samples, int band, int energy);
/// Pair-count cocycle of embedded loops = residue cocycle.
CheckResult check_cocycle_equivalence(Rng& rng, int samples, int max_size, int max_deg);
/// D^(2) identities and closure of fixed-point sets under the bracket.
CheckResult check_subalgebra_identities(Rng& rng, int samples);
/// e_i|l> = 0 and h_i|l> = delta_il |l> for |i|, |l| <= range.
CheckResult check_highest_weight(int range);
/// b_prime_to_b output, neutral CAR and the charged expansion of :phi phi:.
CheckResult check_neutral(Rng& rng, int samples, int energy);
/// Hand-computed puncture residuals and linearity.
CheckResult check_puncture_examples(Rng& rng, int samples);

}  // namespace kpferm
