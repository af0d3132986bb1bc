#pragma once

// Tau functions <vac| exp(sum T_n alpha_n) |U>, Schur functions, free energy,
// the puncture operator and the tau_B' squared = tau_B restriction check.

#include "kpferm/fock.hpp"
#include "kpferm/grassmannian.hpp"
#include "kpferm/tseries.hpp"

#include <map>
#include <vector>

namespace kpferm {

/// s_lambda in the variables T_n (power sums p_n = n T_n), via Jacobi-Trudi.
TSeries schur_poly(const std::vector<int>& partition, int weight_cut);

/// <vac| exp(sum_n T_n alpha_n) v, exact to weight_cut. `boson(n, s)` returns
/// the signed states of alpha_n applied to s (n > 0).
template <class Boson>
TSeries vacuum_projection(const FockVector& v, int weight_cut, Boson&& boson) {
  using Layer = std::map<BasisState, TSeries>;
  Layer cur;
  for (const auto& [s, c] : v.terms()) {
    if (s.charge != 0 || s.energy() > weight_cut) continue;
    cur.emplace(s, TSeries::constant(weight_cut, c));
  }
  // The alpha_n commute, so exp(sum T_n alpha_n) = prod_n exp(T_n alpha_n).
  for (int n = 1; n <= weight_cut; ++n) {
    const TSeries tn = TSeries::variable(weight_cut, n);
    Layer next = cur;
    Layer layer = std::move(cur);
    for (int k = 1; !layer.empty(); ++k) {
      Layer moved;
      for (const auto& [s, f] : layer) {
        if (s.energy() < n) continue;
        const TSeries step = Rational(1, k) * (f * tn);
        if (step.is_zero()) continue;
        for (const auto& t : boson(n, s)) {
          auto [it, inserted] = moved.try_emplace(t.state, weight_cut);
          it->second += t.sign > 0 ? step : Rational(-1) * step;
        }
      }
      for (auto it = moved.begin(); it != moved.end();) {
        if (it->second.is_zero()) {
          it = moved.erase(it);
          continue;
        }
        auto [jt, inserted] = next.try_emplace(it->first, weight_cut);
        jt->second += it->second;
        ++it;
      }
      layer = std::move(moved);
    }
    cur = std::move(next);
  }
  auto it = cur.find(BasisState::vacuum());
  return it == cur.end() ? TSeries(weight_cut) : it->second;
}

TSeries vacuum_projection(const FockVector& v, int weight_cut);

/// tau_U(T) via the Fock space (direct path).
TSeries tau_series(const AffineCoords& a, int weight_cut);
/// sum_lambda c_lambda(A) s_lambda(T) with c_lambda read from exp(A)|vac>.
TSeries tau_series_schur(const AffineCoords& a, int weight_cut);

/// log tau; requires constant term 1.
TSeries free_energy(const TSeries& tau);

struct PunctureData {
  int h = 1;
  std::vector<int> e_plus;
  std::vector<int> e_plus0;

  void validate() const;
  friend bool operator==(const PunctureData&, const PunctureData&) = default;
};

/// The puncture operator applied to tau. The result is cut at the largest
/// weight where it is exact: W - 1 when 1 is in E_+, else W.
TSeries check_puncture(const TSeries& tau, const PunctureData& p);

/// True iff tau_bp^2 equals tau_b with T_2 = T_4 = ... = 0, within the common cut.
bool check_bprime_square(const TSeries& tau_b, const TSeries& tau_bp);

}  // namespace kpferm
