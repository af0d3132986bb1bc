#include "kpferm/tau.hpp"

#include "kpferm/error.hpp"

#include <algorithm>
#include <set>

namespace kpferm {

namespace {

std::vector<int> conjugate(const std::vector<int>& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return out;
  for (int j = 1; j <= lambda.front(); ++j) {
    int c = 0;
    for (int p : lambda) c += p >= j ? 1 : 0;
    out.push_back(c);
  }
  return out;
}

// det of a square matrix of series by Laplace expansion over row prefixes:
// d[mask] = determinant of rows 0..|mask|-1 restricted to the columns in mask.
TSeries series_det(const std::vector<std::vector<TSeries>>& m, int cut) {
  const std::size_t n = m.size();
  std::vector<TSeries> d(std::size_t{1} << n, TSeries(cut));
  d[0] = TSeries::constant(cut, 1);
  for (std::size_t mask = 0; mask + 1 < d.size(); ++mask) {
    if (d[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
    int above = 0;  // columns in mask to the right of col
    for (std::size_t col = n; col-- > 0;) {
      if (mask & (std::size_t{1} << col)) {
        ++above;
        continue;
      }
      if (m[row][col].is_zero()) continue;
      TSeries t = d[mask] * m[row][col];
      if (above % 2 != 0) t *= Rational(-1);
      d[mask | (std::size_t{1} << col)] += t;
    }
  }
  return d.back();
}

}  // namespace

TSeries schur_poly(const std::vector<int>& partition, int weight_cut) {
  const BasisState s = BasisState::make(0, partition);
  if (s.energy() > weight_cut) throw_invalid("schur_poly: |lambda| exceeds the weight cut");
  // Use the shorter of lambda and its conjugate: h-version for rows, e-version for columns.
  std::vector<int> rows = partition;
  bool dual = false;
  if (!partition.empty() && partition.front() < static_cast<int>(partition.size())) {
    rows = conjugate(partition);
    dual = true;
  }
  TSeries gen(weight_cut);
  for (int n = 1; n <= weight_cut; ++n) gen.add(monomial_var(n), (dual && n % 2 == 0) ? -1 : 1);
  const TSeries full = series_exp(gen);
  const std::size_t l = rows.size();
  std::vector<std::vector<TSeries>> m(l, std::vector<TSeries>(l, TSeries(weight_cut)));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      const int k = rows[i] - static_cast<int>(i) + static_cast<int>(j);
      if (k >= 0) m[i][j] = full.homogeneous(k);
    }
  return series_det(m, weight_cut);
}

TSeries vacuum_projection(const FockVector& v, int weight_cut) {
  return vacuum_projection(v, weight_cut, [](int n, const BasisState& s) { return boson_terms(n, s); });
}

TSeries tau_series(const AffineCoords& a, int weight_cut) {
  return vacuum_projection(bogoliubov_state(a, weight_cut), weight_cut);
}

TSeries tau_series_schur(const AffineCoords& a, int weight_cut) {
  TSeries out(weight_cut);
  const FockVector u = bogoliubov_state(a, weight_cut);
  for (const auto& [s, c] : u.terms()) out += c * schur_poly(s.partition, weight_cut);
  return out;
}

TSeries free_energy(const TSeries& tau) {
  if (tau.constant_term() != 1) throw_invalid("free_energy: tau must have constant term 1");
  return series_log(tau);
}

void PunctureData::validate() const {
  if (h < 1) throw_invalid("puncture: h must be a positive integer");
  std::set<int> seen(e_plus.begin(), e_plus.end());
  if (seen.size() != e_plus.size()) throw_invalid("puncture: E_plus entries must be distinct");
  if (std::any_of(e_plus.begin(), e_plus.end(), [](int i) { return i < 1; })) {
    throw_invalid("puncture: E_plus entries must be positive");
  }
  std::set<int> seen0(e_plus0.begin(), e_plus0.end());
  if (seen0.size() != e_plus0.size()) throw_invalid("puncture: E_plus0 entries must be distinct");
  if (std::any_of(e_plus0.begin(), e_plus0.end(), [](int i) { return i < 0; })) {
    throw_invalid("puncture: E_plus0 entries must be non-negative");
  }
}

TSeries check_puncture(const TSeries& tau, const PunctureData& p) {
  p.validate();
  const int w = tau.weight_cut();
  for (int i : p.e_plus) {
    if (i > w) throw_invalid("puncture: E_plus index " + std::to_string(i) + " exceeds the weight cut " + std::to_string(w));
  }
  const bool has_one = std::find(p.e_plus.begin(), p.e_plus.end(), 1) != p.e_plus.end();
  const int cut = has_one ? w - 1 : w;
  TSeries out(cut);
  for (int i : p.e_plus) {
    // Products are formed at cut w; truncation to `cut` happens on accumulation.
    TSeries d = tau.derivative(i);
    TSeries di(w);
    for (const auto& [m, c] : d.terms()) di.add(m, c);
    out += frac(i + p.h, p.h) * (TSeries::variable(w, i + p.h) * di);
    if (i == 1) out -= di;
  }
  TSeries quad(w);
  for (int i : p.e_plus0) {
    for (int j : p.e_plus0) {
      if (i + j != p.h || i == 0 || j == 0) continue;
      quad += Rational(i * j) * (TSeries::variable(w, i) * TSeries::variable(w, j));
    }
  }
  out += Rational(1, 2 * p.h) * (quad * tau);
  return out;
}

bool check_bprime_square(const TSeries& tau_b, const TSeries& tau_bp) {
  for (const auto& [m, c] : tau_bp.terms()) {
    for (std::size_t k = 1; k < m.size(); k += 2) {
      if (m[k] != 0) throw_invalid("check_bprime_square: tau_Bp must only involve odd T-variables");
    }
  }
  const int cut = std::min(tau_b.weight_cut(), tau_bp.weight_cut());
  const TSeries bp = tau_bp.truncated(cut);
  TSeries restricted(cut);
  for (const auto& [m, c] : tau_b.terms()) {
    bool odd_only = true;
    for (std::size_t k = 1; k < m.size(); k += 2) odd_only = odd_only && m[k] == 0;
    if (odd_only) restricted.add(m, c);
  }
  return bp * bp == restricted;
}

}  // namespace kpferm
