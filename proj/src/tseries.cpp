#include "kpferm/tseries.hpp"

#include "kpferm/error.hpp"

#include <algorithm>

namespace kpferm {

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (std::size_t k = 0; k < m.size(); ++k) w += static_cast<int>(k + 1) * m[k];
  return w;
}

Monomial monomial_var(int n, int power) {
  if (n < 1) throw_invalid("T-variable index must be positive");
  if (power == 0) return {};
  Monomial m(static_cast<std::size_t>(n), 0);
  m.back() = power;
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = monomial_weight(a);
  const int wb = monomial_weight(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

Monomial product(const Monomial& a, const Monomial& b) {
  Monomial m(std::max(a.size(), b.size()), 0);
  for (std::size_t k = 0; k < a.size(); ++k) m[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) m[k] += b[k];
  return m;
}

}  // namespace

TSeries::TSeries(int weight_cut) : cut_(weight_cut) {
  if (weight_cut < 0) throw_invalid("weight cut must be non-negative");
}

TSeries TSeries::constant(int weight_cut, const Rational& c) {
  TSeries s(weight_cut);
  s.add({}, c);
  return s;
}

TSeries TSeries::variable(int weight_cut, int n) {
  TSeries s(weight_cut);
  s.add(monomial_var(n), 1);
  return s;
}

void TSeries::add(const Monomial& m, const Rational& c) {
  if (kpferm::is_zero(c) || monomial_weight(m) > cut_) return;
  Monomial key = m;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (kpferm::is_zero(it->second)) terms_.erase(it);
  }
}

Rational TSeries::coefficient(const Monomial& m) const {
  Monomial key = m;
  while (!key.empty() && key.back() == 0) key.pop_back();
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

TSeries TSeries::truncated(int cut) const {
  if (cut > cut_) throw_invalid("cannot raise the weight cut of a truncated series");
  TSeries out(cut);
  for (const auto& [m, c] : terms_) out.add(m, c);
  return out;
}

TSeries TSeries::homogeneous(int w) const {
  TSeries out(cut_);
  for (const auto& [m, c] : terms_) {
    if (monomial_weight(m) == w) out.terms_.emplace(m, c);
  }
  return out;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  cut_ = std::min(cut_, o.cut_);
  *this = truncated(cut_);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  cut_ = std::min(cut_, o.cut_);
  *this = truncated(cut_);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

TSeries& TSeries::operator*=(const Rational& k) {
  if (kpferm::is_zero(k)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= k;
  return *this;
}

TSeries& TSeries::operator*=(const TSeries& o) {
  TSeries out(std::min(cut_, o.cut_));
  for (const auto& [ma, ca] : terms_) {
    const int wa = monomial_weight(ma);
    for (const auto& [mb, cb] : o.terms_) {
      if (wa + monomial_weight(mb) > out.cut_) break;  // o is sorted by weight
      out.add(product(ma, mb), ca * cb);
    }
  }
  return *this = std::move(out);
}

TSeries TSeries::derivative(int n) const {
  if (n < 1) throw_invalid("derivative: variable index must be positive");
  if (n > cut_) throw_invalid("derivative: T" + std::to_string(n) + " exceeds the weight cut " + std::to_string(cut_));
  TSeries out(cut_ - n);
  const auto k = static_cast<std::size_t>(n - 1);
  for (const auto& [m, c] : terms_) {
    if (k >= m.size() || m[k] == 0) continue;
    Monomial d = m;
    d[k] -= 1;
    out.add(d, c * m[k]);
  }
  return out;
}

std::string TSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "T" + std::to_string(k + 1);
      if (m[k] > 1) mono += "^" + std::to_string(m[k]);
    }
    Rational mag = abs(c);
    std::string term;
    if (mono.empty()) {
      term = format_rational(mag);
    } else if (mag == 1) {
      term = mono;
    } else {
      term = format_rational(mag) + "*" + mono;
    }
    if (out.empty()) {
      out = (sgn(c) < 0 ? "-" : "") + term;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + term;
    }
  }
  return out;
}

// Both use the Euler operator D = sum n T_n d/dT_n, which multiplies weight-w
// terms by w: D exp(f) = exp(f) D f.
TSeries series_exp(const TSeries& f) {
  if (!is_zero(f.constant_term())) throw_invalid("series_exp: constant term must be zero");
  const int cut = f.weight_cut();
  std::vector<TSeries> fw;
  for (int w = 0; w <= cut; ++w) fw.push_back(f.homogeneous(w));
  std::vector<TSeries> g{TSeries::constant(cut, 1)};
  for (int w = 1; w <= cut; ++w) {
    TSeries gw(cut);
    for (int k = 1; k <= w; ++k) {
      if (fw[static_cast<std::size_t>(k)].is_zero()) continue;
      gw += Rational(k) * (fw[static_cast<std::size_t>(k)] * g[static_cast<std::size_t>(w - k)]);
    }
    gw *= Rational(1, w);
    g.push_back(std::move(gw));
  }
  TSeries out(cut);
  for (const auto& gw : g) out += gw;
  return out;
}

TSeries series_log(const TSeries& g) {
  if (g.constant_term() != 1) throw_invalid("series_log: constant term must be 1");
  const int cut = g.weight_cut();
  std::vector<TSeries> gw;
  for (int w = 0; w <= cut; ++w) gw.push_back(g.homogeneous(w));
  std::vector<TSeries> f{TSeries(cut)};
  for (int w = 1; w <= cut; ++w) {
    TSeries fw = Rational(w) * gw[static_cast<std::size_t>(w)];
    for (int k = 1; k < w; ++k) {
      if (f[static_cast<std::size_t>(k)].is_zero()) continue;
      fw -= Rational(k) * (f[static_cast<std::size_t>(k)] * gw[static_cast<std::size_t>(w - k)]);
    }
    fw *= Rational(1, w);
    f.push_back(std::move(fw));
  }
  TSeries out(cut);
  for (const auto& fk : f) out += fk;
  return out;
}

}  // namespace kpferm
