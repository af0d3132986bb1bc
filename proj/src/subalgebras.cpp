#include "kpferm/subalgebras.hpp"

#include "kpferm/error.hpp"

#include <cstdlib>

namespace kpferm {

namespace {

int sign_pow(int m) { return (m % 2 == 0) ? 1 : -1; }

// psi_m -> eps(m) psi*_{pi(m)}, psi*_m -> eps(m) psi_{pi(m)}.
int rule_pi(const InvolutionRule& r, int m) {
  if (r.kind == InvolutionRule::Kind::SigmaL) return r.l - m;
  const int n = floor_div(m, 2);
  return -2 * n + (m - 2 * n);
}

int rule_eps(const InvolutionRule& r, int m) {
  if (r.kind == InvolutionRule::Kind::SigmaL) return sign_pow(r.l - m);
  return sign_pow(floor_div(m, 2));
}

// Constant left over when :psi_i psi*_i: is substituted and re-ordered.
int diagonal_shift(const InvolutionRule& r, int i) {
  return 1 - (rule_pi(r, i) <= -1 ? 1 : 0) - (i <= -1 ? 1 : 0);
}

void require_plain(const QuadElement& x, const char* what) {
  if (x.extended()) throw_invalid(std::string(what) + ": element has b/c blocks; only a-block elements are supported");
}

}  // namespace

QuadElement involution_image(const QuadElement& x, const InvolutionRule& rule) {
  if (rule.kind == InvolutionRule::Kind::Kappa) {
    throw_invalid("involution_image: kappa acts on neutral elements (use kappa())");
  }
  require_plain(x, "involution_image");
  const bool two = rule.kind == InvolutionRule::Kind::TwoComponent;
  const int band = x.a.band() + (two ? 2 : 0);
  QuadElement out;
  out.central = x.central;
  if (!x.periodic()) {
    out = QuadElement(std::max(band, x.band));
    out.central = x.central;
    for (const auto& [key, v] : x.a.generators()) {
      const auto [i, j] = key;
      out.add_a(rule_pi(rule, j), rule_pi(rule, i), Rational(-rule_eps(rule, i) * rule_eps(rule, j)) * v);
      if (i == j) out.central += Rational(diagonal_shift(rule, i)) * v;
    }
    return out;
  }
  const int p = *x.a.period();
  const int period = two ? lcm_int(p, 2) : p;
  out = QuadElement(std::max(band, x.band), period);
  out.central = x.central;
  const BandMatrix gens = period == p ? x.a : x.a.with_period(period);
  for (const auto& [key, v] : gens.generators()) {
    const auto [i, j] = key;
    out.add_a(rule_pi(rule, j), rule_pi(rule, i), Rational(-rule_eps(rule, i) * rule_eps(rule, j)) * v);
  }
  // diagonal_shift vanishes outside a window around 0 (and around l).
  const int reach = std::abs(rule.l) + 4 + 2 * period;
  for (int i = -reach; i <= reach; ++i) {
    const int d = diagonal_shift(rule, i);
    if (d != 0) out.central += Rational(d) * x.a.at(i, i);
  }
  return out;
}

bool is_fixed(const QuadElement& x, const InvolutionRule& rule) {
  if (x.a.is_zero() && !x.extended()) return true;
  return involution_image(x, rule).a == x.a;
}

bool is_d_prime(const QuadElement& x) {
  if (x.periodic() && !x.a.is_zero()) return false;
  for (const auto& [key, v] : x.a.generators()) {
    if (std::abs(key.first + key.second) > x.band) return false;
  }
  for (const auto* block : {&x.b, &x.c}) {
    for (const auto& [key, v] : *block) {
      if (std::abs(key.first + key.second) > x.band) return false;
    }
  }
  return true;
}

void NeutralQuadElement::add(int i, int j, bool hat_i, bool hat_j, const Rational& v) {
  if (std::abs(i + j) > band) {
    throw_invalid("NeutralQuadElement: entry (" + std::to_string(i) + "," + std::to_string(j) +
                  ") violates |i + j| <= " + std::to_string(band));
  }
  if (is_zero(v)) return;
  auto [it, inserted] = entries.try_emplace({i, j, hat_i, hat_j}, v);
  if (!inserted) {
    it->second += v;
    if (is_zero(it->second)) entries.erase(it);
  }
}

bool NeutralQuadElement::has_hats() const {
  for (const auto& [key, v] : entries) {
    if (std::get<2>(key) || std::get<3>(key)) return true;
  }
  return false;
}

NeutralQuadElement kappa(const NeutralQuadElement& x) {
  NeutralQuadElement out;
  out.band = x.band;
  out.central = x.central;
  for (const auto& [key, v] : x.entries) {
    const auto [i, j, hi, hj] = key;
    // Each hat -> plain step contributes a factor -1.
    const int sign = (hi ? -1 : 1) * (hj ? -1 : 1);
    out.add(i, j, !hi, !hj, Rational(sign) * v);
  }
  return out;
}

ChargedPair neutral_to_charged(const NeutralQuadElement& x) {
  // phi^(h)_m = c_h (psi_m + eta_h (-1)^m psi*_{-m}) / sqrt2, c_0 = 1, c_1 = i,
  // eta_0 = 1, eta_1 = -1. The normal-ordering constants cancel: every
  // charged term below is itself normal ordered.
  ChargedPair out{QuadElement(x.band), QuadElement(x.band)};
  out.real.central = x.central;
  for (const auto& [key, v] : x.entries) {
    const auto [i, j, hi, hj] = key;
    QuadElement& target = (hi != hj) ? out.imag : out.real;
    const Rational w = (hi && hj) ? Rational(-v / 2) : Rational(v / 2);
    const int ei = (hi ? -1 : 1) * sign_pow(i);
    const int ej = (hj ? -1 : 1) * sign_pow(j);
    target.add_b(i, j, w);
    target.add_a(i, -j, Rational(ej) * w);
    target.add_a(j, -i, Rational(-ei) * w);
    target.add_c(-i, -j, Rational(ei * ej) * w);
  }
  return out;
}

QuadElement b_prime_to_b(const NeutralQuadElement& x) {
  if (x.has_hats()) throw_invalid("b_prime_to_b: B'-infinity elements contain unhatted :phi_i phi_j: only");
  const ChargedPair p = neutral_to_charged(x);
  const ChargedPair q = neutral_to_charged(kappa(x));
  if (!p.imag.a.is_zero() || !q.imag.a.is_zero() || p.imag.extended() || q.imag.extended()) {
    throw_internal("b_prime_to_b: imaginary part survived");
  }
  QuadElement out(x.band);
  out.a = p.real.a + q.real.a;
  out.central = p.real.central + q.real.central;
  for (const auto* src : {&p.real, &q.real}) {
    for (const auto& [key, v] : src->b) out.add_b(key.first, key.second, v);
    for (const auto& [key, v] : src->c) out.add_c(key.first, key.second, v);
  }
  if (out.extended()) throw_internal("b_prime_to_b: psi psi or psi* psi* terms survived");
  if (!is_fixed(out, InvolutionRule::sigma(0))) throw_internal("b_prime_to_b: image is not sigma_0-fixed");
  return out;
}

namespace {

// Zero elements pass every reduction; non-zero ones must be periodic a-block elements.
bool check_reducible(const QuadElement& x, const char* what) {
  require_plain(x, what);
  if (x.a.is_zero()) return false;
  if (!x.periodic()) {
    throw_invalid(std::string(what) + ": a non-zero element with finite support cannot satisfy the periodicity condition");
  }
  return true;
}

}  // namespace

bool is_reduced(const QuadElement& x, int l) {
  if (l < 1) throw_invalid("is_reduced: l must be positive");
  if (!check_reducible(x, "is_reduced")) return true;
  const int period = lcm_int(*x.a.period(), l);
  const BandMatrix gens = x.a.with_period(period);
  for (const auto& [key, v] : gens.generators()) {
    if (x.a.at(key.first + l, key.second + l) != v) return false;
  }
  const int band = x.a.band();
  for (int j = -(band / l) - 1; j <= band / l + 1; ++j) {
    Rational trace = 0;
    for (int i = 0; i < l; ++i) trace += x.a.at(i, i + j * l);
    if (!is_zero(trace)) return false;
  }
  return true;
}

bool is_bireduced(const QuadElement& x, int l1, int l2) {
  if (l1 < 1 || l2 < 1) throw_invalid("is_bireduced: l1 and l2 must be positive");
  if (!check_reducible(x, "is_bireduced")) return true;
  // Component of index r: psi_r = psi^(1)_{r/2} for even r, psi^(2)_{(r-1)/2} for odd r.
  const auto step = [&](int r) { return 2 * ((r % 2 == 0) ? l1 : l2); };
  const int period = lcm_int(*x.a.period(), 2);
  const BandMatrix gens = x.a.with_period(period);
  for (const auto& [key, v] : gens.generators()) {
    const auto [r, c] = key;
    if (x.a.at(r + step(r), c + step(c)) != v) return false;
    if (x.a.at(r - step(r), c - step(c)) != v) return false;
  }
  const int band = x.a.band();
  for (int j = -band - 1; j <= band + 1; ++j) {
    Rational trace = 0;
    for (int i = 0; i < l1; ++i) trace += x.a.at(2 * i, 2 * (i + j * l1));
    for (int i = 0; i < l2; ++i) trace += x.a.at(2 * i + 1, 2 * (i + j * l2) + 1);
    if (!is_zero(trace)) return false;
  }
  return true;
}

std::set<std::string> classify(const QuadElement& x, int l) {
  if (l < 1) throw_invalid("classify: l must be positive");
  require_plain(x, "classify");
  if (!x.a.is_zero() && !x.periodic()) {
    throw_invalid("classify: a non-zero element with finite support is not periodic and cannot be reduced");
  }
  const auto ls = std::to_string(l);
  std::set<std::string> labels{"A_inf"};
  const bool b = is_fixed(x, InvolutionRule::sigma(0));
  const bool c = is_fixed(x, InvolutionRule::sigma(1));
  const bool d = is_fixed(x, InvolutionRule::two_component());
  if (b) labels.insert("B_inf");
  if (c) labels.insert("C_inf");
  if (d) labels.insert("D_inf");
  if (is_reduced(x, l + 1)) labels.insert("A^(1)_" + ls);

  const bool red2 = is_reduced(x, 2 * (l + 1));
  // sigma_0 and sigma_1 preserve reduction, so the B and C realizations are images of each other's data.
  if (red2 && (!is_reduced(involution_image(x, InvolutionRule::sigma(0)), 2 * (l + 1)) ||
               !is_reduced(involution_image(x, InvolutionRule::sigma(1)), 2 * (l + 1)))) {
    throw_internal("classify: involution image of a 2(l+1)-reduced element is not reduced");
  }
  const std::string d2 = "D^(2)_" + std::to_string(l + 1);
  if (b && red2) labels.insert(d2 + "[B]");
  if (c && red2) labels.insert(d2 + "[C]");

  if (c && is_reduced(x, 2 * l)) labels.insert("C^(1)_" + ls);
  if (d) {
    for (int s = 1; s <= l - 1; ++s) {
      if (is_bireduced(x, 2 * l - 2 * s, 2 * s)) labels.insert("D^(1)_" + ls + "[s=" + std::to_string(s) + "]");
    }
    for (int s = 0; s <= l - 1; ++s) {
      if (is_bireduced(x, 2 * l - 2 * s - 1, 2 * s + 1)) {
        labels.insert("A^(2)_" + std::to_string(2 * l - 1) + "[s=" + std::to_string(s) + "]");
      }
    }
  }
  return labels;
}

}  // namespace kpferm
