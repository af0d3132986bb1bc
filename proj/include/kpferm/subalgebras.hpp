#pragma once

// Involutions of A-infinity (sigma_l, the two-component sigma, kappa on
// neutral fermions), fixed-point predicates, the B'-infinity -> B-infinity
// map and the reductions to affine Kac-Moody subalgebras.

#include "kpferm/quad.hpp"
#include "kpferm/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>

namespace kpferm {

struct InvolutionRule {
  enum class Kind { SigmaL, TwoComponent, Kappa };
  Kind kind = Kind::SigmaL;
  int l = 0;  // SigmaL only

  static InvolutionRule sigma(int l) { return {Kind::SigmaL, l}; }
  static InvolutionRule two_component() { return {Kind::TwoComponent, 0}; }
  static InvolutionRule kappa() { return {Kind::Kappa, 0}; }
};

/// Image of an a-block element. The normal-ordering constants produced by the
/// substitution are collected into the central term.
QuadElement involution_image(const QuadElement& x, const InvolutionRule& rule);

/// Compares a-blocks only.
bool is_fixed(const QuadElement& x, const InvolutionRule& rule);

/// Anti-band condition |j + k| <= band on all three blocks.
bool is_d_prime(const QuadElement& x);

/// sum a_{ij} :phi_i phi_j: over (possibly hatted) neutral fermions, plus a constant.
struct NeutralQuadElement {
  using Key = std::tuple<int, int, bool, bool>;  // i, j, hat_i, hat_j

  int band = 0;
  std::map<Key, Rational> entries;
  Rational central;

  void add(int i, int j, bool hat_i, bool hat_j, const Rational& v);
  bool has_hats() const;
  friend bool operator==(const NeutralQuadElement&, const NeutralQuadElement&) = default;
};

/// kappa: phi_m -> hat phi_m, hat phi_m -> -phi_m.
NeutralQuadElement kappa(const NeutralQuadElement& x);

/// X = real + i * imag in charged fermions.
struct ChargedPair {
  QuadElement real;
  QuadElement imag;
};
ChargedPair neutral_to_charged(const NeutralQuadElement& x);

/// X + kappa(X) for X in B'-infinity (unhatted monomials only). The result is
/// checked to be a pure a-block, sigma_0-fixed element.
QuadElement b_prime_to_b(const NeutralQuadElement& x);

/// Conditions (i) and (ii) of l-reduction.
bool is_reduced(const QuadElement& x, int l);
/// Conditions (i)' and (ii)' for psi^(1)_n = psi_2n, psi^(2)_n = psi_{2n+1}.
bool is_bireduced(const QuadElement& x, int l1, int l2);

/// Labels such as "A_inf", "B_inf", "A^(1)_2", "D^(2)_3[B]", "C^(1)_2",
/// "D^(1)_2[s=1]", "A^(2)_3[s=0]".
std::set<std::string> classify(const QuadElement& x, int l);

}  // namespace kpferm
