#include "kpferm/checks.hpp"

#include "kpferm/error.hpp"
#include "kpferm/npoint.hpp"
#include "kpferm/quad.hpp"
#include "kpferm/subalgebras.hpp"
#include "kpferm/tau.hpp"

#include <cstdlib>

namespace kpferm {

void CheckResult::expect(bool ok, const std::function<std::string()>& describe) {
  ++checks;
  if (ok) return;
  if (failures == 0) first_failure = describe();
  ++failures;
}

void CheckResult::merge(const CheckResult& o) {
  checks += o.checks;
  if (failures == 0 && o.failures > 0) first_failure = o.first_failure;
  failures += o.failures;
}

BosonFn standard_boson() {
  return [](int n, const BasisState& s) { return boson_terms(n, s); };
}

BosonFn sign_flipped_boson() {
  return [](int n, const BasisState& s) {
    auto terms = boson_terms(n, s);
    if (n % 2 != 0) {
      for (auto& t : terms) t.sign = -t.sign;
    }
    return terms;
  };
}

FockVector apply_boson_with(const BosonFn& boson, int n, const FockVector& v) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    for (const auto& t : boson(n, s)) out.add(t.state, t.sign > 0 ? c : Rational(-c));
  }
  return out;
}

namespace {

std::string show(const FockVector& v) {
  if (v.is_zero_vector()) return "0";
  std::string out;
  for (const auto& [s, c] : v.terms()) out += (out.empty() ? "" : " + ") + format_rational(c) + s.to_string();
  return out;
}

std::vector<BasisState> states_window(int max_charge, int energy) {
  std::vector<BasisState> out;
  for (int c = -max_charge; c <= max_charge; ++c) {
    for (auto& s : basis_states(c, energy)) out.push_back(std::move(s));
  }
  return out;
}

FockVector psi(int twice_r, const FockVector& v) {
  return apply_fermion(FermionKind::Psi, HalfIndex::from_twice(twice_r), v);
}

FockVector psi_star(int twice_r, const FockVector& v) {
  return apply_fermion(FermionKind::PsiStar, HalfIndex::from_twice(twice_r), v);
}

QuadElement symmetrized(const QuadElement& x, const InvolutionRule& rule) {
  QuadElement out = x;
  const QuadElement img = involution_image(x, rule);
  out.a += img.a;
  out.band = std::max(out.band, img.band);
  return out;
}

}  // namespace

CheckResult check_plucker_bogoliubov(Rng& rng, int samples, int box, int energy) {
  CheckResult r{"plucker_bogoliubov"};
  const auto states = basis_states(0, energy);
  for (int t = 0; t < samples; ++t) {
    const AffineCoords a = random_coords(rng, box, box);
    const FockVector u = bogoliubov_state(a, energy);
    for (const auto& s : states) {
      const auto [ms, ns] = frobenius_coordinates(s);
      const SignedState fs = frobenius_state(ms, ns);
      r.expect(fs.state == s, [&] { return "frobenius_state does not reproduce " + s.to_string(); });
      const Rational minor = Rational(fs.sign) * plucker_minor(a, ms, ns);
      r.expect(u.coefficient(s) == minor, [&] {
        return "sample " + std::to_string(t) + ", state " + s.to_string() + ": Bogoliubov " +
               format_rational(u.coefficient(s)) + " vs minor " + format_rational(minor);
      });
    }
  }
  return r;
}

CheckResult check_schur_pinning(int max_size, const BosonFn& boson) {
  CheckResult r{"boson_schur"};
  for (const auto& s : basis_states(0, max_size)) {
    const int w = s.energy();
    const TSeries lhs = vacuum_projection(FockVector(s), w, boson);
    const TSeries rhs = schur_poly(s.partition, w);
    r.expect(lhs == rhs, [&] { return s.to_string() + ": " + lhs.to_string() + " vs s_lambda = " + rhs.to_string(); });
  }
  return r;
}

CheckResult check_tau_paths(Rng& rng, int samples, int box, int weight, const BosonFn& boson) {
  CheckResult r{"tau_paths"};
  for (int t = 0; t < samples; ++t) {
    const AffineCoords a = random_coords(rng, box, box);
    const TSeries direct = vacuum_projection(bogoliubov_state(a, weight), weight, boson);
    const TSeries schur = tau_series_schur(a, weight);
    r.expect(direct == schur, [&] { return "sample " + std::to_string(t) + ": " + direct.to_string() + " vs " + schur.to_string(); });
    r.expect(direct.constant_term() == 1, [&] { return "tau constant term is not 1"; });
  }
  return r;
}

CheckResult check_npoint(Rng& rng, int samples, int box, const std::vector<int>& ns, int weight,
                         const BosonFn& boson) {
  CheckResult r{"npoint"};
  for (int t = 0; t < samples; ++t) {
    const AffineCoords a = random_coords(rng, box, box);
    const TSeries tau = vacuum_projection(bogoliubov_state(a, weight), weight, boson);
    if (tau.constant_term() != 1) {
      r.expect(false, [] { return "tau constant term is not 1"; });
      continue;
    }
    const TSeries f = free_energy(tau);
    for (int n : ns) {
      const NPointTable formula = npoint_formula(a, n, weight);
      const NPointTable oracle = npoint_from_series(f, n);
      for (const auto& cell : npoint_cells(n, weight)) {
        r.expect(formula.at(cell) == oracle.at(cell), [&] {
          std::string c;
          for (int j : cell) c += std::to_string(j) + " ";
          return "sample " + std::to_string(t) + ", n=" + std::to_string(n) + ", cell " + c + ": formula " +
                 format_rational(formula.at(cell)) + " vs oracle " + format_rational(oracle.at(cell));
        });
      }
    }
  }
  return r;
}

CheckResult check_two_point(Rng& rng, int samples, int box, int max_cell) {
  CheckResult r{"two_point"};
  for (int t = 0; t < samples; ++t) {
    const AffineCoords a = random_coords(rng, box, box);
    for (int p = 0; p <= max_cell; ++p)
      for (int q = 0; q <= max_cell; ++q) {
        const Rational f = two_point_cell(a, p, q, false);
        const Rational s = two_point_cell(a, p, q, true);
        r.expect(f == s, [&] {
          return "cell (" + std::to_string(p) + "," + std::to_string(q) + "): " + format_rational(f) + " vs " + format_rational(s);
        });
      }
  }
  return r;
}

CheckResult check_car(int max_twice, int energy, int max_charge) {
  CheckResult r{"car"};
  const int lim = max_twice % 2 == 0 ? max_twice - 1 : max_twice;
  for (const auto& s : states_window(max_charge, energy)) {
    const FockVector v(s);
    for (int a = -lim; a <= lim; a += 2)
      for (int b = -lim; b <= lim; b += 2) {
        const FockVector mixed = psi(a, psi_star(b, v)) + psi_star(b, psi(a, v));
        const FockVector expect_mixed = (a == -b) ? v : FockVector();
        r.expect(mixed == expect_mixed, [&] {
          return "{psi_" + std::to_string(a) + "/2, psi*_" + std::to_string(b) + "/2} on " + s.to_string() + " = " + show(mixed);
        });
        const FockVector pp = psi(a, psi(b, v)) + psi(b, psi(a, v));
        r.expect(pp.is_zero_vector(), [&] { return "{psi, psi} != 0 on " + s.to_string(); });
        const FockVector ss = psi_star(a, psi_star(b, v)) + psi_star(b, psi_star(a, v));
        r.expect(ss.is_zero_vector(), [&] { return "{psi*, psi*} != 0 on " + s.to_string(); });
      }
  }
  return r;
}

CheckResult check_heisenberg(int max_mode, int energy, int max_charge, const BosonFn& boson) {
  CheckResult r{"heisenberg"};
  for (const auto& s : states_window(max_charge, energy)) {
    const FockVector v(s);
    for (int m = -max_mode; m <= max_mode; ++m)
      for (int n = -max_mode; n <= max_mode; ++n) {
        if (m == 0 || n == 0) continue;
        const FockVector comm = apply_boson_with(boson, m, apply_boson_with(boson, n, v)) -
                                apply_boson_with(boson, n, apply_boson_with(boson, m, v));
        const FockVector expect = (m == -n) ? Rational(m) * v : FockVector();
        r.expect(comm == expect, [&] {
          return "[alpha_" + std::to_string(m) + ", alpha_" + std::to_string(n) + "] on " + s.to_string() + " = " + show(comm);
        });
      }
    // alpha_n preserves charge.
    for (int n = -max_mode; n <= max_mode; ++n) {
      if (n == 0) continue;
      const FockVector image = apply_boson_with(boson, n, v);
      for (const auto& [t, c] : image.terms()) {
        r.expect(t.charge == s.charge, [&] { return "alpha_n changed the charge of " + s.to_string(); });
      }
    }
  }
  return r;
}

CheckResult check_representation(Rng& rng, int samples, int band, int energy) {
  CheckResult r{"representation"};
  const auto states = states_window(1, energy);
  for (int t = 0; t < samples; ++t) {
    const bool periodic = t % 2 == 1;
    const int period = 1 + t % 3;
    const BandMatrix x = periodic ? random_periodic_matrix(rng, band, period, 3)
                                  : random_band_matrix(rng, band, -2, 3, 4);
    const BandMatrix y = periodic ? random_periodic_matrix(rng, band, 1 + (t / 2) % 3, 3)
                                  : random_band_matrix(rng, band, -2, 3, 4);
    const CentralMatrix br = ainf_bracket({x, 0}, {y, 0});
    const QuadElement qx = quad_from_matrix({x, 0});
    const QuadElement qy = quad_from_matrix({y, 0});
    const QuadElement qb = quad_from_matrix(br);
    for (const auto& s : states) {
      const FockVector v(s);
      const FockVector lhs = apply_quad(qx, apply_quad(qy, v)) - apply_quad(qy, apply_quad(qx, v));
      const FockVector rhs = apply_quad(qb, v);
      r.expect(lhs == rhs, [&] {
        return "sample " + std::to_string(t) + " on " + s.to_string() + ": " + show(lhs) + " vs " + show(rhs);
      });
      for (const auto& [u, c] : rhs.terms()) {
        r.expect(u.charge == s.charge, [&] { return "a-block action changed the charge"; });
      }
    }
  }
  return r;
}

CheckResult check_cocycle_equivalence(Rng& rng, int samples, int max_size, int max_deg) {
  CheckResult r{"cocycle_equivalence"};
  const auto compare = [&](const LoopElement& a, const LoopElement& b, const std::string& label) {
    const Rational count = cocycle_pairs(loop_embed(a), loop_embed(b));
    const Rational res = residue_cocycle(a, b);
    r.expect(count == res, [&] { return label + ": pair count " + format_rational(count) + " vs residue " + format_rational(res); });
  };
  for (int t = 0; t < samples; ++t) {
    const int n = 1 + t % max_size;
    compare(random_loop(rng, n, max_deg, 4), random_loop(rng, n, max_deg, 4), "sample " + std::to_string(t));
  }
  // The derivative factor: alpha(e_12(k), e_21(-k)) = k.
  for (int k = -max_deg; k <= max_deg; ++k) {
    LoopElement a(2);
    LoopElement b(2);
    a.add_unit(k, 1, 2, 1);
    b.add_unit(-k, 2, 1, 1);
    compare(a, b, "e12(" + std::to_string(k) + "), e21(" + std::to_string(-k) + ")");
    r.expect(residue_cocycle(a, b) == k, [&] { return "residue of e12(k), e21(-k) is not k"; });
  }
  return r;
}

CheckResult check_subalgebra_identities(Rng& rng, int samples) {
  CheckResult r{"subalgebra_identities"};
  long positives = 0;
  const InvolutionRule sigma0 = InvolutionRule::sigma(0);
  const InvolutionRule sigma1 = InvolutionRule::sigma(1);
  for (int t = 0; t < samples; ++t) {
    const int l = 1 + t % 2;
    const int period = 2 * l + 2;
    QuadElement x;
    if (t % 4 == 3) {
      x = QuadElement(3, period);
      x.a = random_periodic_matrix(rng, 3, period, 4);
    } else {
      // Traceless loops embed as period-reduced elements; shift to fermion labels.
      const BandMatrix m = loop_embed(random_traceless_loop(rng, period, 1, 3)).shifted(-1);
      x = QuadElement(m.band(), period);
      x.a = m;
    }
    if (t % 3 == 0) x = symmetrized(x, sigma0);
    if (t % 3 == 1) x = symmetrized(x, sigma1);
    if (t % 8 == 5 && !x.a.is_zero()) x.add_a(0, 0, 1);  // break the trace condition
    const auto small = classify(x, l);
    const auto big = classify(x, 2 * l + 1);
    const std::string a_big = "A^(1)_" + std::to_string(2 * l + 1);
    const std::string d2 = "D^(2)_" + std::to_string(l + 1);
    const bool via_b = big.count(a_big) > 0 && big.count("B_inf") > 0;
    const bool via_c = big.count(a_big) > 0 && big.count("C_inf") > 0;
    r.expect((small.count(d2 + "[B]") > 0) == via_b, [&] { return "sample " + std::to_string(t) + ": D^(2)[B] vs A^(1)_{2l+1} cap B_inf"; });
    r.expect((small.count(d2 + "[C]") > 0) == via_c, [&] { return "sample " + std::to_string(t) + ": D^(2)[C] vs A^(1)_{2l+1} cap C_inf"; });
    positives += (via_b ? 1 : 0) + (via_c ? 1 : 0);
  }
  r.expect(positives > 0, [] { return "no sample landed in D^(2); the identity was never exercised"; });

  // Closure of fixed-point sets under the bracket.
  for (int t = 0; t < samples; ++t) {
    const InvolutionRule rule = t % 3 == 0 ? sigma0 : (t % 3 == 1 ? sigma1 : InvolutionRule::two_component());
    const bool periodic = t % 2 == 1;
    const auto make = [&] {
      QuadElement q = periodic ? QuadElement(2, 2) : QuadElement(2);
      q.a = periodic ? random_periodic_matrix(rng, 2, 2, 3) : random_band_matrix(rng, 2, -3, 3, 4);
      return symmetrized(q, rule);
    };
    const QuadElement x = make();
    const QuadElement y = make();
    r.expect(is_fixed(x, rule) && is_fixed(y, rule), [&] { return "symmetrized element is not fixed"; });
    const QuadElement br = quad_bracket(x, y);
    r.expect(is_fixed(br, rule), [&] { return "bracket of fixed elements is not fixed (sample " + std::to_string(t) + ")"; });
  }
  return r;
}

CheckResult check_highest_weight(int range) {
  CheckResult r{"highest_weight"};
  for (int l = -range; l <= range; ++l) {
    const FockVector v(l_vacuum(l));
    for (int i = -range; i <= range; ++i) {
      const FockVector e = chevalley_apply(ChevalleyGen::E, i, v);
      r.expect(e.is_zero_vector(), [&] { return "e_" + std::to_string(i) + "|" + std::to_string(l) + "> = " + show(e); });
      const FockVector h = chevalley_apply(ChevalleyGen::H, i, v);
      const FockVector expect = i == l ? v : FockVector();
      r.expect(h == expect, [&] { return "h_" + std::to_string(i) + "|" + std::to_string(l) + "> = " + show(h); });
    }
  }
  return r;
}

CheckResult check_neutral(Rng& rng, int samples, int energy) {
  CheckResult r{"neutral"};
  for (int t = 0; t < samples; ++t) {
    const NeutralQuadElement x = random_neutral(rng, 2, 3, 3);
    QuadElement b;
    try {
      b = b_prime_to_b(x);
    } catch (const Error& e) {
      r.expect(false, [&] { return std::string("b_prime_to_b: ") + e.what(); });
      continue;
    }
    r.expect(!b.extended(), [] { return "b_prime_to_b left b/c blocks"; });
    r.expect(is_fixed(b, InvolutionRule::sigma(0)), [] { return "b_prime_to_b output not sigma_0-fixed"; });
  }

  const auto states = states_window(1, energy);
  const int range = 2;
  for (const auto& s : states) {
    const ExtFockVector v = to_ext(FockVector(s));
    for (int m = -range; m <= range; ++m)
      for (int n = -range; n <= range; ++n)
        for (int hm = 0; hm < 2; ++hm)
          for (int hn = 0; hn < 2; ++hn) {
            const ExtFockVector anti = apply_neutral(m, hm, apply_neutral(n, hn, v)) + apply_neutral(n, hn, apply_neutral(m, hm, v));
            ExtFockVector expect;
            if (hm == hn && m == -n) expect = ExtRational(m % 2 == 0 ? 1 : -1) * v;
            r.expect(anti == expect, [&] {
              return "neutral anticommutator (" + std::to_string(m) + (hm ? "^" : "") + ", " + std::to_string(n) +
                     (hn ? "^" : "") + ") on " + s.to_string();
            });
          }
  }

  // :phi phi: expanded in charged fermions acts like the normal-ordered product.
  const ExtFockVector vac = to_ext(FockVector(BasisState::vacuum()));
  for (int i = -range; i <= range; ++i)
    for (int j = -range; j <= range; ++j)
      for (int hi = 0; hi < 2; ++hi)
        for (int hj = 0; hj < 2; ++hj) {
          NeutralQuadElement x;
          x.band = 2 * range;
          x.add(i, j, hi, hj, 1);
          const ChargedPair p = neutral_to_charged(x);
          const ExtRational contraction = vev(apply_neutral(i, hi, apply_neutral(j, hj, vac)));
          for (const auto& s : basis_states(0, std::min(energy, 3))) {
            const ExtFockVector v = to_ext(FockVector(s));
            const ExtFockVector lhs = apply_neutral(i, hi, apply_neutral(j, hj, v)) - contraction * v;
            const ExtFockVector rhs = to_ext(apply_quad(p.real, FockVector(s))) +
                                      ExtRational::imaginary_unit() * to_ext(apply_quad(p.imag, FockVector(s)));
            r.expect(lhs == rhs, [&] {
              return ":phi_" + std::to_string(i) + " phi_" + std::to_string(j) + ": charged expansion differs on " + s.to_string();
            });
          }
        }
  return r;
}

CheckResult check_puncture_examples(Rng& rng, int samples) {
  CheckResult r{"puncture"};
  {
    const PunctureData p{2, {1, 3}, {1, 3}};
    const TSeries res = check_puncture(TSeries::constant(4, 1), p);
    TSeries expect(3);
    expect.add({2}, frac(1, 4));
    r.expect(res == expect, [&] { return "tau = 1 gives " + res.to_string() + ", expected t1^2/4"; });
  }
  {
    // Only the -d/dt1 term survives: h pushes t_{1+h} out of the cut, E_+^0 is empty.
    const PunctureData p{5, {1}, {}};
    const TSeries res = check_puncture(TSeries::variable(1, 1), p);
    r.expect(res == TSeries::constant(0, -1), [&] { return "tau = t1 gives " + res.to_string() + ", expected -1"; });
  }
  {
    // tau = 1 + t1 + t3, h = 2, E_+ = {1, 3}, E_+^0 = {1, 3}, W = 6:
    // (3/2 t3 - 1) * 1 + (5/2 t5) * 1 + (1/4) t1^2 (1 + t1 + t3).
    TSeries tau = TSeries::constant(6, 1) + TSeries::variable(6, 1) + TSeries::variable(6, 3);
    const TSeries res = check_puncture(tau, PunctureData{2, {1, 3}, {1, 3}});
    TSeries expect(5);
    expect.add({}, -1);
    expect.add({0, 0, 1}, frac(3, 2));
    expect.add({0, 0, 0, 0, 1}, frac(5, 2));
    expect.add({2}, frac(1, 4));
    expect.add({3}, frac(1, 4));
    expect.add({2, 0, 1}, frac(1, 4));
    r.expect(res == expect, [&] { return "tau = 1 + t1 + t3 gives " + res.to_string(); });
  }
  const PunctureData p{3, {1, 2, 4}, {1, 2}};
  for (int t = 0; t < samples; ++t) {
    TSeries t1(6);
    TSeries t2(6);
    for (int k = 0; k < 6; ++k) {
      Monomial m(3, 0);
      for (auto& e : m) e = static_cast<int>(rng() % 3);
      t1.add(m, random_rational(rng, 5));
      for (auto& e : m) e = static_cast<int>(rng() % 3);
      t2.add(m, random_rational(rng, 5));
    }
    const Rational a = random_rational(rng, 5);
    const Rational b = random_rational(rng, 5);
    const TSeries lhs = check_puncture(a * t1 + b * t2, p);
    const TSeries rhs = a * check_puncture(t1, p) + b * check_puncture(t2, p);
    r.expect(lhs == rhs, [&] { return "puncture operator is not linear on sample " + std::to_string(t); });
  }
  return r;
}

}  // namespace kpferm
