#include "kpferm/selftest.hpp"

#include "kpferm/error.hpp"

#include <algorithm>

namespace kpferm {

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const CheckResult& r) { return r.passed(); });
}

std::string SelftestReport::to_text() const {
  std::string out;
  for (const auto& r : suites) {
    out += r.name + ": ";
    if (r.passed()) {
      out += "PASS (" + std::to_string(r.checks) + " checks)\n";
    } else {
      out += "FAIL (" + std::to_string(r.failures) + "/" + std::to_string(r.checks) + ")";
      if (!r.first_failure.empty()) out += " " + r.first_failure;
      out += "\n";
    }
  }
  out += passed() ? "selftest: PASS\n" : "selftest: FAIL\n";
  return out;
}

SelftestReport run_selftest(const SelftestOptions& opts) {
  if (opts.energy < 1) throw_invalid("selftest: energy must be at least 1");
  const int e = opts.energy;
  const BosonFn boson = opts.mutate_boson_sign ? sign_flipped_boson() : standard_boson();
  Rng rng(opts.seed);
  SelftestReport rep;
  rep.suites.push_back(check_plucker_bogoliubov(rng, 10, 3, e + 2));
  rep.suites.push_back(check_schur_pinning(e + 2, boson));
  rep.suites.push_back(check_tau_paths(rng, 5, 3, e + 2, boson));
  rep.suites.push_back(check_npoint(rng, 5, 3, {2, 3}, e + 2, boson));
  rep.suites.push_back(check_two_point(rng, 5, 3, 4));
  rep.suites.push_back(check_car(7, e, 1));
  rep.suites.push_back(check_heisenberg(3, e, 1, boson));
  rep.suites.push_back(check_representation(rng, 10, 2, std::min(e, 4)));
  rep.suites.push_back(check_cocycle_equivalence(rng, 30, 3, 3));
  rep.suites.push_back(check_subalgebra_identities(rng, 50));
  rep.suites.push_back(check_highest_weight(3));
  rep.suites.push_back(check_neutral(rng, 10, std::min(e, 3)));
  rep.suites.push_back(check_puncture_examples(rng, 5));
  return rep;
}

}  // namespace kpferm
