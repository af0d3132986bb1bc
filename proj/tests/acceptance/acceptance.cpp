// Acceptance criteria at full size. One line per criterion:
//   [PASS|FAIL] <n> <name>: <checks> checks, <seconds>s (limit <limit>s) [first failure]
// Exit status is non-zero when any criterion fails or exceeds its time limit.

#include "kpferm/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace kpferm;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<CheckResult(Rng&)> run;
};

CheckResult all_of(std::string name, std::vector<CheckResult> parts) {
  CheckResult out(std::move(name));
  for (const auto& p : parts) out.merge(p);
  return out;
}

}  // namespace

int main() {
  const BosonFn boson = standard_boson();
  const std::vector<Criterion> criteria = {
      {1, "Plucker-Bogoliubov equivalence", 30,
       [](Rng& rng) { return check_plucker_bogoliubov(rng, 50, 4, 8); }},
      {2, "boson-fermion Schur pinning", 60, [&](Rng&) { return check_schur_pinning(8, boson); }},
      {3, "n-point formula vs log-tau oracle", 120,
       [&](Rng& rng) { return check_npoint(rng, 20, 3, {2, 3, 4}, 8, boson); }},
      {4, "two-point kernel identity", 10, [](Rng& rng) { return check_two_point(rng, 20, 4, 5); }},
      {5, "CAR, Heisenberg and representation relations", 60,
       [&](Rng& rng) {
         return all_of("algebra", {check_car(9, 6, 1), check_heisenberg(4, 6, 1, boson),
                                   check_representation(rng, 40, 3, 4)});
       }},
      {6, "cocycle pair count vs residue", 10,
       [](Rng& rng) { return check_cocycle_equivalence(rng, 100, 3, 3); }},
      {7, "subalgebra intersection identities and closure", 30,
       [](Rng& rng) { return check_subalgebra_identities(rng, 200); }},
      {8, "highest-weight relations", 5, [](Rng&) { return check_highest_weight(3); }},
      {9, "B-prime to B map and neutral CAR", 30, [](Rng& rng) { return check_neutral(rng, 50, 4); }},
      {10, "puncture operator examples and linearity", 5,
       [](Rng& rng) { return check_puncture_examples(rng, 50); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Rng rng(1000 + static_cast<unsigned>(c.id));
    const auto t0 = std::chrono::steady_clock::now();
    const CheckResult r = c.run(rng);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = r.passed() && secs < c.limit_seconds;
    if (!ok) ++failed;
    std::printf("[%s] %d %s: %ld checks, %ld failures, %.2fs (limit %.0fs)", ok ? "PASS" : "FAIL", c.id,
                c.name.c_str(), r.checks, r.failures, secs, c.limit_seconds);
    if (!r.first_failure.empty()) std::printf(" first failure: %s", r.first_failure.c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
