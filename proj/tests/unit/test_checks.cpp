#include "helpers.hpp"

#include "kpferm/checks.hpp"
#include "kpferm/selftest.hpp"

using namespace kpferm;

namespace {

void require_pass(const CheckResult& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.checks > 0);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("property checks pass at small sizes") {
  Rng rng(71);
  const BosonFn boson = standard_boson();
  require_pass(check_plucker_bogoliubov(rng, 4, 3, 5));
  require_pass(check_schur_pinning(5, boson));
  require_pass(check_tau_paths(rng, 3, 3, 6, boson));
  require_pass(check_npoint(rng, 2, 3, {2, 3, 4}, 6, boson));
  require_pass(check_two_point(rng, 3, 3, 4));
  require_pass(check_car(5, 4, 1));
  require_pass(check_heisenberg(3, 4, 1, boson));
  require_pass(check_representation(rng, 6, 2, 3));
  require_pass(check_cocycle_equivalence(rng, 20, 3, 3));
  require_pass(check_subalgebra_identities(rng, 40));
  require_pass(check_highest_weight(2));
  require_pass(check_neutral(rng, 5, 2));
  require_pass(check_puncture_examples(rng, 4));
}

TEST_CASE("a flipped boson sign is detected") {
  Rng rng(73);
  CHECK(check_schur_pinning(3, sign_flipped_boson()).failures > 0);
  CHECK(check_tau_paths(rng, 3, 3, 5, sign_flipped_boson()).failures > 0);
}

TEST_CASE("check results merge") {
  CheckResult a("a");
  a.expect(true, [] { return std::string("never"); });
  CheckResult b("b");
  b.expect(false, [] { return std::string("first"); });
  b.expect(false, [] { return std::string("second"); });
  a.merge(b);
  CHECK(a.checks == 3);
  CHECK(a.failures == 2);
  CHECK(a.first_failure == "first");
  CHECK(!CheckResult("empty").passed());
}

TEST_CASE("selftest report") {
  SelftestOptions opts;
  opts.energy = 3;
  const SelftestReport ok = run_selftest(opts);
  CHECK(ok.passed());
  CHECK(ok.suites.size() == 13);
  CHECK(ok.to_text().find("boson_schur: PASS") != std::string::npos);

  opts.mutate_boson_sign = true;
  const SelftestReport bad = run_selftest(opts);
  CHECK(!bad.passed());
  CHECK(bad.to_text().find("boson_schur: FAIL") != std::string::npos);
  CHECK(bad.to_text().find("selftest: FAIL") != std::string::npos);
}
