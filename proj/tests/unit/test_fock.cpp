#include "helpers.hpp"

#include "kpferm/error.hpp"
#include "kpferm/fock.hpp"
#include "kpferm/quad.hpp"

using namespace kpferm;

namespace {

HalfIndex h(int twice) { return HalfIndex::from_twice(twice); }
const FockVector vac{BasisState::vacuum()};

FockVector psi(int twice, const FockVector& v) { return apply_fermion(FermionKind::Psi, h(twice), v); }
FockVector psi_star(int twice, const FockVector& v) { return apply_fermion(FermionKind::PsiStar, h(twice), v); }

}  // namespace

TEST_CASE("half-integer labels convert to DJKM labels and back") {
  for (int i = -5; i <= 5; ++i) {
    CHECK(HalfIndex::from_djkm_psi(i).to_djkm_psi() == i);
    CHECK(HalfIndex::from_djkm_psi_star(i).to_djkm_psi_star() == i);
  }
  CHECK(HalfIndex::from_djkm_psi(0).twice() == -1);
  CHECK(HalfIndex::from_djkm_psi_star(0).twice() == 1);
  CHECK_THROWS_AS(HalfIndex::from_twice(2), Error);
}

TEST_CASE("normalize_wedge sorts factors with the permutation sign") {
  CHECK(normalize_wedge({h(1), h(3)}, h(5)) == vac);
  CHECK(normalize_wedge({h(3), h(1)}, h(5)) == Rational(-1) * vac);
  CHECK(normalize_wedge({h(1), h(1)}, h(5)).is_zero_vector());
  CHECK(normalize_wedge({}, h(1), q("3/2")) == q("3/2") * vac);
}

TEST_CASE("charged fermions on the vacuum") {
  CHECK(psi(1, vac).is_zero_vector());
  CHECK(psi_star(-1, vac) == FockVector(BasisState::make(-1, {})));
  CHECK(psi_star(1, vac).is_zero_vector());
  CHECK(psi(-1, vac) == FockVector(BasisState::make(1, {})));
}

TEST_CASE("anticommutator of psi_{-1/2} and psi*_{1/2} is the identity") {
  for (const FockVector& v : {vac, FockVector(BasisState::make(1, {2}))}) {
    CHECK(psi(-1, psi_star(1, v)) + psi_star(1, psi(-1, v)) == v);
  }
}

TEST_CASE("fermions shift the charge by one") {
  const BasisState s = BasisState::make(0, {2, 1});
  for (int r = -7; r <= 7; r += 2) {
    if (auto t = apply_fermion(FermionKind::Psi, h(r), s)) CHECK(t->state.charge == 1);
    if (auto t = apply_fermion(FermionKind::PsiStar, h(r), s)) CHECK(t->state.charge == -1);
  }
}

TEST_CASE("vacuum expectation values") {
  CHECK(vev(vac) == 1);
  CHECK(vev(FockVector(BasisState::make(0, {1}), 3)) == 0);
  CHECK(vev(psi(1, psi_star(-1, vac))) == 1);
  CHECK(vev(psi(-1, psi_star(1, vac))) == 0);
}

TEST_CASE("boson modes") {
  CHECK(apply_boson(1, vac).is_zero_vector());
  CHECK(apply_boson(-1, vac) == FockVector(BasisState::make(0, {1})));
  // alpha_{-2} |vac> = |(2)> - |(1,1)>
  FockVector expect(BasisState::make(0, {2}));
  expect.add(BasisState::make(0, {1, 1}), -1);
  CHECK(apply_boson(-2, vac) == expect);

  const FockVector v1(BasisState::make(0, {2, 1}));
  const FockVector v2(BasisState::make(1, {3}));
  for (int n : {-3, -1, 2}) {
    CHECK(apply_boson(n, q("2/3") * v1 + q("-5") * v2) ==
          q("2/3") * apply_boson(n, v1) + q("-5") * apply_boson(n, v2));
  }
}

TEST_CASE("charge and highest weight vectors") {
  CHECK(charge_of(BasisState::vacuum()) == 0);
  CHECK(charge_of(l_vacuum(2)) == 2);
  CHECK(l_vacuum(0) == BasisState::vacuum());

  const FockVector one = apply_fermion(FermionKind::Psi, HalfIndex::from_djkm_psi(0), vac);
  REQUIRE(one.size() == 1);
  CHECK(one.terms().begin()->first == l_vacuum(1));

  const FockVector minus_one = apply_fermion(FermionKind::PsiStar, HalfIndex::from_djkm_psi_star(-1), vac);
  REQUIRE(minus_one.size() == 1);
  CHECK(minus_one.terms().begin()->first == l_vacuum(-1));

  const BasisState s = BasisState::make(1, {3, 1});
  for (int n : {-3, -2, -1, 1, 2, 3}) {
    const FockVector image = apply_boson(n, FockVector(s));
    for (const auto& [t, c] : image.terms()) CHECK(charge_of(t) == 1);
  }
}

TEST_CASE("basis state enumeration") {
  CHECK(basis_states(0, 0).size() == 1);
  CHECK(basis_states(0, 4).size() == 1 + 1 + 2 + 3 + 5);
  CHECK(basis_states(-2, 3).front().charge == -2);
  CHECK_THROWS_AS(BasisState::make(0, {1, 2}), Error);
}

TEST_CASE("quadratic elements act by the normal-ordered product") {
  QuadElement x(0);
  x.add_a(0, 0, 1);
  CHECK(apply_quad(x, vac).is_zero_vector());
  const FockVector excited = apply_fermion(FermionKind::Psi, HalfIndex::from_djkm_psi(0), vac);
  CHECK(apply_quad(x, excited) == excited);

  QuadElement c(0);
  c.central = q("7/3");
  const FockVector v(BasisState::make(0, {2, 2}));
  CHECK(apply_quad(c, v) == q("7/3") * v);
}

TEST_CASE("commutator of E01 and E10 carries the cocycle") {
  const QuadElement x = quad_from_matrix({BandMatrix::unit(0, 1), 0});
  const QuadElement y = quad_from_matrix({BandMatrix::unit(1, 0), 0});
  BandMatrix d = BandMatrix::unit(0, 0);
  d -= BandMatrix::unit(1, 1);
  const FockVector lhs = apply_quad(x, apply_quad(y, vac)) - apply_quad(y, apply_quad(x, vac));
  CHECK(lhs == apply_quad(quad_from_matrix({d, 0}), vac) + vac);
}

TEST_CASE("periodic action stays within the support bound") {
  QuadElement x(2, 3);
  x.add_a(0, 2, 1);
  x.add_a(1, 0, -2);
  x.add_a(2, 2, 5);
  for (const auto& s : basis_states(1, 4)) {
    const FockVector out = apply_quad(x, FockVector(s));
    CHECK(out.size() <= quad_support_bound(x, s));
    for (const auto& [t, c] : out.terms()) CHECK(charge_of(t) == 1);
  }
}

TEST_CASE("Chevalley generators") {
  // f_1 = psi_1 psi*_0 is the off-diagonal a-entry (1, 0).
  const FockVector one(l_vacuum(1));
  QuadElement f(1);
  f.add_a(1, 0, 1);
  CHECK(chevalley_apply(ChevalleyGen::F, 1, one) == apply_quad(f, one));
  CHECK(!chevalley_apply(ChevalleyGen::F, 1, one).is_zero_vector());
  for (int l = -3; l <= 3; ++l) {
    const FockVector v(l_vacuum(l));
    for (int i = -3; i <= 3; ++i) {
      CHECK(chevalley_apply(ChevalleyGen::E, i, v).is_zero_vector());
      CHECK(chevalley_apply(ChevalleyGen::H, i, v) == (i == l ? v : FockVector()));
    }
  }
}

TEST_CASE("neutral fermions") {
  const ExtFockVector v = to_ext(vac);
  const ExtFockVector charged =
      to_ext(apply_fermion(FermionKind::Psi, HalfIndex::from_djkm_psi(0), vac)) +
      to_ext(apply_fermion(FermionKind::PsiStar, HalfIndex::from_djkm_psi_star(0), vac));
  CHECK(apply_neutral(0, false, v) == ExtRational::inv_sqrt2() * charged);

  const ExtFockVector w = to_ext(FockVector(BasisState::make(0, {2, 1})));
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const ExtFockVector pp = apply_neutral(m, false, apply_neutral(n, false, w)) +
                               apply_neutral(n, false, apply_neutral(m, false, w));
      CHECK(pp == (m == -n ? ExtRational(m % 2 == 0 ? 1 : -1) * w : ExtFockVector()));
      const ExtFockVector mixed = apply_neutral(m, false, apply_neutral(n, true, w)) +
                                  apply_neutral(n, true, apply_neutral(m, false, w));
      CHECK(mixed.is_zero_vector());
    }
}
