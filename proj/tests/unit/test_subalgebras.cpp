#include "helpers.hpp"

#include "kpferm/error.hpp"
#include "kpferm/sampling.hpp"
#include "kpferm/subalgebras.hpp"

using namespace kpferm;

namespace {

QuadElement period2(const Rational& a00, const Rational& a11) {
  QuadElement x(0, 2);
  x.add_a(0, 0, a00);
  x.add_a(1, 1, a11);
  return x;
}

NeutralQuadElement phi0_phi1() {
  NeutralQuadElement x;
  x.band = 1;
  x.add(0, 1, false, false, 1);
  return x;
}

NeutralQuadElement plus(NeutralQuadElement x, const NeutralQuadElement& y) {
  x.band = std::max(x.band, y.band);
  for (const auto& [key, v] : y.entries) x.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), v);
  x.central += y.central;
  return x;
}

}  // namespace

TEST_CASE("sigma_0 image of a single monomial") {
  QuadElement x(1);
  x.add_a(0, 1, 1);
  const QuadElement img = involution_image(x, InvolutionRule::sigma(0));
  CHECK(img.a.at(-1, 0) == 1);
  CHECK(img.a.generators().size() == 1);
  CHECK(!is_fixed(x, InvolutionRule::sigma(0)));

  QuadElement sym = x;
  sym.add_a(-1, 0, 1);
  CHECK(is_fixed(sym, InvolutionRule::sigma(0)));
}

TEST_CASE("involutions square to the identity") {
  Rng rng(31);
  for (const auto& rule : {InvolutionRule::sigma(0), InvolutionRule::sigma(1), InvolutionRule::sigma(-2),
                           InvolutionRule::two_component()}) {
    for (int t = 0; t < 10; ++t) {
      QuadElement x = t % 2 == 0 ? QuadElement(2) : QuadElement(2, 3);
      x.a = t % 2 == 0 ? random_band_matrix(rng, 2, -3, 3, 5) : random_periodic_matrix(rng, 2, 3, 4);
      x.central = random_rational(rng, 4);
      const QuadElement back = involution_image(involution_image(x, rule), rule);
      CHECK(back.a == x.a);
      CHECK(back.central == x.central);
    }
  }
}

TEST_CASE("involutions respect the bracket") {
  Rng rng(37);
  for (const auto& rule : {InvolutionRule::sigma(0), InvolutionRule::sigma(1), InvolutionRule::two_component()}) {
    for (int t = 0; t < 10; ++t) {
      QuadElement x(2);
      QuadElement y(2);
      x.a = random_band_matrix(rng, 2, -3, 3, 4);
      y.a = random_band_matrix(rng, 2, -3, 3, 4);
      const QuadElement lhs = involution_image(quad_bracket(x, y), rule);
      const QuadElement rhs = quad_bracket(involution_image(x, rule), involution_image(y, rule));
      CHECK(lhs.a == rhs.a);
      CHECK(lhs.central == rhs.central);
    }
  }
}

TEST_CASE("zero is fixed by every involution") {
  for (const auto& rule : {InvolutionRule::sigma(0), InvolutionRule::sigma(1), InvolutionRule::two_component()}) {
    CHECK(is_fixed(QuadElement(), rule));
  }
  CHECK_THROWS_AS(involution_image(QuadElement(1), InvolutionRule::kappa()), Error);
}

TEST_CASE("anti-band condition") {
  CHECK(is_d_prime(QuadElement()));
  QuadElement x(4);
  x.add_a(2, -2, 1);
  CHECK(is_d_prime(x));
  QuadElement y(5);
  y.add_b(3, 2, 1);
  y.band = 1;
  CHECK(!is_d_prime(y));
}

TEST_CASE("neutral quadratics in charged fermions") {
  const ChargedPair p = neutral_to_charged(phi0_phi1());
  CHECK(p.imag.a.is_zero());
  CHECK(p.real.a.at(0, -1) == q("-1/2"));
  CHECK(p.real.a.at(1, 0) == q("-1/2"));
  CHECK(p.real.a.generators().size() == 2);
  REQUIRE(p.real.b.size() == 1);
  REQUIRE(p.real.c.size() == 1);
  CHECK(p.real.b.begin()->second == q("1/2"));
  CHECK(p.real.c.begin()->second == q("1/2"));

  const NeutralQuadElement sum = plus(phi0_phi1(), kappa(phi0_phi1()));
  const ChargedPair s = neutral_to_charged(sum);
  CHECK(!s.real.extended());

  NeutralQuadElement mixed;
  mixed.band = 2;
  mixed.add(1, -1, true, false, 3);
  mixed.add(0, 2, false, false, q("1/2"));
  CHECK(kappa(kappa(mixed)) == mixed);
  CHECK(kappa(kappa(kappa(kappa(mixed)))) == mixed);
}

TEST_CASE("B-prime to B map") {
  const QuadElement zero = b_prime_to_b(NeutralQuadElement());
  CHECK(zero.a.is_zero());
  CHECK(!zero.extended());

  const QuadElement img = b_prime_to_b(phi0_phi1());
  CHECK(!img.a.is_zero());
  CHECK(!img.extended());
  CHECK(is_fixed(img, InvolutionRule::sigma(0)));

  Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const NeutralQuadElement x = random_neutral(rng, 2, 3, 3);
    const NeutralQuadElement y = random_neutral(rng, 2, 3, 3);
    BandMatrix sum = b_prime_to_b(x).a;
    sum += b_prime_to_b(y).a;
    CHECK(b_prime_to_b(plus(x, y)).a == sum);
  }

  NeutralQuadElement hatted;
  hatted.band = 1;
  hatted.add(0, 1, true, true, 1);
  CHECK_THROWS_AS(b_prime_to_b(hatted), Error);
}

TEST_CASE("reduction conditions") {
  for (int l = 1; l <= 4; ++l) CHECK(is_reduced(QuadElement(), l));
  CHECK(is_reduced(period2(1, -1), 2));
  CHECK(!is_reduced(period2(1, 1), 2));
  CHECK(!is_reduced(period2(1, -1), 1));

  CHECK(is_bireduced(QuadElement(), 1, 1));
  CHECK(is_bireduced(period2(1, -1), 1, 1));
  CHECK(!is_bireduced(period2(1, 1), 1, 1));

  QuadElement broken(0, 4);
  broken.add_a(0, 0, 1);
  broken.add_a(2, 2, 2);
  broken.add_a(1, 1, -3);
  CHECK(!is_bireduced(broken, 1, 1));
}

TEST_CASE("classification labels") {
  const auto all = classify(QuadElement(), 2);
  for (const char* label : {"A_inf", "B_inf", "C_inf", "D_inf", "A^(1)_2", "C^(1)_2", "D^(2)_3[B]", "D^(2)_3[C]",
                            "D^(1)_2[s=1]", "A^(2)_3[s=0]", "A^(2)_3[s=1]"}) {
    CHECK(all.count(label) == 1);
  }

  const QuadElement x = period2(1, -1);
  REQUIRE(is_fixed(x, InvolutionRule::sigma(1)));
  const auto labels = classify(x, 1);
  CHECK(labels.count("C^(1)_1") == 1);
  CHECK(labels.count("A_inf") == 1);
  CHECK(labels.count("C_inf") == 1);

  QuadElement finite(0);
  finite.add_a(0, 0, 1);
  CHECK_THROWS_AS(classify(finite, 1), Error);
}
