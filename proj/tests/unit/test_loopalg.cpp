#include "helpers.hpp"

#include "kpferm/error.hpp"
#include "kpferm/loopalg.hpp"
#include "kpferm/sampling.hpp"

using namespace kpferm;

namespace {

LoopElement unit_loop(int n, int k, int i, int j) {
  LoopElement a(n);
  a.add_unit(k, i, j, 1);
  return a;
}

CentralMatrix sum(CentralMatrix x, const CentralMatrix& y) {
  x.matrix += y.matrix;
  x.central += y.central;
  return x;
}

CentralMatrix random_central(Rng& rng) {
  return {random_band_matrix(rng, 2, -2, 2, 4), random_rational(rng, 3)};
}

EmbeddingData sl2() {
  EmbeddingData e;
  e.size = 2;
  SquareMatrix h(2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e.images = {SquareMatrix::unit(2, 1, 2), SquareMatrix::unit(2, 2, 1), h};
  return e;
}

SquareMatrix block_double(const SquareMatrix& m) {
  const int n = m.size();
  SquareMatrix out(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out(i, j) = m(i, j);
      out(i + n, j + n) = m(i, j);
    }
  return out;
}

}  // namespace

TEST_CASE("matrix cocycle") {
  CHECK(cocycle_pairs(BandMatrix::unit(0, 1), BandMatrix::unit(1, 0)) == 1);
  CHECK(cocycle_pairs(BandMatrix::unit(1, 0), BandMatrix::unit(0, 1)) == -1);
  CHECK(cocycle_pairs(BandMatrix::unit(1, 2), BandMatrix::unit(2, 1)) == 0);
  CHECK(cocycle_pairs(loop_embed(unit_loop(1, 1, 1, 1)), loop_embed(unit_loop(1, -1, 1, 1))) == 1);
}

TEST_CASE("A-infinity bracket") {
  BandMatrix d = BandMatrix::unit(0, 0);
  d -= BandMatrix::unit(1, 1);
  const CentralMatrix br = ainf_bracket({BandMatrix::unit(0, 1), 0}, {BandMatrix::unit(1, 0), 0});
  CHECK(br == CentralMatrix{d, 1});

  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const CentralMatrix x = random_central(rng);
    const CentralMatrix y = random_central(rng);
    const CentralMatrix z = random_central(rng);
    const CentralMatrix xy = ainf_bracket(x, y);
    const CentralMatrix yx = ainf_bracket(y, x);
    CHECK(sum(xy, yx) == CentralMatrix{BandMatrix(0), 0});
    const CentralMatrix jacobi =
        sum(sum(ainf_bracket(xy, z), ainf_bracket(ainf_bracket(y, z), x)), ainf_bracket(ainf_bracket(z, x), y));
    CHECK(jacobi == CentralMatrix{BandMatrix(0), 0});
    const Rational cyc = cocycle_pairs(commutator(x.matrix, y.matrix), z.matrix) +
                         cocycle_pairs(commutator(y.matrix, z.matrix), x.matrix) +
                         cocycle_pairs(commutator(z.matrix, x.matrix), y.matrix);
    CHECK(cyc == 0);
  }
}

TEST_CASE("loop embedding") {
  const BandMatrix r0 = loop_embed(unit_loop(2, 0, 1, 2));
  const BandMatrix r1 = loop_embed(unit_loop(2, 1, 1, 2));
  for (int l = -3; l <= 3; ++l) {
    CHECK(r0.at(2 * l + 1, 2 * l + 2) == 1);
    CHECK(r0.at(2 * l + 2, 2 * l + 3) == 0);
    CHECK(r1.at(2 * l - 1, 2 * l + 2) == 1);
    CHECK(r1.at(2 * l + 1, 2 * l + 2) == 0);
  }
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 3;
    const LoopElement a = random_loop(rng, n, 2, 3);
    const LoopElement b = random_loop(rng, n, 2, 3);
    CHECK(loop_embed(loop_bracket(a, b)) == ainf_bracket({loop_embed(a), 0}, {loop_embed(b), 0}).matrix);
  }
}

TEST_CASE("residue cocycle") {
  CHECK(residue_cocycle(unit_loop(1, 1, 1, 1), unit_loop(1, -1, 1, 1)) == 1);
  for (int k = -3; k <= 3; ++k) {
    const LoopElement a = unit_loop(2, k, 1, 2);
    const LoopElement b = unit_loop(2, -k, 2, 1);
    CHECK(residue_cocycle(a, b) == k);
    CHECK(cocycle_pairs(loop_embed(a), loop_embed(b)) == k);
  }
  Rng rng(53);
  LoopElement c0(3);
  LoopElement c1(3);
  c0.add(0, SquareMatrix::unit(3, 1, 2));
  c1.add(0, SquareMatrix::unit(3, 2, 1));
  CHECK(residue_cocycle(c0, c1) == 0);
  CHECK_THROWS_AS(residue_cocycle(unit_loop(2, 1, 1, 1), unit_loop(3, 1, 1, 1)), Error);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 3;
    const LoopElement a = random_loop(rng, n, 3, 4);
    const LoopElement b = random_loop(rng, n, 3, 4);
    CHECK(cocycle_pairs(loop_embed(a), loop_embed(b)) == residue_cocycle(a, b));
  }
}

TEST_CASE("affinized cocycle through an embedding") {
  const EmbeddingData e = sl2();
  CHECK_NOTHROW(e.validate());
  AbstractLoop x;
  AbstractLoop y;
  x.terms[1] = {1, 0, 0};
  y.terms[-1] = {0, 1, 0};
  CHECK(affinized_cocycle(e, x, y) == 1);
  CHECK(affinized_cocycle(e, y, x) == -1);

  AbstractLoop x0;
  AbstractLoop y0;
  x0.terms[0] = {1, 2, 3};
  y0.terms[0] = {0, 1, 5};
  CHECK(affinized_cocycle(e, x0, y0) == 0);

  EmbeddingData doubled;
  doubled.size = 4;
  for (const auto& m : e.images) doubled.images.push_back(block_double(m));
  AbstractLoop hx;
  AbstractLoop hy;
  hx.terms[2] = {q("1/2"), 1, -1};
  hy.terms[-2] = {3, 0, q("2/3")};
  CHECK(affinized_cocycle(doubled, hx, hy) == 2 * affinized_cocycle(e, hx, hy));

  EmbeddingData bad;
  bad.size = 2;
  bad.images = {SquareMatrix::unit(2, 1, 2), SquareMatrix::unit(2, 1, 2)};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("diagram automorphism fixed parts") {
  Rng rng(59);
  const LoopElement a = random_loop(rng, 2, 2, 5);
  const DiagramAutomorphism id{{0, 1}, {1, 1}, false};
  CHECK(diagram_fixed_part(a, id, 2, false) == a);
  const LoopElement tw = diagram_fixed_part(a, id, 2, true);
  for (const auto& [k, m] : tw.terms()) CHECK(k % 2 == 0);
  for (const auto& [k, m] : a.terms()) {
    if (k % 2 == 0) CHECK(tw.coefficient(k) == m);
  }
  CHECK_THROWS_AS(diagram_fixed_part(a, id, 3, false), Error);

  const DiagramAutomorphism swap{{1, 0}, {1, 1}, true};
  for (bool twisted : {false, true}) {
    const LoopElement x = diagram_fixed_part(random_loop(rng, 2, 2, 4), swap, 2, twisted);
    const LoopElement y = diagram_fixed_part(random_loop(rng, 2, 2, 4), swap, 2, twisted);
    CHECK(diagram_fixed_part(x, swap, 2, twisted) == x);
    const LoopElement br = loop_bracket(x, y);
    CHECK(diagram_fixed_part(br, swap, 2, twisted) == br);
  }
}
