#include "helpers.hpp"

#include "kpferm/error.hpp"
#include "kpferm/npoint.hpp"
#include "kpferm/sampling.hpp"

#include <algorithm>

using namespace kpferm;

TEST_CASE("kernel cells") {
  const AffineCoords zero;
  for (int k = 0; k <= 4; ++k) {
    CHECK(kernel_hat_cell(zero, 1, 2, -k - 1, k) == 1);
    CHECK(kernel_hat_cell(zero, 2, 1, k, -k - 1) == -1);
    CHECK(kernel_hat_cell(zero, 1, 2, k, -k - 1) == 0);
  }
  AffineCoords a;
  a.set(0, 0, q("4/5"));
  CHECK(kernel_hat_cell(a, 1, 1, -1, -1) == q("4/5"));
  CHECK(kernel_hat_cell(a, 1, 1, -1, -2) == 0);
}

TEST_CASE("n-point functions of trivial and single-entry coordinates") {
  for (const auto& table : {npoint_formula(AffineCoords(), 2, 6), npoint_oracle(AffineCoords(), 2, 6)}) {
    for (const auto& cell : npoint_cells(2, 6)) CHECK(table.at(cell) == 0);
  }
  const Rational c = q("-7/3");
  AffineCoords a;
  a.set(0, 0, c);
  const NPointTable f = npoint_formula(a, 2, 4);
  const NPointTable o = npoint_oracle(a, 2, 4);
  CHECK(f.at({1, 1}) == -c * c);
  CHECK(o.at({1, 1}) == -c * c);
  CHECK(o.at({1, 2}) == 0);
  CHECK(o.at({2, 1}) == 0);
}

TEST_CASE("n-point formula equals the oracle") {
  Rng rng(17);
  for (int t = 0; t < 3; ++t) {
    const AffineCoords a = random_coords(rng, 2, 2);
    for (int n : {2, 3}) {
      const NPointTable f = npoint_formula(a, n, 6);
      const NPointTable o = npoint_oracle(a, n, 6);
      for (const auto& cell : npoint_cells(n, 6)) CHECK(f.at(cell) == o.at(cell));
    }
  }
}

TEST_CASE("n-point tables are symmetric") {
  Rng rng(23);
  const AffineCoords a = random_coords(rng, 3, 3);
  const NPointTable t = npoint_formula(a, 3, 6);
  for (const auto& cell : npoint_cells(3, 6)) {
    std::vector<int> perm = cell;
    std::sort(perm.begin(), perm.end());
    do {
      CHECK(t.at(perm) == t.at(cell));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("cells cover all positive compositions and respect the cap") {
  const auto cells = npoint_cells(2, 4);
  CHECK(cells.size() == 6);  // (1,1) (1,2) (2,1) (1,3) (2,2) (3,1)
  for (const auto& c : cells) CHECK(std::all_of(c.begin(), c.end(), [](int j) { return j >= 1; }));
  try {
    npoint_formula(AffineCoords(), 7, 8);
    FAIL("expected a cap error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
    CHECK(std::string(e.what()).find("unsupported n") != std::string::npos);
  }
  CHECK_THROWS_AS(npoint_formula(AffineCoords(), 1, 8), Error);
}
