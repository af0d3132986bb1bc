#include "kpferm/sampling.hpp"

#include <cstdlib>

namespace kpferm {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, int bound, bool nonzero) {
  int p = 0;
  do {
    p = uniform(rng, -bound, bound);
  } while (nonzero && p == 0);
  return frac(p, uniform(rng, 1, bound));
}

AffineCoords random_coords(Rng& rng, int rows, int cols, int bound) {
  AffineCoords a;
  for (int n = 0; n < rows; ++n)
    for (int m = 0; m < cols; ++m) {
      if (uniform(rng, 0, 1) != 0) a.set(n, m, random_rational(rng, bound, true));
    }
  return a;
}

BandMatrix random_band_matrix(Rng& rng, int band, int lo, int hi, int count, int bound) {
  BandMatrix m(band);
  for (int k = 0; k < count; ++k) {
    const int i = uniform(rng, lo, hi);
    m.add(i, i + uniform(rng, -band, band), random_rational(rng, bound));
  }
  return m;
}

BandMatrix random_periodic_matrix(Rng& rng, int band, int period, int count, int bound) {
  BandMatrix m(band, period);
  for (int k = 0; k < count; ++k) {
    const int i = uniform(rng, 0, period - 1);
    m.add(i, i + uniform(rng, -band, band), random_rational(rng, bound));
  }
  return m;
}

LoopElement random_loop(Rng& rng, int size, int max_deg, int count, int bound) {
  LoopElement a(size);
  for (int t = 0; t < count; ++t) {
    a.add_unit(uniform(rng, -max_deg, max_deg), uniform(rng, 1, size), uniform(rng, 1, size),
               random_rational(rng, bound));
  }
  return a;
}

LoopElement random_traceless_loop(Rng& rng, int size, int max_deg, int count, int bound) {
  LoopElement a(size);
  for (int t = 0; t < count; ++t) {
    const int k = uniform(rng, -max_deg, max_deg);
    const int i = uniform(rng, 1, size);
    const int j = uniform(rng, 1, size);
    const Rational v = random_rational(rng, bound);
    if (i != j || size == 1) {
      if (size > 1) a.add_unit(k, i, j, v);
      continue;
    }
    // Diagonal entries come in pairs e_ii - e_{i'i'}.
    const int other = i % size + 1;
    a.add_unit(k, i, i, v);
    a.add_unit(k, other, other, -v);
  }
  return a;
}

NeutralQuadElement random_neutral(Rng& rng, int band, int window, int count, int bound) {
  NeutralQuadElement x;
  x.band = band;
  for (int t = 0; t < count; ++t) {
    const int i = uniform(rng, -window, window);
    const int j = -i + uniform(rng, -band, band);
    x.add(i, j, false, false, random_rational(rng, bound));
  }
  return x;
}

}  // namespace kpferm
