#pragma once

// Seeded random elements for property checks (selftest and the test suites).

#include "kpferm/grassmannian.hpp"
#include "kpferm/loopalg.hpp"
#include "kpferm/quad.hpp"
#include "kpferm/subalgebras.hpp"

#include <random>

namespace kpferm {

using Rng = std::mt19937_64;

/// p/q with |p| <= bound, 1 <= q <= bound; never zero when nonzero is set.
Rational random_rational(Rng& rng, int bound, bool nonzero = false);

/// Each cell of the rows x cols box is filled with probability 1/2.
AffineCoords random_coords(Rng& rng, int rows, int cols, int bound = 9);

/// Finite band matrix with `count` entries whose rows lie in [lo, hi].
BandMatrix random_band_matrix(Rng& rng, int band, int lo, int hi, int count, int bound = 5);

/// Periodic band matrix with `count` generators.
BandMatrix random_periodic_matrix(Rng& rng, int band, int period, int count, int bound = 5);

/// Loop element with degrees in [-max_deg, max_deg] and `count` unit terms.
LoopElement random_loop(Rng& rng, int size, int max_deg, int count, int bound = 5);

/// Loop element whose coefficients are all traceless.
LoopElement random_traceless_loop(Rng& rng, int size, int max_deg, int count, int bound = 5);

/// Neutral element with unhatted entries in [-window, window] and |i + j| <= band.
NeutralQuadElement random_neutral(Rng& rng, int band, int window, int count, int bound = 5);

}  // namespace kpferm
