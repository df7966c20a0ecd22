#pragma once

#include <optional>
#include <vector>

#include "adce/common.hpp"

namespace adce {

/**
 * A Golay complementary pair: two +/-1 sequences of equal power-of-two
 * length whose aperiodic autocorrelations sum to 2N at lag zero and cancel
 * exactly at every other lag.
 */
struct GolayPair {
  std::vector<int> a;
  std::vector<int> b;

  int length() const { return static_cast<int>(a.size()); }
};

// Seeds for the recursive construction. Signs must be +/-1, one per doubling
// stage. Delays must be a permutation of {1, 2, 4, ..., 2^(depth-1)}; the
// natural ascending order gives the plain doubling construction
// a' = [a b], b' = [a -b].
struct GolaySeeds {
  std::optional<std::vector<int>> signs;
  std::optional<std::vector<int>> delays;
};

// Builds a pair of length 2^depth. Deterministic in its inputs.
GolayPair generate_pair(int depth, const GolaySeeds& seeds = {});

// (a*a~)[n] + (b*b~)[n] for lags -(N-1)..(N-1), exact integer arithmetic.
std::vector<long long> autocorr_sum(const GolayPair& p);

// Zero-padded DFTs of the two sequences. For any pair the summed power
// spectrum |Fa[k]|^2 + |Fb[k]|^2 equals 2N in every bin.
struct SpectralPair {
  cvec fa;
  cvec fb;
  int n_dft = 0;
};

// Requires n_dft >= 2N-1 so that the circular and linear convolution views
// of the complementarity property coincide.
SpectralPair spectral_pair(const GolayPair& p, int n_dft);

// Largest deviation of |Fa|^2 + |Fb|^2 from 2N across bins.
double spectral_flatness_error(const SpectralPair& s, int pair_length);

}  // namespace adce
