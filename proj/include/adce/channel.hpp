#pragma once

#include <limits>
#include <span>

#include "adce/common.hpp"
#include "adce/rng.hpp"

namespace adce {

/**
 * Sparse multipath channel on the delay grid: L distinct integer delays
 * with complex gains, observed over a window of n_grid cells of width
 * kDeltaTauSec.
 */
struct SparseChannel {
  struct Tap {
    int delay = 0;
    cplx gain{0.0, 0.0};
  };

  std::vector<Tap> taps;  // sorted by delay, delays distinct
  int n_grid = 0;
  double delta_tau = kDeltaTauSec;
  double tau_ch = 0.0;

  int max_delay() const { return taps.empty() ? 0 : taps.back().delay; }

  cvec dense() const {
    cvec h(static_cast<size_t>(n_grid), cplx{0.0, 0.0});
    for (const auto& t : taps) h[t.delay] = t.gain;
    return h;
  }
};

enum class GainModel { kUnit, kComplexGaussian };

// L distinct delays uniform without replacement on [0, n_grid); gains per
// the model, normalized to unit total power.
SparseChannel random_channel(int n_grid, int n_paths, GainModel model,
                             Rng& rng);

// Linear convolution with the tap list. delay_stride expresses one grid
// cell in samples of x's grid (1 on the delay grid, 3 on the DAC grid).
// Output length is input length plus the largest delay in samples.
cvec apply_channel(std::span<const cplx> x, const SparseChannel& h,
                   int delay_stride = 1);
cvec apply_channel(std::span<const double> x, const SparseChannel& h,
                   int delay_stride = 1);

struct NoiseSpec {
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;

  bool noiseless() const { return std::isinf(snr_db) && snr_db > 0; }
};

// Per-sample complex noise variance for a given reference signal power.
double noise_variance(double snr_db, double signal_power_ref);

// Adds circular complex white Gaussian noise with per-sample variance
// signal_power_ref / 10^(snr_db/10). The +inf sentinel returns the input
// unchanged.
cvec add_noise(std::span<const cplx> x, const NoiseSpec& spec,
               double signal_power_ref);

}  // namespace adce
