#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace adce {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;
using rvec = std::vector<double>;

// Single-carrier chip rate and DAC sample rate of the 802.11ad SC PHY.
inline constexpr double kChipRateHz = 1.76e9;
inline constexpr double kDacRateHz = 2.64e9;
inline constexpr double kDacPeriodSec = 1.0 / kDacRateHz;

// Delay grid of the channel estimator. The 1.5x DAC upsampling keeps the
// even-indexed chips of each training sequence and places them three DAC
// samples apart, so that stride is the finest lattice every processing
// path (DAC-grid correlation, chip-grid correlation, Fourier coefficients)
// can observe. One grid step = 3 DAC samples = 2 chip periods.
inline constexpr int kGridStrideDac = 3;
inline constexpr double kDeltaTauSec = kGridStrideDac * kDacPeriodSec;

// Length of each Golay sequence embedded in the CEF, and the number of its
// chips that survive 1.5x upsampling onto the DAC grid.
inline constexpr int kCefPairLength = 256;
inline constexpr int kGridSegmentLength = kCefPairLength / 2;

inline double tau_ch_sec(int n_grid) { return n_grid * kDeltaTauSec; }

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace adce
