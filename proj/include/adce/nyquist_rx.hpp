#pragma once

#include <array>
#include <span>

#include "adce/channel.hpp"
#include "adce/common.hpp"
#include "adce/estimation.hpp"
#include "adce/txframe.hpp"

namespace adce {

/**
 * Received CEF, one stream per training segment on the DAC grid. Each
 * stream is the linear convolution of its segment's transmitted waveform
 * with the channel (plus optional noise); index 0 corresponds to the
 * segment's own transmit origin (DAC offset 384 * segment inside the
 * frame, i.e. the delay-alignment schedule is already applied).
 */
struct ReceivedCef {
  std::array<cvec, 4> segments;
  int n_grid = 0;

  const cvec& segment(CefSegment s) const {
    return segments[static_cast<size_t>(s)];
  }
};

// Sends each CEF segment of the (optionally shaped) waveform through the
// channel. Noise is added separately.
ReceivedCef transmit_cef(const CefWaveform& w, const SparseChannel& h);

// Cross-correlation of a received stream with a real template:
// out[u + len(g) - 1] = sum_n s_r[n] g[n - u]. Zero template entries are
// skipped, so correlating against upsampled segments costs only their
// nonzero support.
cvec correlate(std::span<const cplx> s_r, std::span<const double> g);

// Which grid the four correlators run on. Both modes observe the same
// delay lattice and agree exactly in exact arithmetic:
//  - kDacGrid correlates the DAC-rate streams against the upsampled
//    segments and reads lags at the three-sample stride;
//  - kChipGrid first downsamples by 1.5 back to the chip grid, correlates
//    against the original 256-chip sequences and reads even chip lags.
enum class CorrelationGrid { kDacGrid, kChipGrid };

// Sum of the two per-pair correlator peaks: each surviving chip of a
// complementary pair contributes one unit, twice per pair.
inline constexpr double kPairCorrelationPeak = 2.0 * kGridSegmentLength;

// Correlate, delay-align, sum each complementary pair, and average the two
// pair estimates. Noise-free with a flat filter this reproduces the channel
// exactly on the delay grid.
EstimationResult estimate_nyquist(const ReceivedCef& rx, const CefSequence& cef,
                                  CorrelationGrid mode = CorrelationGrid::kDacGrid);

}  // namespace adce
