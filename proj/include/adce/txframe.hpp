#pragma once

#include <array>
#include <span>

#include "adce/common.hpp"
#include "adce/golay.hpp"

namespace adce {

inline constexpr int kCefChipCount = 1152;
inline constexpr int kCefWaveformLength = 1536;

// Identifies one of the four Golay training sequences inside the CEF, in
// transmit order: first/second element of the leading pair, then of the
// trailing pair.
enum class CefSegment { kUa = 0, kUb = 1, kVa = 2, kVb = 3 };
inline constexpr std::array<CefSegment, 4> kAllSegments = {
    CefSegment::kUa, CefSegment::kUb, CefSegment::kVa, CefSegment::kVb};

// Pairs the segments that must be combined by the estimators.
inline constexpr CefSegment pair_partner(CefSegment s) {
  switch (s) {
    case CefSegment::kUa: return CefSegment::kUb;
    case CefSegment::kUb: return CefSegment::kUa;
    case CefSegment::kVa: return CefSegment::kVb;
    default: return CefSegment::kVa;
  }
}

/**
 * The channel-estimation field on the chip grid: two 512-chip blocks, each
 * the concatenation of one Golay complementary pair, followed by 128 zero
 * chips to fill the standard 1152-chip field.
 */
struct CefSequence {
  rvec chips;  // length kCefChipCount
  GolayPair u;
  GolayPair v;

  std::span<const double> segment_chips(CefSegment s) const {
    return std::span<const double>(chips).subspan(
        static_cast<size_t>(s) * kCefPairLength, kCefPairLength);
  }
};

CefSequence build_cef(const GolayPair& u_pair, const GolayPair& v_pair);

/**
 * The CEF after 1.5x upsampling onto the 2.64 GHz DAC grid: zero-stuff by
 * three, then keep every second sample. The surviving chips are the
 * even-indexed ones of each training sequence, spaced three DAC samples
 * apart; each 256-chip segment therefore contributes 128 samples starting
 * at DAC offset 384 * segment_index.
 */
struct CefWaveform {
  rvec samples;  // length kCefWaveformLength
  double sample_rate_hz = kDacRateHz;

  static constexpr int segment_offset(CefSegment s) {
    return static_cast<int>(s) * 384;
  }

  // The Golay chips of one segment as seen on the delay grid (every third
  // DAC sample within the segment's span).
  rvec grid_segment(CefSegment s) const {
    rvec out(kGridSegmentLength);
    const int base = segment_offset(s);
    for (int j = 0; j < kGridSegmentLength; ++j)
      out[j] = samples[base + kGridStrideDac * j];
    return out;
  }
};

CefWaveform upsample_1p5(const CefSequence& c);

/**
 * Combined transmit/receive analog filter model. Flat mode is the unit
 * response used throughout the experiments; lowpass mode is a Hamming
 * windowed-sinc with configurable normalized cutoff (cycles per DAC
 * sample).
 */
struct ShapingFilter {
  enum class Mode { kFlat, kLowpass };
  Mode mode = Mode::kFlat;
  double cutoff = 0.5;
  int taps = 129;

  rvec impulse_response() const;
  bool is_flat() const { return mode == Mode::kFlat; }

  // Zero-phase frequency response at theta radians per DAC sample.
  double response_at(double theta) const;

  // Response sampled at the Fourier-coefficient frequencies of an n_grid
  // point delay grid (bin k sits at 2 pi k / (3 n_grid) per DAC sample).
  cvec response_on_bins(int n_grid) const;

  // Largest coefficient index passed by the filter; indices at or above
  // this bound are suppressed and must not be acquired.
  int coefficient_bound(int n_grid) const;
};

// Convolves with the filter's impulse response, compensating the group
// delay so output samples stay aligned with the input grid. Flat mode
// returns the input unchanged.
CefWaveform apply_shaping(const CefWaveform& w, const ShapingFilter& f);
rvec apply_shaping(std::span<const double> x, const ShapingFilter& f);

}  // namespace adce
