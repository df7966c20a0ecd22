#include "adce/txframe.hpp"

#include <cmath>

namespace adce {

CefSequence build_cef(const GolayPair& u_pair, const GolayPair& v_pair) {
  if (u_pair.length() != kCefPairLength || v_pair.length() != kCefPairLength)
    throw ParameterError("build_cef: pairs must have length 256");

  CefSequence out;
  out.chips.assign(kCefChipCount, 0.0);
  const GolayPair* pairs[2] = {&u_pair, &v_pair};
  for (int block = 0; block < 2; ++block) {
    const int base = block * 2 * kCefPairLength;
    for (int n = 0; n < kCefPairLength; ++n) {
      out.chips[base + n] = pairs[block]->a[n];
      out.chips[base + kCefPairLength + n] = pairs[block]->b[n];
    }
  }
  out.u = u_pair;
  out.v = v_pair;
  return out;
}

CefWaveform upsample_1p5(const CefSequence& c) {
  // Zero-stuff by three, then take every second sample.
  rvec stuffed(3 * kCefChipCount, 0.0);
  for (int m = 0; m < kCefChipCount; ++m) stuffed[3 * m] = c.chips[m];

  CefWaveform w;
  w.samples.assign(kCefWaveformLength, 0.0);
  for (int n = 0; n < kCefWaveformLength; ++n) w.samples[n] = stuffed[2 * n];
  return w;
}

rvec ShapingFilter::impulse_response() const {
  if (mode == Mode::kFlat) return rvec{1.0};
  if (taps < 3 || taps % 2 == 0)
    throw ParameterError("ShapingFilter: taps must be odd and >= 3");
  if (cutoff <= 0.0)
    throw ParameterError("ShapingFilter: cutoff must be positive");

  const int mid = taps / 2;
  rvec h(taps);
  for (int n = 0; n < taps; ++n) {
    const int m = n - mid;
    const double x = 2.0 * cutoff * m;
    const double sinc = (m == 0) ? 1.0 : std::sin(M_PI * x) / (M_PI * x);
    const double window =
        0.54 - 0.46 * std::cos(2.0 * M_PI * n / (taps - 1));
    h[n] = 2.0 * cutoff * sinc * window;
  }
  return h;
}

double ShapingFilter::response_at(double theta) const {
  if (mode == Mode::kFlat) return 1.0;
  const rvec h = impulse_response();
  const int mid = taps / 2;
  double acc = 0.0;
  for (int n = 0; n < taps; ++n) acc += h[n] * std::cos(theta * (n - mid));
  return acc;
}

cvec ShapingFilter::response_on_bins(int n_grid) const {
  cvec out(n_grid);
  for (int k = 0; k < n_grid; ++k)
    out[k] = response_at(2.0 * M_PI * k / (kGridStrideDac * n_grid));
  return out;
}

int ShapingFilter::coefficient_bound(int n_grid) const {
  if (mode == Mode::kFlat) return n_grid;
  // Bin k sits at physical frequency k / tau_ch; the filter passes up to
  // cutoff * dac_rate.
  const double bound = cutoff * kGridStrideDac * n_grid;
  return static_cast<int>(std::min<double>(n_grid, bound));
}

rvec apply_shaping(std::span<const double> x, const ShapingFilter& f) {
  if (f.is_flat()) return rvec(x.begin(), x.end());
  const rvec h = f.impulse_response();
  const int mid = static_cast<int>(h.size()) / 2;
  rvec out(x.size(), 0.0);
  for (size_t n = 0; n < x.size(); ++n) {
    double acc = 0.0;
    for (size_t m = 0; m < h.size(); ++m) {
      const long long idx =
          static_cast<long long>(n) + mid - static_cast<long long>(m);
      if (idx >= 0 && idx < static_cast<long long>(x.size()))
        acc += h[m] * x[idx];
    }
    out[n] = acc;
  }
  return out;
}

CefWaveform apply_shaping(const CefWaveform& w, const ShapingFilter& f) {
  if (f.is_flat()) return w;
  CefWaveform out = w;
  out.samples = apply_shaping(std::span<const double>(w.samples), f);
  return out;
}

}  // namespace adce
