#include "adce/nyquist_rx.hpp"

#include <algorithm>
#include <cmath>

namespace adce {

ReceivedCef transmit_cef(const CefWaveform& w, const SparseChannel& h) {
  ReceivedCef rx;
  rx.n_grid = h.n_grid;
  for (CefSegment s : kAllSegments) {
    const int base = CefWaveform::segment_offset(s);
    const int span_len =
        std::min<int>(384, static_cast<int>(w.samples.size()) - base);
    std::span<const double> slice(w.samples.data() + base, span_len);
    rx.segments[static_cast<size_t>(s)] =
        apply_channel(slice, h, kGridStrideDac);
  }
  return rx;
}

cvec correlate(std::span<const cplx> s_r, std::span<const double> g) {
  const int ns = static_cast<int>(s_r.size());
  const int ng = static_cast<int>(g.size());
  if (ns == 0 || ng == 0) throw ParameterError("correlate: empty input");

  std::vector<std::pair<int, double>> support;
  support.reserve(ng);
  for (int j = 0; j < ng; ++j)
    if (g[j] != 0.0) support.emplace_back(j, g[j]);

  cvec out(ns + ng - 1, cplx{0.0, 0.0});
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    const int lag = i - (ng - 1);
    cplx acc{0.0, 0.0};
    for (const auto& [j, gj] : support) {
      const int n = j + lag;
      if (n >= 0 && n < ns) acc += s_r[n] * gj;
    }
    out[i] = acc;
  }
  return out;
}

namespace {

// Reads the pair-summed correlator outputs on the delay grid without
// materializing full correlation vectors.
cvec pair_correlation(const cvec& rx_a, const rvec& tpl_a, const cvec& rx_b,
                      const rvec& tpl_b, int n_grid, int lag_stride) {
  const auto support_of = [](const rvec& t) {
    std::vector<std::pair<int, double>> s;
    s.reserve(t.size());
    for (size_t j = 0; j < t.size(); ++j)
      if (t[j] != 0.0) s.emplace_back(static_cast<int>(j), t[j]);
    return s;
  };
  const auto sup_a = support_of(tpl_a);
  const auto sup_b = support_of(tpl_b);

  cvec out(n_grid, cplx{0.0, 0.0});
  for (int n = 0; n < n_grid; ++n) {
    cplx acc{0.0, 0.0};
    const int lag = lag_stride * n;
    for (const auto& [j, tj] : sup_a) {
      const size_t idx = static_cast<size_t>(j) + lag;
      if (idx < rx_a.size()) acc += rx_a[idx] * tj;
    }
    for (const auto& [j, tj] : sup_b) {
      const size_t idx = static_cast<size_t>(j) + lag;
      if (idx < rx_b.size()) acc += rx_b[idx] * tj;
    }
    out[n] = acc;
  }
  return out;
}

// Inverse of the 1.5x upsampling: back onto the chip grid. Odd chips were
// never transmitted, so odd outputs are zero.
cvec downsample_to_chips(const cvec& x) {
  const size_t n_chips = (2 * x.size()) / 3 + 1;
  cvec out(n_chips, cplx{0.0, 0.0});
  for (size_t m = 0; m < n_chips; m += 2) {
    const size_t src = 3 * m / 2;
    if (src < x.size()) out[m] = x[src];
  }
  return out;
}

rvec to_rvec(std::span<const double> s) { return rvec(s.begin(), s.end()); }

// DAC-grid transmit samples of one segment (nonzero every third sample).
rvec dac_template(const CefWaveform& w, CefSegment s) {
  const int base = CefWaveform::segment_offset(s);
  const int len =
      std::min<int>(384, static_cast<int>(w.samples.size()) - base);
  return rvec(w.samples.begin() + base, w.samples.begin() + base + len);
}

}  // namespace

EstimationResult estimate_nyquist(const ReceivedCef& rx, const CefSequence& cef,
                                  CorrelationGrid mode) {
  const int n = rx.n_grid;
  constexpr size_t kMinStream = kGridStrideDac * (kGridSegmentLength - 1) + 1;
  for (CefSegment s : kAllSegments) {
    if (rx.segment(s).size() < kMinStream)
      throw ParameterError("estimate_nyquist: received stream too short");
  }

  cvec est_u, est_v;
  if (mode == CorrelationGrid::kDacGrid) {
    // Upsampled templates on the DAC grid, lags read at the three-sample
    // stride of the delay lattice.
    const CefWaveform w = upsample_1p5(cef);
    est_u = pair_correlation(rx.segment(CefSegment::kUa),
                             dac_template(w, CefSegment::kUa),
                             rx.segment(CefSegment::kUb),
                             dac_template(w, CefSegment::kUb), n,
                             kGridStrideDac);
    est_v = pair_correlation(rx.segment(CefSegment::kVa),
                             dac_template(w, CefSegment::kVa),
                             rx.segment(CefSegment::kVb),
                             dac_template(w, CefSegment::kVb), n,
                             kGridStrideDac);
  } else {
    est_u = pair_correlation(
        downsample_to_chips(rx.segment(CefSegment::kUa)),
        to_rvec(cef.segment_chips(CefSegment::kUa)),
        downsample_to_chips(rx.segment(CefSegment::kUb)),
        to_rvec(cef.segment_chips(CefSegment::kUb)), n, 2);
    est_v = pair_correlation(
        downsample_to_chips(rx.segment(CefSegment::kVa)),
        to_rvec(cef.segment_chips(CefSegment::kVa)),
        downsample_to_chips(rx.segment(CefSegment::kVb)),
        to_rvec(cef.segment_chips(CefSegment::kVb)), n, 2);
  }

  EstimationResult res;
  res.estimate.resize(n);
  const double scale = 1.0 / (2.0 * kPairCorrelationPeak);
  for (int i = 0; i < n; ++i) res.estimate[i] = (est_u[i] + est_v[i]) * scale;

  double peak = 0.0;
  for (const auto& v : res.estimate) peak = std::max(peak, std::abs(v));
  const double floor = 1e-8 * peak;
  for (int i = 0; i < n; ++i)
    if (std::abs(res.estimate[i]) > floor) res.support.push_back(i);
  return res;
}

}  // namespace adce
