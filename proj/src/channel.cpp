#include "adce/channel.hpp"

#include <algorithm>
#include <cmath>

namespace adce {

SparseChannel random_channel(int n_grid, int n_paths, GainModel model,
                             Rng& rng) {
  if (n_paths < 1 || n_paths > n_grid)
    throw ParameterError("random_channel: need 1 <= L <= N");

  SparseChannel ch;
  ch.n_grid = n_grid;
  ch.tau_ch = tau_ch_sec(n_grid);

  std::vector<int> delays;
  delays.reserve(n_paths);
  while (static_cast<int>(delays.size()) < n_paths) {
    const int d = static_cast<int>(rng.next_index(n_grid));
    if (std::find(delays.begin(), delays.end(), d) == delays.end())
      delays.push_back(d);
  }

  std::vector<cplx> gains(n_paths);
  if (model == GainModel::kUnit) {
    for (auto& g : gains) g = cplx{1.0, 0.0};
  } else {
    for (auto& g : gains) g = rng.next_cgaussian();
  }
  double power = 0.0;
  for (const auto& g : gains) power += std::norm(g);
  const double scale = 1.0 / std::sqrt(power);
  for (auto& g : gains) g *= scale;

  ch.taps.resize(n_paths);
  for (int l = 0; l < n_paths; ++l) ch.taps[l] = {delays[l], gains[l]};
  std::sort(ch.taps.begin(), ch.taps.end(),
            [](const auto& x, const auto& y) { return x.delay < y.delay; });
  return ch;
}

cvec apply_channel(std::span<const cplx> x, const SparseChannel& h,
                   int delay_stride) {
  const size_t out_len = x.size() + h.max_delay() * delay_stride;
  cvec y(out_len, cplx{0.0, 0.0});
  for (const auto& tap : h.taps) {
    const size_t shift = static_cast<size_t>(tap.delay) * delay_stride;
    for (size_t n = 0; n < x.size(); ++n) y[n + shift] += tap.gain * x[n];
  }
  return y;
}

cvec apply_channel(std::span<const double> x, const SparseChannel& h,
                   int delay_stride) {
  cvec tmp(x.size());
  for (size_t i = 0; i < x.size(); ++i) tmp[i] = cplx(x[i], 0.0);
  return apply_channel(std::span<const cplx>(tmp), h, delay_stride);
}

double noise_variance(double snr_db, double signal_power_ref) {
  if (signal_power_ref <= 0.0)
    throw ParameterError("noise: reference power must be positive");
  return signal_power_ref / std::pow(10.0, snr_db / 10.0);
}

cvec add_noise(std::span<const cplx> x, const NoiseSpec& spec,
               double signal_power_ref) {
  cvec y(x.begin(), x.end());
  if (spec.noiseless()) {
    if (signal_power_ref <= 0.0)
      throw ParameterError("noise: reference power must be positive");
    return y;
  }
  const double sigma = std::sqrt(noise_variance(spec.snr_db, signal_power_ref));
  Rng rng(spec.seed);
  for (auto& v : y) v += sigma * rng.next_cgaussian();
  return y;
}

}  // namespace adce
