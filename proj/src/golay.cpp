#include "adce/golay.hpp"

#include <algorithm>
#include <cmath>

#include "adce/dft.hpp"

namespace adce {
namespace {

void validate_seeds(int depth, const GolaySeeds& seeds) {
  if (depth < 0) throw ParameterError("generate_pair: depth must be >= 0");
  if (seeds.signs) {
    if (static_cast<int>(seeds.signs->size()) != depth)
      throw ParameterError("generate_pair: need one sign per stage");
    for (int s : *seeds.signs)
      if (s != 1 && s != -1)
        throw ParameterError("generate_pair: signs must be +/-1");
  }
  if (seeds.delays) {
    if (static_cast<int>(seeds.delays->size()) != depth)
      throw ParameterError("generate_pair: need one delay per stage");
    std::vector<int> sorted = *seeds.delays;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < depth; ++k)
      if (sorted[k] != (1 << k))
        throw ParameterError(
            "generate_pair: delays must be a permutation of the powers of "
            "two below 2^depth");
  }
}

}  // namespace

GolayPair generate_pair(int depth, const GolaySeeds& seeds) {
  validate_seeds(depth, seeds);

  std::vector<int> a{1};
  std::vector<int> b{1};
  for (int k = 0; k < depth; ++k) {
    const int sign = seeds.signs ? (*seeds.signs)[k] : 1;
    const int delay = seeds.delays ? (*seeds.delays)[k] : (1 << k);
    const int len = static_cast<int>(a.size());
    const int out_len = std::max(len, delay + len);
    std::vector<int> na(out_len, 0);
    std::vector<int> nb(out_len, 0);
    for (int n = 0; n < len; ++n) {
      na[n] += a[n];
      nb[n] += a[n];
      na[n + delay] += sign * b[n];
      nb[n + delay] -= sign * b[n];
    }
    a = std::move(na);
    b = std::move(nb);
  }
  return GolayPair{std::move(a), std::move(b)};
}

std::vector<long long> autocorr_sum(const GolayPair& p) {
  const int n = p.length();
  std::vector<long long> out(2 * n - 1, 0);
  for (int lag = -(n - 1); lag <= n - 1; ++lag) {
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
      const int j = i + lag;
      if (j < 0 || j >= n) continue;
      acc += static_cast<long long>(p.a[i]) * p.a[j];
      acc += static_cast<long long>(p.b[i]) * p.b[j];
    }
    out[lag + n - 1] = acc;
  }
  return out;
}

SpectralPair spectral_pair(const GolayPair& p, int n_dft) {
  const int n = p.length();
  if (n_dft < 2 * n - 1)
    throw ParameterError("spectral_pair: n_dft must be >= 2N-1");
  rvec a(p.a.begin(), p.a.end());
  rvec b(p.b.begin(), p.b.end());
  return SpectralPair{dft_forward(a, n_dft), dft_forward(b, n_dft), n_dft};
}

double spectral_flatness_error(const SpectralPair& s, int pair_length) {
  const double target = 2.0 * pair_length;
  double worst = 0.0;
  for (size_t k = 0; k < s.fa.size(); ++k) {
    const double sum = std::norm(s.fa[k]) + std::norm(s.fb[k]);
    worst = std::max(worst, std::abs(sum - target));
  }
  return worst;
}

}  // namespace adce
