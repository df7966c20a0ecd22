#include "adce/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace adce {
namespace {

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

std::mutex g_planner_mutex;
std::map<int, PlanPair>& plan_cache() {
  static std::map<int, PlanPair> cache;
  return cache;
}

// FFTW planning is not thread safe; execution with the new-array interface
// is. Plans are created once per size with FFTW_ESTIMATE so the chosen
// algorithm (and therefore the output bit pattern) is stable across runs.
PlanPair& plans_for(int n) {
  std::lock_guard<std::mutex> lock(g_planner_mutex);
  auto& cache = plan_cache();
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  PlanPair p;
  cvec buf(static_cast<size_t>(n));
  auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  p.forward = fftw_plan_dft_1d(n, raw, raw, FFTW_FORWARD, flags);
  p.backward = fftw_plan_dft_1d(n, raw, raw, FFTW_BACKWARD, flags);
  return cache.emplace(n, p).first->second;
}

cvec run(std::span<const cplx> x, int n, bool forward) {
  if (n <= 0) throw ParameterError("dft: transform length must be positive");
  cvec buf = fold_mod(x, n);
  auto& plans = plans_for(n);
  auto* raw = reinterpret_cast<fftw_complex*>(buf.data());
  fftw_execute_dft(forward ? plans.forward : plans.backward, raw, raw);
  if (!forward) {
    const double inv = 1.0 / n;
    for (auto& v : buf) v *= inv;
  }
  return buf;
}

}  // namespace

cvec fold_mod(std::span<const cplx> x, int n) {
  cvec out(static_cast<size_t>(n), cplx{0.0, 0.0});
  for (size_t i = 0; i < x.size(); ++i) out[i % n] += x[i];
  return out;
}

cvec dft_forward(std::span<const cplx> x, int n) { return run(x, n, true); }

cvec dft_inverse(std::span<const cplx> x, int n) { return run(x, n, false); }

cvec dft_forward(std::span<const double> x, int n) {
  cvec tmp(x.size());
  for (size_t i = 0; i < x.size(); ++i) tmp[i] = cplx(x[i], 0.0);
  return run(tmp, n, true);
}

void dft_warm_plans(int n) { plans_for(n); }

}  // namespace adce
