#pragma once

#include <span>

#include "adce/common.hpp"

namespace adce {

// Unnormalized DFT convention, used everywhere in this project:
//   forward:  X[k] = sum_n x[n] exp(-j 2 pi k n / N)
//   inverse:  x[n] = (1/N) sum_k X[k] exp(+j 2 pi k n / N)
// Arbitrary lengths are supported (FFTW backend). Shorter inputs are
// zero-padded, longer inputs are folded modulo N, which matches the
// periodic Fourier-series view of a windowed grid signal.
cvec dft_forward(std::span<const cplx> x, int n);
cvec dft_inverse(std::span<const cplx> x, int n);
cvec dft_forward(std::span<const double> x, int n);

// Folds x modulo n (periodization). Identity when x.size() <= n apart from
// zero padding.
cvec fold_mod(std::span<const cplx> x, int n);

// Creates FFTW plans for the given size ahead of time so that worker threads
// never touch the planner.
void dft_warm_plans(int n);

}  // namespace adce
