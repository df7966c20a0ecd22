#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "adce/common.hpp"
#include "adce/txframe.hpp"

namespace adce {

// The five sub-Nyquist acquisition architectures, plus the full-rate
// reference. Direct picks arbitrary coefficients with per-coefficient
// hardware; lowest-k models a narrowed receive filter; multiband splits
// the passband into disjoint consecutive groups; the foldable variants
// subsample in time and rely on transmit-side notching to keep exactly one
// surviving coefficient per aliasing group.
enum class SchemeKind {
  kNyquist,
  kDirect,
  kLowestK,
  kMultiband,
  kFoldable,
  kFoldableMultiband,
};

bool is_foldable(SchemeKind k);
const char* scheme_name(SchemeKind k);
SchemeKind scheme_from_name(const std::string& name);

struct SchemeDescriptor {
  SchemeKind kind = SchemeKind::kDirect;
  int bands = 4;  // multiband variants only
  std::uint64_t seed = 0;
};

/**
 * The set of acquired Fourier-coefficient indices. Always sorted, always
 * exactly K = N/q entries. Foldable sets carry one index per residue class
 * modulo K; multiband sets carry `bands` disjoint runs of consecutive
 * indices whose sizes differ by at most one.
 */
struct CoefficientSet {
  std::vector<int> indices;
  int n_grid = 0;
  int q = 1;
  SchemeKind scheme = SchemeKind::kDirect;
  std::vector<std::pair<int, int>> bands;  // (start, length) runs

  int count() const { return static_cast<int>(indices.size()); }
};

CoefficientSet select_coefficients(const SchemeDescriptor& desc, int n_grid,
                                   int k_count);

// One index per line, for reproducibility dumps.
std::string serialize_indices(const CoefficientSet& set);

// Fourier-series coefficients of a delay-grid signal observed over the
// tau_ch window: the length-n DFT of the (periodized) signal scaled by
// 1/tau_ch.
cvec fourier_coeffs(std::span<const cplx> s, int n_grid);

/**
 * Delay-grid transmit representation of the four CEF segments, each
 * zero-padded to the observation window. This is the domain in which
 * notching, folding and coefficient acquisition operate.
 */
struct GridTx {
  std::array<cvec, 4> segments;
  int n_grid = 0;

  const cvec& segment(CefSegment s) const {
    return segments[static_cast<size_t>(s)];
  }
  cvec& segment(CefSegment s) { return segments[static_cast<size_t>(s)]; }
};

GridTx make_grid_tx(const CefWaveform& w, int n_grid);

// Zeroes every DFT bin outside the coefficient set, segment by segment, so
// that time-domain subsampling aliases exactly one surviving coefficient
// into each folded bin. Only foldable-kind sets may be used.
GridTx notch_transmit(const GridTx& tx, const CoefficientSet& set);

// Folded acquisition: keep every q-th delay-grid sample, take the length-K
// DFT and scale by q/tau_ch. With a foldable-notched transmit the output
// bins equal the directly acquired coefficients, reindexed by residue
// class.
cvec subsample_fold(std::span<const cplx> s, int q);

// Places folded bins at the positions of their coefficient indices in the
// sorted set.
cvec reorder_folded(const cvec& folded, const CoefficientSet& set);

enum class MeasurementSource { kPairU, kPairV, kAveraged };

struct MeasurementVector {
  cvec values;  // indexed like CoefficientSet::indices
  MeasurementSource source = MeasurementSource::kPairU;
  double scale = 0.0;  // summed template power spectrum (constant over bins)
};

// Sum of the two template power spectra on the acquired bins. For a
// complementary pair this is the same constant in every bin; the returned
// value is that constant and deviations beyond tolerance throw.
double pair_spectral_constant(std::span<const cplx> fa,
                              std::span<const cplx> fb);

// Coefficient-domain matched filter for one complementary pair: multiply
// each sequence's coefficients by the conjugate of its template spectrum
// and sum. fa/fb/h are indexed like the coefficient vectors.
MeasurementVector matched_filter(std::span<const cplx> d_a,
                                 std::span<const cplx> d_b,
                                 std::span<const cplx> fa,
                                 std::span<const cplx> fb,
                                 std::span<const cplx> h_tr,
                                 MeasurementSource source);

}  // namespace adce
