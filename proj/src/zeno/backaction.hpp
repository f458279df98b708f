// backaction.hpp — exact survival under n repeated measurements with environment back-action
#ifndef ZENO_BACKACTION_HPP
#define ZENO_BACKACTION_HPP

#include <complex>
#include <cstdint>

#include "zeno/collective.hpp"
#include "zeno/kernels.hpp"

namespace zeno {

struct ProtocolOptions {
  // Upper bound on the logical number of summed outcome-path pairs, (2J+1)^(2n).
  std::uint64_t term_budget = 100'000'000;
};

struct ProtocolResult {
  double survival = 0.0;        // real part of the path double sum
  double rate = 0.0;            // -ln(survival) / (n tau)
  std::uint64_t term_count = 0; // logical terms (2J+1)^(2n)
  double im_residue = 0.0;      // |imaginary part| left by roundoff (exact value is real)
  double elapsed_seconds = 0.0;
};

// Survival probability of n consecutive projective measurements spaced tau
// apart, keeping every inter-interval correlation (cross-damping gamma_cross
// and back-action phase mu).  The double sum runs over outcome paths
// l = (l_1..l_n), l' = (l'_1..l'_n) with per-slot weights w(l_j) w(l'_j) and
//   exp[ -gamma sum_j d_j^2 - 2 sum_{j>k} d_k d_j gamma_cross(j-k)
//        - i delta sum_j d_j s_j + 2 i sum_{j>k} mu(j-k) s_k d_j ],
// d_j = l_j - l'_j,  s_j = l_j + l'_j.  OpenMP-parallel over fixed chunks of
// the leading path index with a fixed combine order, so results are
// byte-identical for any thread count.
ProtocolResult survival_with_backaction(double tau, int n_intervals,
                                        const CoherentWeights& state,
                                        const KernelSet& kernels,
                                        const ProtocolOptions& opts = {});

// Serial reference: plain full enumeration of all (2J+1)^(2n) path pairs with
// per-term exponentials; no tables, no symmetry halving.  Kept as the ground
// truth the parallel path is tested (and benchmarked) against.
std::complex<double> survival_backaction_reference(double tau, int n_intervals,
                                                   const CoherentWeights& state,
                                                   const KernelSet& kernels);

// Literal transcriptions of the n = 2 and n = 3 sums (independent oracles).
double survival_backaction_n2(double tau, const CoherentWeights& state,
                              const KernelSet& kernels);
double survival_backaction_n3(double tau, const CoherentWeights& state,
                              const KernelSet& kernels);

// Rate per unit time over the whole protocol: -ln S / (n tau).
double gamma_rate_n(double tau, int n_intervals, const CoherentWeights& state,
                    const KernelSet& kernels, const ProtocolOptions& opts = {});

}  // namespace zeno

#endif
