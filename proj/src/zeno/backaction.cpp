// backaction.cpp — path double sums: table-driven OpenMP engine plus plain serial reference
#include "zeno/backaction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

std::uint64_t checked_term_count(int dim, int n, std::uint64_t budget) {
  long double count = 1.0L;
  for (int i = 0; i < 2 * n; ++i) count *= dim;
  if (count > static_cast<long double>(budget)) {
    char txt[64];
    std::snprintf(txt, sizeof(txt), "%.0Lf", count);
    throw ResourceError(std::string("protocol would sum ") + txt +
                        " path pairs; budget is " + std::to_string(budget));
  }
  return static_cast<std::uint64_t>(count + 0.5L);
}

// Precomputed per-(tau, n) factors.  slot[i * dim + k] covers everything one
// path slot contributes on its own; damp/phase cover the pairwise couplings,
// indexed by the integer products d_k*d_j and s_k*d_j shifted by `off`.
struct Tables {
  int dim = 0;
  int two_j = 0;
  int off = 0;  // (2J)^2
  std::vector<std::complex<double>> slot;
  std::vector<std::vector<double>> damp;
  std::vector<std::vector<std::complex<double>>> phase;
};

Tables build_tables(const CoherentWeights& state, const KernelSlice& slice, int n) {
  Tables tb;
  tb.dim = state.dim;
  tb.two_j = state.dim - 1;
  tb.off = tb.two_j * tb.two_j;
  tb.slot.resize(static_cast<std::size_t>(tb.dim) * tb.dim);
  for (int i = 0; i < tb.dim; ++i) {
    for (int k = 0; k < tb.dim; ++k) {
      const int d = i - k;
      const int sig = i + k - tb.two_j;
      const double mag = state.w[i] * state.w[k] * std::exp(-slice.gamma * d * d);
      const double ph = -slice.delta * d * sig;
      tb.slot[static_cast<std::size_t>(i) * tb.dim + k] =
          mag * std::complex<double>(std::cos(ph), std::sin(ph));
    }
  }
  tb.damp.resize(n);
  tb.phase.resize(n);
  for (int lag = 1; lag < n; ++lag) {
    auto& dl = tb.damp[lag];
    auto& pl = tb.phase[lag];
    dl.resize(2 * tb.off + 1);
    pl.resize(2 * tb.off + 1);
    for (int v = -tb.off; v <= tb.off; ++v) {
      dl[v + tb.off] = std::exp(-2.0 * v * slice.gamma_cross[lag]);
      const double ph = 2.0 * v * slice.mu[lag];
      pl[v + tb.off] = {std::cos(ph), std::sin(ph)};
    }
  }
  return tb;
}

// Sums one partition (a fixed first path l): the l' = l leaf once plus twice
// the real part of every lexicographically greater second path.
class PartitionWorker {
 public:
  PartitionWorker(const Tables& tb, int n) : tb_(tb), n_(n), li_(n), d_(n), sig_(n) {}

  // Returns the partition's (real) contribution to the survival sum.
  double run(std::uint64_t t_index) {
    for (int j = n_ - 1; j >= 0; --j) {
      li_[j] = static_cast<int>(t_index % tb_.dim);
      t_index /= tb_.dim;
    }
    double weight_sq = 1.0;
    for (int j = 0; j < n_; ++j) {
      const double wi = tb_.slot[static_cast<std::size_t>(li_[j]) * tb_.dim + li_[j]].real();
      weight_sq *= wi;  // slot diagonal holds w_i^2
    }
    if (weight_sq == 0.0) return 0.0;
    strict_ = 0.0;
    descend(0, true, 1.0);
    return weight_sq + 2.0 * strict_.real();
  }

 private:
  void descend(int j, bool tight, std::complex<double> partial) {
    if (j == n_) {
      if (!tight) strict_ += partial;  // the tight leaf is the weight_sq term
      return;
    }
    const int ij = li_[j];
    const int lo = tight ? ij : 0;
    for (int ik = lo; ik < tb_.dim; ++ik) {
      const bool next_tight = tight && ik == ij;
      if (next_tight && j == n_ - 1) continue;  // full-tight leaf handled in run()
      std::complex<double> f = tb_.slot[static_cast<std::size_t>(ij) * tb_.dim + ik];
      if (f.real() == 0.0 && f.imag() == 0.0) continue;
      const int dj = ij - ik;
      const int sj = ij + ik - tb_.two_j;
      if (dj != 0) {
        for (int k = 0; k < j; ++k) {
          const int lag = j - k;
          f *= tb_.damp[lag][d_[k] * dj + tb_.off] * tb_.phase[lag][sig_[k] * dj + tb_.off];
        }
      }
      d_[j] = dj;
      sig_[j] = sj;
      descend(j + 1, next_tight, partial * f);
    }
  }

  const Tables& tb_;
  int n_;
  std::vector<int> li_, d_, sig_;
  std::complex<double> strict_;
};

}  // namespace

ProtocolResult survival_with_backaction(double tau, int n_intervals,
                                        const CoherentWeights& state,
                                        const KernelSet& kernels,
                                        const ProtocolOptions& opts) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  if (n_intervals < 1) throw std::domain_error("n_intervals must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  ProtocolResult res;
  res.term_count = checked_term_count(state.dim, n_intervals, opts.term_budget);

  const KernelSlice slice = make_slice(kernels, tau, n_intervals);
  const Tables tb = build_tables(state, slice, n_intervals);

  std::uint64_t partitions = 1;
  for (int i = 0; i < n_intervals; ++i) partitions *= state.dim;
  const int n_chunks = static_cast<int>(std::min<std::uint64_t>(partitions, 4096));
  const std::uint64_t chunk_len = (partitions + n_chunks - 1) / n_chunks;

  std::vector<double> chunk_sum(n_chunks, 0.0);
#pragma omp parallel
  {
    PartitionWorker worker(tb, n_intervals);
#pragma omp for schedule(static)
    for (int c = 0; c < n_chunks; ++c) {
      const std::uint64_t lo = c * chunk_len;
      const std::uint64_t hi = std::min(partitions, lo + chunk_len);
      double acc = 0.0;
      for (std::uint64_t t = lo; t < hi; ++t) acc += worker.run(t);
      chunk_sum[c] = acc;
    }
  }
  double total = 0.0;
  for (int c = 0; c < n_chunks; ++c) total += chunk_sum[c];

  res.survival = total;
  res.im_residue = 0.0;  // conjugate-pair halving keeps the sum real by construction
  if (tau > 0.0) {
    if (!(total > 0.0))
      throw AccuracyError("path sum is not positive at tau = " + std::to_string(tau));
    res.rate = -std::log(total) / (n_intervals * tau);
  }
  res.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

std::complex<double> survival_backaction_reference(double tau, int n_intervals,
                                                   const CoherentWeights& state,
                                                   const KernelSet& kernels) {
  if (tau < 0.0 || !std::isfinite(tau)) throw std::domain_error("tau must be finite and >= 0");
  if (n_intervals < 1) throw std::domain_error("n_intervals must be >= 1");
  const KernelSlice slice = make_slice(kernels, tau, n_intervals);
  const int dim = state.dim;
  const int two_j = dim - 1;
  const int n = n_intervals;

  std::vector<int> idx(2 * n, 0);
  std::vector<int> d(n), sig(n);
  std::complex<double> acc = 0.0;
  while (true) {
    double weight = 1.0;
    for (int j = 0; j < n; ++j) weight *= state.w[idx[j]] * state.w[idx[n + j]];
    if (weight != 0.0) {
      for (int j = 0; j < n; ++j) {
        d[j] = idx[j] - idx[n + j];
        sig[j] = idx[j] + idx[n + j] - two_j;
      }
      double re = 0.0, im = 0.0;
      for (int j = 0; j < n; ++j) {
        re -= slice.gamma * d[j] * d[j];
        im -= slice.delta * d[j] * sig[j];
        for (int k = 0; k < j; ++k) {
          re -= 2.0 * d[k] * d[j] * slice.gamma_cross[j - k];
          im += 2.0 * slice.mu[j - k] * sig[k] * d[j];
        }
      }
      acc += weight * std::exp(re) * std::complex<double>(std::cos(im), std::sin(im));
    }
    int pos = 2 * n - 1;
    while (pos >= 0 && idx[pos] == dim - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return acc;
}

double survival_backaction_n2(double tau, const CoherentWeights& state,
                              const KernelSet& kernels) {
  const double g = kernels.gamma(tau);
  const double del = kernels.delta(tau);
  const double gx1 = kernels.gamma_cross(tau, 1);
  const double mu1 = kernels.mu(tau, 1);
  const int dim = state.dim;
  const int two_j = dim - 1;
  std::complex<double> acc = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int ap = 0; ap < dim; ++ap)
      for (int b = 0; b < dim; ++b)
        for (int bp = 0; bp < dim; ++bp) {
          const int d1 = a - ap, d2 = b - bp;
          const int s1 = a + ap - two_j, s2 = b + bp - two_j;
          const double w = state.w[a] * state.w[ap] * state.w[b] * state.w[bp];
          const double re = -g * (d1 * d1 + d2 * d2) - 2.0 * d1 * d2 * gx1;
          const double im = -del * (d1 * s1 + d2 * s2) + 2.0 * mu1 * s1 * d2;
          acc += w * std::exp(re) * std::complex<double>(std::cos(im), std::sin(im));
        }
  return acc.real();
}

double survival_backaction_n3(double tau, const CoherentWeights& state,
                              const KernelSet& kernels) {
  const double g = kernels.gamma(tau);
  const double del = kernels.delta(tau);
  const double gx1 = kernels.gamma_cross(tau, 1);
  const double gx2 = kernels.gamma_cross(tau, 2);
  const double mu1 = kernels.mu(tau, 1);
  const double mu2 = kernels.mu(tau, 2);
  const int dim = state.dim;
  const int two_j = dim - 1;
  std::complex<double> acc = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int ap = 0; ap < dim; ++ap)
      for (int b = 0; b < dim; ++b)
        for (int bp = 0; bp < dim; ++bp)
          for (int c = 0; c < dim; ++c)
            for (int cp = 0; cp < dim; ++cp) {
              const int d1 = a - ap, d2 = b - bp, d3 = c - cp;
              const int s1 = a + ap - two_j, s2 = b + bp - two_j, s3 = c + cp - two_j;
              const double w = state.w[a] * state.w[ap] * state.w[b] * state.w[bp] *
                               state.w[c] * state.w[cp];
              const double re = -g * (d1 * d1 + d2 * d2 + d3 * d3) -
                                2.0 * (d1 * d2 + d2 * d3) * gx1 - 2.0 * d1 * d3 * gx2;
              const double im = -del * (d1 * s1 + d2 * s2 + d3 * s3) +
                                2.0 * mu1 * (s1 * d2 + s2 * d3) + 2.0 * mu2 * s1 * d3;
              acc += w * std::exp(re) * std::complex<double>(std::cos(im), std::sin(im));
            }
  return acc.real();
}

double gamma_rate_n(double tau, int n_intervals, const CoherentWeights& state,
                    const KernelSet& kernels, const ProtocolOptions& opts) {
  if (!(tau > 0.0)) throw std::domain_error("tau must be > 0");
  return survival_with_backaction(tau, n_intervals, state, kernels, opts).rate;
}

}  // namespace zeno
