// crossover.hpp — locating rate maxima/minima of a tau-dependent curve
#ifndef ZENO_CROSSOVER_HPP
#define ZENO_CROSSOVER_HPP

#include <functional>
#include <string>
#include <vector>

namespace zeno {

// A sampling grid over an interval, either linear or geometric.
struct SweepGrid {
  enum class Kind { Linear, Geometric };

  Kind kind = Kind::Linear;
  double lo = 0.0;
  double hi = 1.0;
  int n = 100;

  std::vector<double> points() const;
};

struct Extremum {
  double tau = 0.0;
  double rate = 0.0;
  bool is_maximum = false;
};

struct CrossoverReport {
  std::vector<Extremum> extrema;  // strictly increasing in tau, kinds alternating
  std::vector<double> grid;       // the coarse scan points used for bracketing
  bool refined = true;            // golden-section refinement converged everywhere
};

// Scans curve(tau) on a geometric grid of `samples` points (>= 16) over
// [tau_min, tau_max], collapses consecutive samples equal within 1e-13 to one
// point, brackets every interior sign change of the discrete slope (maxima
// where the slope turns from positive to <= 0, minima symmetrically), and
// refines each bracket by golden-section search down to a relative width of
// 1e-4.  Ties during refinement keep the left interval, so a plateau reports
// its smallest tau.  Endpoints are never reported; a monotone curve yields an
// empty list.  A curve evaluation that throws is re-thrown with the offending
// tau in the message (accuracy/resource errors keep their type).
CrossoverReport find_crossovers(const std::function<double(double)>& curve,
                                double tau_min, double tau_max, int samples);

// One evaluated point of a sweep; `ok` is false when the curve threw, with the
// exception text preserved.
struct SweepRow {
  double tau = 0.0;
  double value = 0.0;
  bool ok = true;
  std::string error;
};

std::vector<SweepRow> sweep(const std::function<double(double)>& curve,
                            const SweepGrid& grid);

}  // namespace zeno

#endif
