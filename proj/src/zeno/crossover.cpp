// crossover.cpp — geometric bracketing scan with golden-section refinement
#include "zeno/crossover.hpp"

#include <cmath>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno {

std::vector<double> SweepGrid::points() const {
  if (n < 1) throw std::domain_error("grid needs n >= 1");
  if (!(lo <= hi)) throw std::domain_error("grid needs lo <= hi");
  if (kind == Kind::Geometric && !(lo > 0.0))
    throw std::domain_error("geometric grid needs lo > 0");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    const double f = static_cast<double>(i) / (n - 1);
    out[i] = kind == Kind::Linear ? lo + f * (hi - lo) : lo * std::pow(hi / lo, f);
  }
  return out;
}

namespace {

double eval_tagged(const std::function<double(double)>& f, double tau) {
  try {
    return f(tau);
  } catch (const AccuracyError& e) {
    throw AccuracyError(std::string(e.what()) + " (while scanning tau = " +
                        std::to_string(tau) + ")");
  } catch (const ResourceError& e) {
    throw ResourceError(std::string(e.what()) + " (while scanning tau = " +
                        std::to_string(tau) + ")");
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(e.what()) + " (while scanning tau = " +
                             std::to_string(tau) + ")");
  }
}

// Golden-section search for a maximum (sign = +1) or minimum (sign = -1)
// inside [a, b]; exact ties shrink from the right so plateaus resolve to the
// smaller abscissa.
Extremum refine(const std::function<double(double)>& f, double a, double b,
                bool is_maximum, bool& converged) {
  const double sign = is_maximum ? 1.0 : -1.0;
  const double gr = 0.61803398874989485;  // (sqrt 5 - 1) / 2
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = sign * eval_tagged(f, x1);
  double f2 = sign * eval_tagged(f, x2);
  int iterations = 0;
  while (b - a > 1e-4 * (0.5 * (a + b))) {
    if (++iterations > 200) {
      converged = false;
      break;
    }
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = sign * eval_tagged(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = sign * eval_tagged(f, x2);
    }
  }
  Extremum out;
  out.tau = 0.5 * (a + b);
  out.rate = eval_tagged(f, out.tau);
  out.is_maximum = is_maximum;
  return out;
}

}  // namespace

CrossoverReport find_crossovers(const std::function<double(double)>& curve,
                                double tau_min, double tau_max, int samples) {
  if (!(tau_min > 0.0) || !(tau_max > tau_min))
    throw std::domain_error("need 0 < tau_min < tau_max");
  if (samples < 16) throw std::domain_error("need at least 16 scan samples");

  SweepGrid grid{SweepGrid::Kind::Geometric, tau_min, tau_max, samples};
  CrossoverReport report;
  report.grid = grid.points();

  // Collapse runs of equal samples (within 1e-13) to their first point so a
  // flat stretch counts once, anchored at its smallest tau.
  std::vector<double> xs, vs;
  xs.reserve(report.grid.size());
  vs.reserve(report.grid.size());
  for (double x : report.grid) {
    const double v = eval_tagged(curve, x);
    if (!vs.empty() && std::abs(v - vs.back()) <= 1e-13) continue;
    xs.push_back(x);
    vs.push_back(v);
  }

  for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
    const double d_prev = vs[k] - vs[k - 1];
    const double d_next = vs[k + 1] - vs[k];
    const bool max_bracket = d_prev > 0.0 && d_next <= 0.0;
    const bool min_bracket = d_prev < 0.0 && d_next >= 0.0;
    if (!max_bracket && !min_bracket) continue;
    report.extrema.push_back(
        refine(curve, xs[k - 1], xs[k + 1], max_bracket, report.refined));
  }
  return report;
}

std::vector<SweepRow> sweep(const std::function<double(double)>& curve,
                            const SweepGrid& grid) {
  const std::vector<double> xs = grid.points();
  std::vector<SweepRow> rows(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    rows[i].tau = xs[i];
    try {
      rows[i].value = curve(xs[i]);
    } catch (const std::exception& e) {
      rows[i].ok = false;
      rows[i].value = std::nan("");
      rows[i].error = e.what();
    }
  }
  return rows;
}

}  // namespace zeno
