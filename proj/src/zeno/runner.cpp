// runner.cpp — mode dispatch, parallel sweeps, CSV/JSON rendering
#include "zeno/runner.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "zeno/backaction.hpp"
#include "zeno/collective.hpp"
#include "zeno/errors.hpp"
#include "zeno/fock.hpp"
#include "zeno/kernels.hpp"
#include "zeno/master_equation.hpp"
#include "zeno/single_spin.hpp"

namespace zeno {

namespace {

struct RowFailure {
  std::string message;
  int code = 0;  // 2 accuracy, 3 resource
};

// Evaluates one row, translating exceptions into a failure record (exceptions
// must not cross the OpenMP region).
template <typename Fn>
RowFailure guarded(double tau, Fn&& fn) {
  try {
    fn();
    return {};
  } catch (const ResourceError& e) {
    return {std::string(e.what()) + " (tau = " + std::to_string(tau) + ")", 3};
  } catch (const AccuracyError& e) {
    return {std::string(e.what()) + " (tau = " + std::to_string(tau) + ")", 2};
  } catch (const std::exception& e) {
    return {std::string(e.what()) + " (tau = " + std::to_string(tau) + ")", 2};
  }
}

void collect_failures(const std::vector<RowFailure>& failures, RunResult& result) {
  for (const RowFailure& f : failures) {
    if (f.code == 0) continue;
    result.diagnostics.push_back(f.message);
    result.exit_code = std::max(result.exit_code, f.code);
  }
}

std::vector<Json> nan_row(std::size_t width, double tau) {
  std::vector<Json> row(width, Json(std::nan("")));
  row[0] = tau;
  return row;
}

void run_single(const RunConfig& cfg, RunResult& out) {
  const KernelSet kernels(cfg.bath, cfg.quad_control());
  const PreparedState state{cfg.system.theta, cfg.system.phi};
  const std::vector<double> taus = cfg.schedule.grid.points();

  out.columns = {"tau", "gamma_rate", "survival", "gamma_rate_expansion",
                 "gamma_rate_rwa"};
  out.rows.assign(taus.size(), {});
  std::vector<RowFailure> failures(taus.size());

#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(taus.size()); ++i) {
    const double tau = taus[i];
    failures[i] = guarded(tau, [&] {
      const double s = survival_one_interval(tau, state, kernels);
      out.rows[i] = {tau, gamma_rate(tau, state, kernels), s,
                     gamma_rate_expansion(tau, kernels),
                     decay_rate_rwa(tau, cfg.system.omega0, cfg.bath, kernels.control())};
    });
    if (failures[i].code != 0) out.rows[i] = nan_row(out.columns.size(), tau);
  }
  collect_failures(failures, out);
}

void run_collective(const RunConfig& cfg, RunResult& out) {
  const KernelSet kernels(cfg.bath, cfg.quad_control());
  const CoherentWeights state =
      coherent_weights(cfg.system.j, cfg.system.theta, cfg.system.phi);
  const std::vector<double> taus = cfg.schedule.grid.points();

  out.columns = {"tau", "gamma_rate", "survival"};
  if (cfg.system.has_chi) out.columns.push_back("survival_chi");
  out.rows.assign(taus.size(), {});
  std::vector<RowFailure> failures(taus.size());

#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(taus.size()); ++i) {
    const double tau = taus[i];
    failures[i] = guarded(tau, [&] {
      const double s = survival_collective(tau, state, kernels);
      std::vector<Json> row = {tau, gamma_rate_collective(tau, state, kernels), s};
      if (cfg.system.has_chi)
        row.push_back(survival_chi_interaction(tau, state, cfg.system.chi));
      out.rows[i] = std::move(row);
    });
    if (failures[i].code != 0) out.rows[i] = nan_row(out.columns.size(), tau);
  }
  collect_failures(failures, out);
}

void run_correlated(const RunConfig& cfg, RunResult& out) {
  const KernelSet kernels(cfg.bath, cfg.quad_control());
  const CoherentWeights state =
      coherent_weights(cfg.system.j, cfg.system.theta, cfg.system.phi);
  const std::vector<double> taus = cfg.schedule.grid.points();
  ProtocolOptions opts;
  opts.term_budget = cfg.numerics.term_budget;
  const int n = cfg.schedule.n_measurements;

  out.columns = {"tau", "gamma_rate", "survival", "n", "j", "term_count"};
  out.rows.assign(taus.size(), {});
  std::vector<RowFailure> failures(taus.size());

  // Serial over rows: the path sum is parallel inside.
  for (int i = 0; i < static_cast<int>(taus.size()); ++i) {
    const double tau = taus[i];
    failures[i] = guarded(tau, [&] {
      const ProtocolResult r = survival_with_backaction(tau, n, state, kernels, opts);
      out.rows[i] = {tau, r.rate, r.survival, n, cfg.system.j, r.term_count};
    });
    if (failures[i].code != 0) out.rows[i] = nan_row(out.columns.size(), tau);
  }
  collect_failures(failures, out);
}

void run_master(const RunConfig& cfg, RunResult& out) {
  const CoherentWeights state =
      coherent_weights(cfg.system.j, cfg.system.theta, cfg.system.phi);
  const std::vector<double> taus = cfg.schedule.grid.points();
  const QuadratureControl ctl = cfg.quad_control();

  out.columns = {"tau", "gamma_rate", "survival", "trace_drift", "herm_drift"};
  out.rows.assign(taus.size(), {});
  std::vector<RowFailure> failures(taus.size());

#pragma omp parallel for schedule(static)
  for (int i = 0; i < static_cast<int>(taus.size()); ++i) {
    const double tau = taus[i];
    failures[i] = guarded(tau, [&] {
      const DissipativeRate r = gamma_rate_dissipative(
          tau, cfg.system.j, cfg.system.omega0, cfg.system.delta, cfg.bath, state,
          tau / cfg.numerics.me_steps, cfg.schedule.rotation, ctl);
      out.rows[i] = {tau, r.rate, r.survival, r.trace_drift, r.herm_drift};
    });
    if (failures[i].code != 0) out.rows[i] = nan_row(out.columns.size(), tau);
  }
  collect_failures(failures, out);
}

void run_crossover(const RunConfig& cfg, RunResult& out) {
  const KernelSet kernels(cfg.bath, cfg.quad_control());
  const CoherentWeights state =
      coherent_weights(cfg.system.j, cfg.system.theta, cfg.system.phi);
  const PreparedState single_state{cfg.system.theta, cfg.system.phi};
  ProtocolOptions opts;
  opts.term_budget = cfg.numerics.term_budget;

  std::function<double(double)> curve;
  switch (cfg.crossover.curve) {
    case RunMode::Single:
      curve = [&](double tau) { return gamma_rate(tau, single_state, kernels); };
      break;
    case RunMode::Collective:
      curve = [&](double tau) { return gamma_rate_collective(tau, state, kernels); };
      break;
    case RunMode::Correlated:
      curve = [&](double tau) {
        return gamma_rate_n(tau, cfg.schedule.n_measurements, state, kernels, opts);
      };
      break;
    default:
      curve = [&](double tau) {
        return gamma_rate_dissipative(tau, cfg.system.j, cfg.system.omega0,
                                      cfg.system.delta, cfg.bath, state,
                                      tau / cfg.numerics.me_steps,
                                      cfg.schedule.rotation, cfg.quad_control())
            .rate;
      };
      break;
  }

  const CrossoverReport report = find_crossovers(
      curve, cfg.schedule.grid.lo, cfg.schedule.grid.hi, cfg.crossover.samples);

  out.columns = {"tau", "rate", "kind"};
  for (const Extremum& e : report.extrema)
    out.rows.push_back({e.tau, e.rate, e.is_maximum ? "max" : "min"});
  out.metadata["scan_samples"] = cfg.crossover.samples;
  out.metadata["refined"] = report.refined;
}

void run_oracle_mode(RunResult& out) {
  out.columns = {"name", "measured", "tolerance", "pass"};
  for (const OracleCheck& c : run_oracle_checks()) {
    out.rows.push_back({c.name, c.measured, c.tolerance, c.pass});
    if (!c.pass) {
      out.diagnostics.push_back("oracle check failed: " + c.name + " (measured " +
                                std::to_string(c.measured) + ", tolerance " +
                                std::to_string(c.tolerance) + ")");
      out.exit_code = std::max(out.exit_code, 2);
    }
  }
}

std::string format_number(const Json& v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
  return buf;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult out;
  out.metadata = Json::object();
  out.metadata["config"] = to_json(cfg);
  out.metadata["kernel_tolerances"] = {{"quad_abs_tol", cfg.numerics.quad_abs_tol},
                                       {"quad_rel_tol", cfg.numerics.quad_rel_tol}};

  switch (cfg.mode) {
    case RunMode::Single: run_single(cfg, out); break;
    case RunMode::Collective: run_collective(cfg, out); break;
    case RunMode::Correlated: run_correlated(cfg, out); break;
    case RunMode::Master: run_master(cfg, out); break;
    case RunMode::Crossover: run_crossover(cfg, out); break;
    case RunMode::OracleCheck: run_oracle_mode(out); break;
  }
  return out;
}

RunResult run_oracle_battery() {
  RunResult out;
  out.metadata = Json::object();
  out.metadata["mode"] = "oracle-check";
  run_oracle_mode(out);
  return out;
}

std::string format_csv(const RunResult& result) {
  std::string text = "# " + result.metadata.dump() + "\n";
  for (std::size_t c = 0; c < result.columns.size(); ++c) {
    if (c) text += ',';
    text += result.columns[c];
  }
  text += '\n';
  for (const std::vector<Json>& row : result.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) text += ',';
      const Json& v = row[c];
      if (v.is_number_float())
        text += format_number(v);
      else if (v.is_string())
        text += v.get<std::string>();
      else
        text += v.dump();  // integers, booleans
    }
    text += '\n';
  }
  return text;
}

std::string format_json(const RunResult& result) {
  Json doc = Json::object();
  doc["metadata"] = result.metadata;
  doc["columns"] = result.columns;
  Json rows = Json::array();
  for (const std::vector<Json>& row : result.rows) {
    Json jr = Json::array();
    for (const Json& v : row) jr.push_back(v);
    rows.push_back(std::move(jr));
  }
  doc["rows"] = rows;
  return doc.dump(2) + "\n";
}

}  // namespace zeno
