// config.hpp — JSON run configuration: schema, defaults, validation, figure recipes
#ifndef ZENO_CONFIG_HPP
#define ZENO_CONFIG_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "zeno/bath.hpp"
#include "zeno/crossover.hpp"
#include "zeno/quadrature.hpp"

namespace zeno {

using Json = nlohmann::ordered_json;

enum class RunMode { Single, Collective, Correlated, Master, Crossover, OracleCheck };

std::string to_string(RunMode mode);

struct SystemSpec {
  double j = 0.5;
  double theta = 1.57079632679489662;  // pi/2
  double phi = 0.0;
  double omega0 = 0.0;
  double delta = 0.0;
  double chi = 0.0;
  bool has_chi = false;  // emit the interaction-survival column
};

struct ScheduleSpec {
  SweepGrid grid{SweepGrid::Kind::Linear, 0.01, 1.0, 100};
  int n_measurements = 1;
  bool rotation = true;
};

struct NumericsSpec {
  double quad_abs_tol = 1e-10;
  double quad_rel_tol = 1e-8;
  std::uint64_t term_budget = 100'000'000;
  int me_steps = 2000;
};

struct CrossoverSpec {
  RunMode curve = RunMode::Single;  // which rate curve to scan for extrema
  int samples = 256;
};

struct OutputSpec {
  std::string path = "-";     // "-" means stdout
  std::string format = "csv"; // csv | json
};

struct RunConfig {
  BathSpec bath;
  RunMode mode = RunMode::Single;
  SystemSpec system;
  ScheduleSpec schedule;
  NumericsSpec numerics;
  CrossoverSpec crossover;
  OutputSpec output;
  std::string label;

  QuadratureControl quad_control() const;
};

// Parses and validates a config document.  Every rejection is a ConfigError
// naming the offending key; an absent bath.kind is reported first.
RunConfig parse_config(const Json& doc);

// Same, from raw text; all-whitespace text counts as an empty document.
RunConfig parse_config_text(const std::string& text);

// Raw text to a document without validation (--set overrides are applied to
// the document before parse_config runs); all-whitespace yields {}.
Json parse_document_text(const std::string& text);

// Applies one override "dotted.path=value" to a raw document.  The value is
// parsed as JSON when possible and kept as a string otherwise.
void apply_override(Json& doc, const std::string& assignment);

// The fully resolved config (all defaults filled in); parsing it back yields
// the same RunConfig.
Json to_json(const RunConfig& config);

// Configs reproducing a named figure, one per curve: an array of
// {"label": ..., "config": ...}.  Unknown names raise ConfigError listing the
// valid ones: fig1, fig2a, fig2b, fig3a, fig3b, supp1 .. supp6.
Json figure_recipe(const std::string& name);

}  // namespace zeno

#endif
