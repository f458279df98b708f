// config.cpp — config parsing, validation, and the canned figure recipes
#include "zeno/config.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

constexpr double kPi = 3.14159265358979324;

[[noreturn]] void fail(const std::string& msg) { throw ConfigError(msg); }

void check_keys(const Json& obj, const std::string& prefix,
                std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* a : allowed)
      if (it.key() == a) {
        known = true;
        break;
      }
    if (!known) fail("unknown key: " + prefix + it.key());
  }
}

double require_number(const Json& obj, const char* key, const std::string& dotted) {
  if (!obj.contains(key)) fail("missing key: " + dotted);
  if (!obj.at(key).is_number()) fail(dotted + " must be a number");
  return obj.at(key).get<double>();
}

double number_or(const Json& obj, const char* key, const std::string& dotted,
                 double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number()) fail(dotted + " must be a number");
  return obj.at(key).get<double>();
}

long long integer_or(const Json& obj, const char* key, const std::string& dotted,
                     long long fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_number_integer()) fail(dotted + " must be an integer");
  return obj.at(key).get<long long>();
}

bool bool_or(const Json& obj, const char* key, const std::string& dotted,
             bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_boolean()) fail(dotted + " must be a boolean");
  return obj.at(key).get<bool>();
}

std::string string_or(const Json& obj, const char* key, const std::string& dotted,
                      const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) fail(dotted + " must be a string");
  return obj.at(key).get<std::string>();
}

double parse_beta(const Json& obj) {
  if (!obj.contains("beta")) return kBetaInf;
  const Json& v = obj.at("beta");
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kBetaInf;
    fail("bath.beta must be a number or \"inf\"");
  }
  if (!v.is_number()) fail("bath.beta must be a number or \"inf\"");
  return v.get<double>();
}

BathSpec parse_bath(const Json& jb) {
  check_keys(jb, "bath.", {"kind", "G", "omega_c", "beta", "modes"});
  const std::string kind = jb.at("kind").is_string() ? jb.at("kind").get<std::string>() : "";
  BathSpec bath;
  bath.beta = parse_beta(jb);
  if (kind == "ohmic") {
    bath.kind = BathSpec::Kind::OhmicContinuum;
    bath.G = require_number(jb, "G", "bath.G");
    bath.omega_c = require_number(jb, "omega_c", "bath.omega_c");
    if (jb.contains("modes")) fail("bath.modes is only valid for kind \"discrete\"");
  } else if (kind == "discrete") {
    bath.kind = BathSpec::Kind::Discrete;
    if (jb.contains("G") || jb.contains("omega_c"))
      fail("bath.G/bath.omega_c are only valid for kind \"ohmic\"");
    if (!jb.contains("modes") || !jb.at("modes").is_array() || jb.at("modes").empty())
      fail("bath.modes must be a non-empty array");
    int i = 0;
    for (const Json& jm : jb.at("modes")) {
      const std::string dotted = "bath.modes[" + std::to_string(i) + "]";
      if (!jm.is_object()) fail(dotted + " must be an object");
      check_keys(jm, dotted + ".", {"g2", "omega"});
      Mode mode;
      const double g2 = require_number(jm, "g2", dotted + ".g2");
      if (!(g2 >= 0.0)) fail(dotted + ".g2 must be >= 0");
      mode.g = std::sqrt(g2);
      mode.omega = require_number(jm, "omega", dotted + ".omega");
      bath.modes.push_back(mode);
      ++i;
    }
  } else {
    fail("bath.kind must be \"ohmic\" or \"discrete\"");
  }
  try {
    bath.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return bath;
}

RunMode parse_mode_name(const std::string& name, const std::string& dotted) {
  if (name == "single") return RunMode::Single;
  if (name == "collective") return RunMode::Collective;
  if (name == "correlated") return RunMode::Correlated;
  if (name == "master") return RunMode::Master;
  if (name == "crossover") return RunMode::Crossover;
  if (name == "oracle-check") return RunMode::OracleCheck;
  fail(dotted + " must be one of single|collective|correlated|master|crossover|oracle-check");
}

SystemSpec parse_system(const Json& doc) {
  SystemSpec sys;
  if (!doc.contains("system")) return sys;
  const Json& js = doc.at("system");
  if (!js.is_object()) fail("system must be an object");
  check_keys(js, "system.", {"j", "theta", "phi", "omega0", "delta", "chi"});
  sys.j = number_or(js, "j", "system.j", sys.j);
  const int two_j = static_cast<int>(std::lround(2.0 * sys.j));
  if (sys.j < 0.0 || std::abs(2.0 * sys.j - two_j) > 1e-9)
    fail("system.j must be a non-negative half-integer");
  sys.theta = number_or(js, "theta", "system.theta", sys.theta);
  if (!(sys.theta >= 0.0 && sys.theta <= kPi)) fail("system.theta must lie in [0, pi]");
  sys.phi = number_or(js, "phi", "system.phi", sys.phi);
  sys.omega0 = number_or(js, "omega0", "system.omega0", sys.omega0);
  sys.delta = number_or(js, "delta", "system.delta", sys.delta);
  if (js.contains("chi")) {
    sys.chi = require_number(js, "chi", "system.chi");
    sys.has_chi = true;
  }
  return sys;
}

ScheduleSpec parse_schedule(const Json& doc, RunMode mode) {
  ScheduleSpec sched;
  if (doc.contains("schedule")) {
    const Json& js = doc.at("schedule");
    if (!js.is_object()) fail("schedule must be an object");
    check_keys(js, "schedule.", {"grid", "n_measurements", "rotation"});
    if (js.contains("grid")) {
      const Json& jg = js.at("grid");
      if (!jg.is_object()) fail("schedule.grid must be an object");
      check_keys(jg, "schedule.grid.", {"kind", "lo", "hi", "n"});
      const std::string kind = string_or(jg, "kind", "schedule.grid.kind", "linear");
      if (kind == "linear")
        sched.grid.kind = SweepGrid::Kind::Linear;
      else if (kind == "geometric")
        sched.grid.kind = SweepGrid::Kind::Geometric;
      else
        fail("schedule.grid.kind must be \"linear\" or \"geometric\"");
      sched.grid.lo = number_or(jg, "lo", "schedule.grid.lo", sched.grid.lo);
      sched.grid.hi = number_or(jg, "hi", "schedule.grid.hi", sched.grid.hi);
      sched.grid.n = static_cast<int>(integer_or(jg, "n", "schedule.grid.n", sched.grid.n));
    }
    sched.n_measurements = static_cast<int>(
        integer_or(js, "n_measurements", "schedule.n_measurements", sched.n_measurements));
    sched.rotation = bool_or(js, "rotation", "schedule.rotation", sched.rotation);
  }
  if (!(sched.grid.lo > 0.0)) fail("schedule.grid.lo must be > 0");
  if (!(sched.grid.hi >= sched.grid.lo)) fail("schedule.grid.hi must be >= lo");
  if (sched.grid.n < 1) fail("schedule.grid.n must be >= 1");
  if (sched.n_measurements < 1) fail("schedule.n_measurements must be >= 1");
  if (mode == RunMode::Correlated && !sched.rotation)
    fail("schedule.rotation: the correlated protocol always undoes the system rotation");
  return sched;
}

NumericsSpec parse_numerics(const Json& doc) {
  NumericsSpec num;
  if (!doc.contains("numerics")) return num;
  const Json& jn = doc.at("numerics");
  if (!jn.is_object()) fail("numerics must be an object");
  check_keys(jn, "numerics.",
             {"quad_abs_tol", "quad_rel_tol", "term_budget", "me_steps"});
  num.quad_abs_tol = number_or(jn, "quad_abs_tol", "numerics.quad_abs_tol", num.quad_abs_tol);
  if (!(num.quad_abs_tol > 0.0)) fail("numerics.quad_abs_tol must be > 0");
  num.quad_rel_tol = number_or(jn, "quad_rel_tol", "numerics.quad_rel_tol", num.quad_rel_tol);
  if (!(num.quad_rel_tol > 0.0)) fail("numerics.quad_rel_tol must be > 0");
  const long long budget = integer_or(jn, "term_budget", "numerics.term_budget",
                                      static_cast<long long>(num.term_budget));
  if (budget < 1) fail("numerics.term_budget must be >= 1");
  num.term_budget = static_cast<std::uint64_t>(budget);
  num.me_steps = static_cast<int>(integer_or(jn, "me_steps", "numerics.me_steps", num.me_steps));
  if (num.me_steps < 1) fail("numerics.me_steps must be >= 1");
  return num;
}

CrossoverSpec parse_crossover(const Json& doc) {
  CrossoverSpec cx;
  if (!doc.contains("crossover")) return cx;
  const Json& jc = doc.at("crossover");
  if (!jc.is_object()) fail("crossover must be an object");
  check_keys(jc, "crossover.", {"curve", "samples"});
  const std::string curve = string_or(jc, "curve", "crossover.curve", "single");
  const RunMode m = parse_mode_name(curve, "crossover.curve");
  if (m == RunMode::Crossover || m == RunMode::OracleCheck)
    fail("crossover.curve must be one of single|collective|correlated|master");
  cx.curve = m;
  cx.samples = static_cast<int>(integer_or(jc, "samples", "crossover.samples", cx.samples));
  if (cx.samples < 16) fail("crossover.samples must be >= 16");
  return cx;
}

OutputSpec parse_output(const Json& doc) {
  OutputSpec out;
  if (!doc.contains("output")) return out;
  const Json& jo = doc.at("output");
  if (!jo.is_object()) fail("output must be an object");
  check_keys(jo, "output.", {"path", "format"});
  out.path = string_or(jo, "path", "output.path", out.path);
  out.format = string_or(jo, "format", "output.format", out.format);
  if (out.format != "csv" && out.format != "json")
    fail("output.format must be \"csv\" or \"json\"");
  return out;
}

}  // namespace

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::Single: return "single";
    case RunMode::Collective: return "collective";
    case RunMode::Correlated: return "correlated";
    case RunMode::Master: return "master";
    case RunMode::Crossover: return "crossover";
    case RunMode::OracleCheck: return "oracle-check";
  }
  return "single";
}

QuadratureControl RunConfig::quad_control() const {
  QuadratureControl ctl;
  ctl.abs_tol = numerics.quad_abs_tol;
  ctl.rel_tol = numerics.quad_rel_tol;
  return ctl;
}

RunConfig parse_config(const Json& doc) {
  if (!doc.is_object()) fail("config must be a JSON object");
  if (!doc.contains("bath") || !doc.at("bath").is_object() ||
      !doc.at("bath").contains("kind"))
    fail("missing key: bath.kind");
  check_keys(doc, "",
             {"bath", "mode", "system", "schedule", "numerics", "crossover", "output",
              "label"});

  RunConfig cfg;
  cfg.bath = parse_bath(doc.at("bath"));
  cfg.mode = parse_mode_name(string_or(doc, "mode", "mode", "single"), "mode");
  cfg.system = parse_system(doc);
  cfg.schedule = parse_schedule(doc, cfg.mode);
  cfg.numerics = parse_numerics(doc);
  cfg.crossover = parse_crossover(doc);
  cfg.output = parse_output(doc);
  cfg.label = string_or(doc, "label", "label", "");
  return cfg;
}

Json parse_document_text(const std::string& text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return Json::object();
  try {
    return Json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("config parse error: ") + e.what());
  }
}

RunConfig parse_config_text(const std::string& text) {
  return parse_config(parse_document_text(text));
}

void apply_override(Json& doc, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0)
    fail("--set expects dotted.path=value, got \"" + assignment + "\"");
  const std::string path = assignment.substr(0, eq);
  const std::string raw = assignment.substr(eq + 1);

  Json value;
  try {
    value = Json::parse(raw);
  } catch (const std::exception&) {
    value = raw;  // unquoted strings pass through verbatim
  }

  Json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (key.empty()) fail("--set path has an empty segment: \"" + path + "\"");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    if (!node->contains(key) || !(*node)[key].is_object()) (*node)[key] = Json::object();
    node = &(*node)[key];
    start = dot + 1;
  }
}

Json to_json(const RunConfig& cfg) {
  Json doc = Json::object();
  if (!cfg.label.empty()) doc["label"] = cfg.label;
  doc["mode"] = to_string(cfg.mode);

  Json jb = Json::object();
  if (cfg.bath.kind == BathSpec::Kind::OhmicContinuum) {
    jb["kind"] = "ohmic";
    jb["G"] = cfg.bath.G;
    jb["omega_c"] = cfg.bath.omega_c;
  } else {
    jb["kind"] = "discrete";
    Json modes = Json::array();
    for (const Mode& m : cfg.bath.modes)
      modes.push_back({{"g2", std::norm(m.g)}, {"omega", m.omega}});
    jb["modes"] = modes;
  }
  if (cfg.bath.zero_temperature())
    jb["beta"] = "inf";
  else
    jb["beta"] = cfg.bath.beta;
  doc["bath"] = jb;

  Json js = Json::object();
  js["j"] = cfg.system.j;
  js["theta"] = cfg.system.theta;
  js["phi"] = cfg.system.phi;
  js["omega0"] = cfg.system.omega0;
  js["delta"] = cfg.system.delta;
  if (cfg.system.has_chi) js["chi"] = cfg.system.chi;
  doc["system"] = js;

  doc["schedule"] = {
      {"grid",
       {{"kind", cfg.schedule.grid.kind == SweepGrid::Kind::Linear ? "linear" : "geometric"},
        {"lo", cfg.schedule.grid.lo},
        {"hi", cfg.schedule.grid.hi},
        {"n", cfg.schedule.grid.n}}},
      {"n_measurements", cfg.schedule.n_measurements},
      {"rotation", cfg.schedule.rotation}};

  doc["numerics"] = {{"quad_abs_tol", cfg.numerics.quad_abs_tol},
                     {"quad_rel_tol", cfg.numerics.quad_rel_tol},
                     {"term_budget", cfg.numerics.term_budget},
                     {"me_steps", cfg.numerics.me_steps}};

  if (cfg.mode == RunMode::Crossover)
    doc["crossover"] = {{"curve", to_string(cfg.crossover.curve)},
                        {"samples", cfg.crossover.samples}};

  doc["output"] = {{"path", cfg.output.path}, {"format", cfg.output.format}};
  return doc;
}

namespace {

Json base_config(const std::string& mode, double G, double omega_c, const Json& beta) {
  Json doc = Json::object();
  doc["mode"] = mode;
  doc["bath"] = {{"kind", "ohmic"}, {"G", G}, {"omega_c", omega_c}, {"beta", beta}};
  return doc;
}

void set_grid(Json& doc, const char* kind, double lo, double hi, int n) {
  doc["schedule"]["grid"] = {{"kind", kind}, {"lo", lo}, {"hi", hi}, {"n", n}};
}

Json entry(const std::string& label, Json config) {
  config["label"] = label;
  return Json{{"label", label}, {"config", std::move(config)}};
}

}  // namespace

Json figure_recipe(const std::string& name) {
  Json out = Json::array();
  if (name == "fig1") {
    auto curve = [&](const std::string& label, double G, double omega_c, double beta) {
      Json doc = base_config("single", G, omega_c, Json(beta));
      set_grid(doc, "geometric", 0.01, 5.0, 500);
      out.push_back(entry(label, doc));
    };
    curve("baseline", 0.01, 15.0, 1.0);
    curve("omega-c-10", 0.01, 10.0, 1.0);
    curve("beta-0.25", 0.01, 15.0, 0.25);
    curve("G-0.005", 0.005, 15.0, 1.0);
  } else if (name == "fig2a") {
    for (const double j : {1.0, 2.0, 50.0}) {
      Json doc = base_config("collective", 0.01, 50.0, Json(1.0));
      doc["system"] = {{"j", j}};
      set_grid(doc, "linear", 0.005, 2.0, 400);
      out.push_back(entry("J-" + std::to_string(static_cast<int>(j)), doc));
    }
  } else if (name == "fig2b") {
    const double deltas[] = {0.0, 0.1, 1.0};
    const char* labels[] = {"delta-0", "delta-0.1", "delta-1"};
    for (int i = 0; i < 3; ++i) {
      Json doc = base_config("master", 0.01, 50.0, Json(1.0));
      doc["system"] = {{"j", 2.0}, {"omega0", 0.1}, {"delta", deltas[i]}};
      set_grid(doc, "linear", 0.005, 1.0, 200);
      out.push_back(entry(labels[i], doc));
    }
  } else if (name == "fig3a") {
    auto panel = [&](const std::string& prefix, double G) {
      for (const int n : {1, 3, 5}) {
        Json doc = base_config(n == 1 ? "single" : "correlated", G, 15.0, Json(1.0));
        if (n > 1) doc["schedule"]["n_measurements"] = n;
        set_grid(doc, "geometric", 0.01, 0.5, 150);
        out.push_back(entry(
            n == 1 ? prefix + "uncorrelated" : prefix + "n-" + std::to_string(n), doc));
      }
    };
    panel("", 0.5);
    panel("inset-", 0.05);
  } else if (name == "fig3b") {
    for (const int n : {1, 3}) {
      Json doc = base_config(n == 1 ? "collective" : "correlated", 0.05, 15.0, Json(1.0));
      doc["system"] = {{"j", 5.0}};
      if (n > 1) doc["schedule"]["n_measurements"] = n;
      set_grid(doc, "linear", 0.02, 1.0, 99);
      out.push_back(entry(n == 1 ? "uncorrelated" : "n-3", doc));
    }
  } else if (name == "supp1" || name == "supp2" || name == "supp4" || name == "supp5") {
    Json doc = base_config("single", 0.2, 1.0, name == "supp2" ? Json(1.0) : Json("inf"));
    if (name == "supp4") doc["system"] = {{"omega0", 1.0}};
    if (name == "supp5") doc["system"] = {{"theta", kPi / 4}};
    set_grid(doc, "linear", 0.05, 10.0, 200);
    out.push_back(entry("comparison", doc));
  } else if (name == "supp3") {
    Json single = base_config("single", 0.5, 1.0, Json("inf"));
    set_grid(single, "linear", 0.05, 10.0, 200);
    out.push_back(entry("uncorrelated", single));
    Json corr = base_config("correlated", 0.5, 1.0, Json("inf"));
    corr["schedule"]["n_measurements"] = 3;
    set_grid(corr, "linear", 0.05, 10.0, 200);
    out.push_back(entry("n-3", corr));
  } else if (name == "supp6") {
    for (const double j : {1.0, 2.0}) {
      Json doc = base_config("collective", 0.0, 1.0, Json("inf"));
      doc["system"] = {{"j", j}, {"chi", 1.0}};
      set_grid(doc, "linear", 0.02, 6.4, 320);
      out.push_back(entry("J-" + std::to_string(static_cast<int>(j)), doc));
    }
  } else {
    fail("unknown recipe \"" + name +
         "\"; valid names: fig1, fig2a, fig2b, fig3a, fig3b, supp1, supp2, supp3, "
         "supp4, supp5, supp6");
  }

  // Every emitted config must itself validate.
  for (const Json& e : out) parse_config(e.at("config"));
  return out;
}

}  // namespace zeno
