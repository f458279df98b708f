// zeno_dephase.cpp — command-line front end: run configs, figure recipes, oracle checks
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "zeno/config.hpp"
#include "zeno/errors.hpp"
#include "zeno/runner.hpp"

namespace {

void apply_jobs(int jobs) {
  if (jobs <= 0) {
    if (const char* env = std::getenv("ZENO_DEPHASE_JOBS")) jobs = std::atoi(env);
  }
  if (jobs > 0) omp_set_num_threads(jobs);
}

int write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 1;
  }
  out << text;
  return out.good() ? 0 : 1;
}

int emit(const zeno::RunResult& result, const zeno::OutputSpec& output) {
  const std::string text = output.format == "json" ? zeno::format_json(result)
                                                   : zeno::format_csv(result);
  const int write_status = write_text(output.path, text);
  for (const std::string& d : result.diagnostics) std::cerr << d << "\n";
  if (write_status != 0) return write_status;
  return result.exit_code;
}

int run_command(const std::string& config_path, const std::vector<std::string>& sets,
                const std::string& output_path, const std::string& format, int jobs) {
  apply_jobs(jobs);
  zeno::Json doc = zeno::Json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "cannot read config file: " << config_path << "\n";
      return 1;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    doc = zeno::parse_document_text(buffer.str());
  }
  for (const std::string& assignment : sets) zeno::apply_override(doc, assignment);
  if (!output_path.empty()) doc["output"]["path"] = output_path;
  if (!format.empty()) doc["output"]["format"] = format;

  const zeno::RunConfig cfg = zeno::parse_config(doc);
  return emit(zeno::run(cfg), cfg.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement-modified dephasing rates for spin-boson models"};
  app.require_subcommand(1);

  std::string config_path, output_path, format, recipe_name;
  std::vector<std::string> sets;
  int jobs = 0;

  CLI::App* cmd_run = app.add_subcommand("run", "Execute a run config and emit its table");
  cmd_run->add_option("--config", config_path, "JSON config file");
  cmd_run->add_option("--set", sets, "Override dotted.path=value (repeatable)");
  cmd_run->add_option("--output", output_path, "Output path ('-' for stdout)");
  cmd_run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_run->add_option("--jobs", jobs, "Thread bound (env ZENO_DEPHASE_JOBS)");

  CLI::App* cmd_recipe =
      app.add_subcommand("recipe", "Print the config set reproducing a named figure");
  cmd_recipe->add_option("name", recipe_name, "fig1..fig3b, supp1..supp6")->required();

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle-check", "Run the exact-model fixture battery");
  cmd_oracle->add_option("--output", output_path, "Output path ('-' for stdout)");
  cmd_oracle->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_oracle->add_option("--jobs", jobs, "Thread bound (env ZENO_DEPHASE_JOBS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_run->parsed())
      return run_command(config_path, sets, output_path, format, jobs);
    if (cmd_recipe->parsed()) {
      std::cout << zeno::figure_recipe(recipe_name).dump(2) << "\n";
      return 0;
    }
    apply_jobs(jobs);
    zeno::OutputSpec out;
    if (!output_path.empty()) out.path = output_path;
    if (!format.empty()) out.format = format;
    return emit(zeno::run_oracle_battery(), out);
  } catch (const zeno::ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const zeno::ResourceError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const zeno::AccuracyError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
