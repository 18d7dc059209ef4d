// Command-line front end: runs seeded experiment grids to CSV, evaluates the
// closed-form bounds, and renders aggregate curves as SVG line charts.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "umtlab/bounds.hpp"
#include "umtlab/error.hpp"
#include "umtlab/experiments/aggregate.hpp"
#include "umtlab/experiments/config.hpp"
#include "umtlab/experiments/csv.hpp"
#include "umtlab/experiments/manifest.hpp"
#include "umtlab/experiments/run.hpp"
#include "umtlab/plot/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("UMTLAB_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      throw umtlab::ConfigError("UMTLAB_THREADS is not a positive integer");
    }
  }
  return 0;  // auto
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << body;
  if (!out) throw std::runtime_error("short write to '" + path.string() + "'");
}

int cmd_run(const std::string& preset, const std::string& config_path,
            const std::string& out_dir, std::optional<std::uint64_t> seed,
            std::optional<unsigned> threads_flag) {
  umtlab::ExperimentConfig config;
  if (!preset.empty() && !config_path.empty()) {
    throw umtlab::ConfigError("pass either --preset or --config, not both");
  }
  if (preset.empty() && config_path.empty()) {
    throw umtlab::ConfigError("one of --preset or --config is required");
  }
  config = preset.empty() ? umtlab::parse_config_file(config_path)
                          : umtlab::preset_config(preset);
  if (seed) config.master_seed = *seed;
  config.validate();

  unsigned threads = resolve_threads(threads_flag);
  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  const std::string started = umtlab::utc_timestamp_now();
  const std::vector<umtlab::CellResult> cells =
      umtlab::run_cells(config, threads);
  const std::vector<umtlab::AggregateRow> rows = umtlab::aggregate(cells);

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  write_file(dir / "cells.csv", umtlab::cells_csv(cells));
  write_file(dir / "aggregate.csv", umtlab::aggregate_csv(rows));
  const std::string finished = umtlab::utc_timestamp_now();
  write_file(dir / "manifest.txt",
             umtlab::render_manifest(config, threads, started, finished,
                                     {"cells.csv", "aggregate.csv"}));
  std::cout << "wrote " << (dir / "cells.csv").string() << " ("
            << cells.size() << " cells), aggregate.csv, manifest.txt\n";
  return kExitOk;
}

int cmd_bounds(const std::string& kind, const umtlab::BoundParams& params,
               bool proof_form, bool realizable, double loss_star) {
  double value = 0.0;
  if (kind == "kg") {
    value = umtlab::kg_bound(params);
  } else if (kind == "cn") {
    value = umtlab::cn_bound(params, proof_form);
  } else if (kind == "cn-lower") {
    value = umtlab::cn_lower_bound(params);
  } else if (kind == "rt") {
    value = umtlab::rt_bound(params);
  } else if (kind == "gamma") {
    value = umtlab::gamma_threshold(params.m, params.theta_count, params.delta);
  } else if (kind == "occam") {
    value = umtlab::occam_bound(params.m, params.theta_count, params.delta,
                                realizable, loss_star);
  } else {
    throw umtlab::ConfigError("unknown bound kind '" + kind + "'");
  }
  std::cout << kind << " " << umtlab::format_real(value) << " "
            << (umtlab::vacuous(value) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_plot(const std::string& in_path, const std::string& out_path,
             const std::string& x, const std::string& y,
             const std::string& series) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) throw umtlab::ConfigError("cannot open '" + in_path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const umtlab::CsvTable table = umtlab::read_csv(text);
  const std::string svg = umtlab::render_line_chart(table, x, y, series);
  write_file(out_path, svg);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"umtlab: synthetic-language translation experiments"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run an experiment grid to CSV");
  std::string preset, config_path, out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  run->add_option("--preset", preset,
                  "built-in preset: fig4-left, fig4-right, fig5, kg-smoke, "
                  "cn-smoke");
  run->add_option("--config", config_path, "experiment config file");
  run->add_option("--out", out_dir, "output directory")->required();
  run->add_option("--seed", seed, "master seed override");
  run->add_option("--threads", threads,
                  "worker threads (default: UMTLAB_THREADS or hardware)");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  std::string kind;
  umtlab::BoundParams params;
  double log_theta = -1.0;
  bool proof_form = false, realizable = false;
  double loss_star = 0.0;
  bounds->add_option("kind", kind, "kg | cn | cn-lower | rt | gamma | occam")
      ->required();
  bounds->add_option("--m", params.m, "sample count");
  bounds->add_option("--n", params.n, "target node count");
  bounds->add_option("--r", params.r, "source node count");
  bounds->add_option("--p", params.p, "edge density");
  bounds->add_option("--alpha", params.alpha, "agreement / nonsense fraction");
  bounds->add_option("--delta", params.delta, "failure probability");
  bounds->add_option("--theta", params.theta_count, "family size");
  bounds->add_option("--log-theta", log_theta, "ln of the family size");
  bounds->add_option("--t-size", params.t_size, "|T|");
  bounds->add_option("--a", params.a, "tree arity");
  bounds->add_option("--depth", params.depth, "tree depth");
  bounds->add_option("--c2", params.c2, "lower-bound constant");
  bounds->add_flag("--proof-form", proof_form,
                   "use the 8/((1-alpha)|T|) inner constant");
  bounds->add_flag("--realizable", realizable, "zero-loss supervised case");
  bounds->add_option("--loss-star", loss_star, "best-in-family loss");

  // plot
  auto* plot = app.add_subcommand("plot", "render an aggregate CSV as SVG");
  std::string in_path, out_path, x = "m", y = "mean", series = "alpha";
  plot->add_option("--in", in_path, "aggregate CSV")->required();
  plot->add_option("--out", out_path, "output SVG")->required();
  plot->add_option("--x", x, "x column");
  plot->add_option("--y", y, "y column");
  plot->add_option("--series", series, "series column");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      return cmd_run(preset, config_path, out_dir, seed, threads);
    }
    if (bounds->parsed()) {
      if (log_theta >= 0.0) params.log_theta = log_theta;
      return cmd_bounds(kind, params, proof_form, realizable, loss_star);
    }
    if (plot->parsed()) {
      return cmd_plot(in_path, out_path, x, y, series);
    }
  } catch (const umtlab::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const umtlab::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
