// Command-line front end: closed-loop simulation runs, gain tuning
// experiments, and trajectory comparison reports.

#include <CLI11.hpp>

#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cartpole/config_io.hpp"
#include "cartpole/csv.hpp"
#include "cartpole/errors.hpp"
#include "cartpole/objective.hpp"
#include "cartpole/optimizer.hpp"
#include "cartpole/scenarios.hpp"
#include "cartpole/svg.hpp"

namespace fs = std::filesystem;
using namespace cartpole;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

struct OutputPaths {
  fs::path csv;
  fs::path manifest;
  fs::path svg;
  fs::path report;
  fs::path history;
};

OutputPaths output_paths(std::string base) {
  if (base.size() > 4 && base.ends_with(".csv"))
    base.erase(base.size() - 4);
  OutputPaths paths;
  paths.csv = base + ".csv";
  paths.manifest = base + ".manifest.txt";
  paths.svg = base + ".svg";
  paths.report = base + ".report.txt";
  paths.history = base + ".history.csv";
  return paths;
}

void ensure_parent_directory(const fs::path& path) {
  const fs::path parent = path.parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

std::vector<std::pair<double, double>> angle_points(const Trajectory& t) {
  std::vector<std::pair<double, double>> points;
  points.reserve(t.samples.size());
  for (const TrajectorySample& s : t.samples)
    points.emplace_back(s.t, s.state.rod_angle);
  return points;
}

std::string gains_text(const PidGains& g) {
  std::ostringstream out;
  out << '(' << g.proportional << ", " << g.integral << ", " << g.derivative
      << ')';
  return out.str();
}

// Shared flags that override whatever the scenario/config file resolved.
struct Overrides {
  std::optional<double> theta0;
  std::optional<double> dt;
  std::optional<double> duration;

  void apply(SimConfig& config) const {
    if (theta0) config.initial_state.rod_angle = *theta0;
    if (dt) config.dt = *dt;
    if (duration) config.duration = *duration;
  }
};

struct SimulateOptions {
  std::string config_path;
  std::string scenario;
  std::string out = "cartpole_run";
  Overrides overrides;
};

struct TuneOptions {
  std::string config_path;
  std::string metric = "rmse";
  std::string seed = "-300,0,-100";
  std::string out = "cartpole_tune";
  Overrides overrides;
};

struct CompareOptions {
  std::string csv_a;
  std::string csv_b;
  std::string out = "cartpole_compare";
};

PidGains parse_seed(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, ',')) parts.push_back(part);
  if (parts.size() != 3)
    throw ParseError("--seed expects three comma-separated gains k_p,k_i,k_d, got \"" +
                     text + "\"");
  return {parse_double(parts[0], "--seed k_p"),
          parse_double(parts[1], "--seed k_i"),
          parse_double(parts[2], "--seed k_d")};
}

// Resolve config, run, write csv + manifest + svg. Returns the trajectory so
// tune can reuse the machinery for its final run.
Trajectory simulate_and_write(const SimConfig& config,
                              const std::string& scenario_name,
                              const OutputPaths& paths) {
  validate(config);
  const Trajectory trajectory = run(config);

  ensure_parent_directory(paths.csv);
  write_trajectory_csv(paths.csv, trajectory);

  RunManifest manifest;
  manifest.scenario = scenario_name;
  manifest.config = config;
  manifest.diverged = trajectory.diverged;
  manifest.trajectory_csv = paths.csv.string();
  manifest.plot_svg = paths.svg.string();
  write_manifest(paths.manifest, manifest);

  const SvgSeries series{"theta", "#1f77b4", angle_points(trajectory)};
  write_line_chart(paths.svg, "Rod angle vs time", "t (s)", "theta (rad)",
                   std::span<const SvgSeries>(&series, 1));

  std::cout << "wrote " << paths.csv.string() << '\n'
            << "wrote " << paths.manifest.string() << '\n'
            << "wrote " << paths.svg.string() << '\n';
  if (trajectory.diverged)
    std::cerr << "warning: simulation diverged at step " << trajectory.halt_step
              << "; trajectory truncated to " << trajectory.samples.size()
              << " samples\n";
  return trajectory;
}

int cmd_simulate(const SimulateOptions& options) {
  SimConfig config;
  std::string scenario_name;
  if (!options.scenario.empty()) {
    const Scenario* scenario = find_scenario(options.scenario);
    if (scenario == nullptr) {
      std::ostringstream names;
      for (const Scenario& s : scenarios()) names << ' ' << s.name;
      throw ParseError("unknown scenario \"" + options.scenario +
                       "\"; known:" + names.str());
    }
    config = scenario->config;
    scenario_name = scenario->name;
  }
  if (!options.config_path.empty())
    config = read_config_file(options.config_path, config);
  options.overrides.apply(config);

  const OutputPaths paths = output_paths(options.out);
  const Trajectory trajectory = simulate_and_write(config, scenario_name, paths);
  if (!trajectory.samples.empty()) {
    const TrajectorySample& last = trajectory.samples.back();
    std::cout << "steps: " << trajectory.samples.size()
              << "  final angle: " << last.state.rod_angle << " rad\n";
  }
  return kExitOk;
}

int cmd_tune(const TuneOptions& options) {
  ObjectiveSpec spec;
  if (!options.config_path.empty())
    spec.sim = read_config_file(options.config_path, spec.sim);
  options.overrides.apply(spec.sim);
  spec.metric = options.metric == "mae" ? Metric::mae : Metric::rmse;
  validate(spec);

  OptimizerConfig optimizer;
  optimizer.initial_gains = parse_seed(options.seed);

  const double seed_cost = evaluate(spec, optimizer.initial_gains);
  const TuneResult result = minimize(spec, optimizer);

  const OutputPaths paths = output_paths(options.out);
  ensure_parent_directory(paths.report);

  KeyValueList report = {
      {"metric", options.metric},
      {"seed_k_p", format_double(optimizer.initial_gains.proportional)},
      {"seed_k_i", format_double(optimizer.initial_gains.integral)},
      {"seed_k_d", format_double(optimizer.initial_gains.derivative)},
      {"seed_cost", format_double(seed_cost)},
      {"best_k_p", format_double(result.best_gains.proportional)},
      {"best_k_i", format_double(result.best_gains.integral)},
      {"best_k_d", format_double(result.best_gains.derivative)},
      {"best_cost", format_double(result.best_cost)},
      {"evaluation_count", std::to_string(result.evaluation_count)},
      {"converged", result.converged ? "true" : "false"},
  };
  write_key_value_file(paths.report.string(), report);

  {
    std::ofstream history(paths.history);
    if (!history) throw IoError("cannot write " + paths.history.string());
    history << "iteration,best_cost\n";
    for (std::size_t i = 0; i < result.cost_history.size(); ++i)
      history << i << ',' << format_double(result.cost_history[i]) << '\n';
  }

  std::cout << "metric: " << options.metric << "  seed "
            << gains_text(optimizer.initial_gains) << " cost " << seed_cost
            << '\n'
            << "best " << gains_text(result.best_gains) << " cost "
            << result.best_cost << " after " << result.evaluation_count
            << " evaluations\n"
            << "wrote " << paths.report.string() << '\n'
            << "wrote " << paths.history.string() << '\n';
  if (!result.converged)
    std::cerr << "warning: optimizer stopped on evaluation budget before the "
                 "simplex spread converged\n";

  SimConfig tuned = spec.sim;
  tuned.gains = result.best_gains;
  simulate_and_write(tuned, "", paths);
  return kExitOk;
}

int cmd_compare(const CompareOptions& options) {
  const Trajectory a = read_trajectory_csv(fs::path(options.csv_a));
  const Trajectory b = read_trajectory_csv(fs::path(options.csv_b));
  if (a.samples.empty())
    throw ParseError(options.csv_a + ": no data rows");
  if (b.samples.empty())
    throw ParseError(options.csv_b + ": no data rows");

  const AngleStats stats_a = angle_stats(a);
  const AngleStats stats_b = angle_stats(b);

  const OutputPaths paths = output_paths(options.out);
  ensure_parent_directory(paths.report);

  KeyValueList report = {
      {"trajectory_a", options.csv_a},
      {"trajectory_b", options.csv_b},
      {"rmse_a", format_double(stats_a.rmse)},
      {"mae_a", format_double(stats_a.mae)},
      {"max_abs_theta_a", format_double(stats_a.max_abs)},
      {"final_third_mean_abs_theta_a",
       format_double(stats_a.final_third_mean_abs)},
      {"rmse_b", format_double(stats_b.rmse)},
      {"mae_b", format_double(stats_b.mae)},
      {"max_abs_theta_b", format_double(stats_b.max_abs)},
      {"final_third_mean_abs_theta_b",
       format_double(stats_b.final_third_mean_abs)},
      {"rmse_delta", format_double(stats_b.rmse - stats_a.rmse)},
      {"mae_delta", format_double(stats_b.mae - stats_a.mae)},
      {"max_abs_theta_delta", format_double(stats_b.max_abs - stats_a.max_abs)},
      {"final_third_mean_abs_theta_delta",
       format_double(stats_b.final_third_mean_abs - stats_a.final_third_mean_abs)},
  };
  write_key_value_file(paths.report.string(), report);

  const std::vector<SvgSeries> series = {
      {fs::path(options.csv_a).stem().string(), "#1f77b4", angle_points(a)},
      {fs::path(options.csv_b).stem().string(), "#d62728", angle_points(b)},
  };
  write_line_chart(paths.svg, "Rod angle vs time", "t (s)", "theta (rad)",
                   series);

  write_key_values(std::cout, report);
  std::cout << "wrote " << paths.report.string() << '\n'
            << "wrote " << paths.svg.string() << '\n';
  return kExitOk;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverted pendulum on a cart: simulator, PID gain tuner, and "
               "trajectory comparison"};
  app.require_subcommand(1);

  SimulateOptions simulate_options;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run one closed-loop simulation");
  simulate->add_option("--config", simulate_options.config_path,
                       "Config file (key = value lines)");
  simulate->add_option("--scenario", simulate_options.scenario,
                       "Named preset: fig2 fig3 fig4 fig5 fig6 fig7");
  simulate->add_option("--theta0", simulate_options.overrides.theta0,
                       "Initial rod angle (rad)");
  simulate->add_option("--dt", simulate_options.overrides.dt, "Step size (s)");
  simulate->add_option("--duration", simulate_options.overrides.duration,
                       "Run length (s)");
  simulate->add_option("--out", simulate_options.out,
                       "Output base path (writes .csv, .manifest.txt, .svg)");

  TuneOptions tune_options;
  CLI::App* tune = app.add_subcommand(
      "tune", "Minimize the tracking objective over the PID gains");
  tune->add_option("--config", tune_options.config_path,
                   "Config file for the underlying simulation");
  tune->add_option("--metric", tune_options.metric, "rmse or mae")
      ->check(CLI::IsMember({"rmse", "mae"}));
  tune->add_option("--seed", tune_options.seed,
                   "Initial gains k_p,k_i,k_d (comma separated)");
  tune->add_option("--theta0", tune_options.overrides.theta0,
                   "Initial rod angle (rad)");
  tune->add_option("--dt", tune_options.overrides.dt, "Step size (s)");
  tune->add_option("--duration", tune_options.overrides.duration,
                   "Run length (s)");
  tune->add_option("--out", tune_options.out,
                   "Output base path (adds .report.txt, .history.csv and the "
                   "tuned-run files)");

  CompareOptions compare_options;
  CLI::App* compare = app.add_subcommand(
      "compare", "Metric report and overlay plot for two trajectory CSVs");
  compare->add_option("csv_a", compare_options.csv_a, "First trajectory CSV")
      ->required();
  compare->add_option("csv_b", compare_options.csv_b, "Second trajectory CSV")
      ->required();
  compare->add_option("--out", compare_options.out,
                      "Output base path (writes .report.txt, .svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (simulate->parsed())
    return guarded([&] { return cmd_simulate(simulate_options); });
  if (tune->parsed()) return guarded([&] { return cmd_tune(tune_options); });
  return guarded([&] { return cmd_compare(compare_options); });
}
