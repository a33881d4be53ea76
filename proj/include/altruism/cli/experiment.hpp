#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "altruism/limit/limit.hpp"
#include "altruism/micro/micro.hpp"
#include "altruism/model/params_io.hpp"
#include "altruism/sde/integrator.hpp"

namespace altruism {

enum class ModelKind { micro, wf, meanfield, mckean_vlasov, frozen_theta, single_colony, analytics_only };

std::string to_string(ModelKind k);
ModelKind parse_model_kind(const std::string& s);

struct InitialSpec {
  std::string kind = "uniform";  ///< uniform | constant | values | equilibrium
  double lo = 0.3;
  double hi = 0.7;
  double value = 0.5;
  std::vector<double> values;  ///< explicit state, or per-deme F for "equilibrium"
};

/// Rescaled micro runs: slow horizon integrator.t_end, fast step integrator.dt.
struct MicroSpec {
  double N = 50.0;
  ScalingSchedule schedule;
  double record_interval = 0.01;  ///< slow time
};

struct DiagnosticSpec {
  std::string name;
  Json options = Json::object();
};

struct ExperimentSpec {
  std::string name;
  ModelKind model = ModelKind::analytics_only;
  std::uint64_t seed = 0;
  std::size_t replicas = 1;
  std::optional<ModelParameters> parameters;
  std::optional<WfParams> limit;
  std::optional<GraphSpec> graph;   ///< deme graph of the wf model
  std::size_t particles = 1;        ///< D for meanfield, mckean_vlasov, frozen_theta copies
  std::optional<double> theta;
  std::optional<double> mean_z0;
  std::optional<MicroSpec> micro;
  IntegratorConfig integrator;
  InitialSpec initial;
  std::size_t histogram_bins = 0;
  std::vector<DiagnosticSpec> diagnostics;
  std::string output;
};

/// Strict parse: unknown keys, a missing seed or a missing required block throw ConfigError.
/// A manifest written by run_experiment is accepted as well.
ExperimentSpec parse_experiment_spec(const Json& j);

/// Fully resolved spec, defaults included.
Json to_json(const ExperimentSpec& spec);

struct RunOptions {
  std::optional<std::filesystem::path> out_dir;
  unsigned threads = 1;
};

struct RunReport {
  std::filesystem::path out_dir;
  std::vector<std::string> files;
  Json verdicts = Json::object();
  bool passed = true;
};

/// Executes the experiment and writes manifest.json, outputs and verdicts.json.
/// Output directory: options, else spec.output, else $ALTRUISM_OUTPUT_ROOT/<name>, else runs/<name>.
RunReport run_experiment(const ExperimentSpec& spec, const RunOptions& opt);

/// CLI entry: 0 all verdicts pass, 1 a verdict failed, 2 configuration error,
/// 3 numerical failure.
int run_command(const std::filesystem::path& spec_file, const RunOptions& opt, std::ostream& log);

}  // namespace altruism
