#include "altruism/cli/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>

#include "altruism/analytics/invasion.hpp"
#include "altruism/analytics/stationary.hpp"
#include "altruism/cli/atomic_file.hpp"
#include "altruism/diagnostics/diagnostics.hpp"
#include "altruism/errors.hpp"
#include "altruism/limit/coupling.hpp"
#include "altruism/sde/ensemble.hpp"
#include "altruism/sde/path_io.hpp"

namespace altruism {

namespace {

constexpr int kManifestVersion = 1;

std::size_t size_field(const Json& j, const char* key, std::size_t fallback, const std::string& w) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(w + "." + key + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key, const std::string& fallback,
                         const std::string& w) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ConfigError(w + "." + key + ": expected a string");
  return j.at(key).get<std::string>();
}

std::vector<double> number_list(const Json& j, const std::string& w) {
  if (!j.is_array()) throw ConfigError(w + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(w + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

WfParams parse_limit(const Json& j) {
  const std::string w = "limit";
  reject_unknown_keys(j, {"kappa", "alpha", "beta", "a"}, w);
  WfParams wp;
  wp.kappa = require_number(j, "kappa", w);
  wp.alpha = require_number(j, "alpha", w);
  wp.beta = require_number(j, "beta", w);
  wp.a = require_number(j, "a", w);
  wp.validate();
  return wp;
}

IntegratorConfig parse_integrator(const Json& j) {
  const std::string w = "integrator";
  reject_unknown_keys(j, {"dt", "t_end", "record_stride", "boundary_policy", "floor_eps"}, w);
  IntegratorConfig c;
  c.dt = number_or(j, "dt", c.dt, w);
  c.t_end = number_or(j, "t_end", c.t_end, w);
  c.record_stride = size_field(j, "record_stride", c.record_stride, w);
  c.boundary_policy = parse_boundary_policy(string_field(j, "boundary_policy", "full_truncation", w));
  c.floor_eps = number_or(j, "floor_eps", c.floor_eps, w);
  c.validate();
  return c;
}

InitialSpec parse_initial(const Json& j) {
  const std::string w = "initial";
  reject_unknown_keys(j, {"kind", "lo", "hi", "value", "values"}, w);
  InitialSpec s;
  s.kind = string_field(j, "kind", s.kind, w);
  if (s.kind != "uniform" && s.kind != "constant" && s.kind != "values" && s.kind != "equilibrium") {
    throw ConfigError("initial.kind: unknown kind '" + s.kind + "'");
  }
  s.lo = number_or(j, "lo", s.lo, w);
  s.hi = number_or(j, "hi", s.hi, w);
  s.value = number_or(j, "value", s.value, w);
  if (j.contains("values")) s.values = number_list(j.at("values"), w + ".values");
  if (s.kind == "uniform" && !(0.0 <= s.lo && s.lo <= s.hi && s.hi <= 1.0)) {
    throw ConfigError("initial: uniform bounds must satisfy 0 <= lo <= hi <= 1");
  }
  if ((s.kind == "values" || s.kind == "equilibrium") && s.values.empty()) {
    throw ConfigError("initial.values: required for kind '" + s.kind + "'");
  }
  return s;
}

MicroSpec parse_micro(const Json& j) {
  const std::string w = "micro";
  reject_unknown_keys(j, {"N", "schedule", "record_interval"}, w);
  MicroSpec m;
  m.N = require_number(j, "N", w);
  m.record_interval = number_or(j, "record_interval", m.record_interval, w);
  if (j.contains("schedule")) {
    const auto& s = j.at("schedule");
    reject_unknown_keys(s, {"kappa", "alpha", "beta_target", "iota_floor"}, w + ".schedule");
    m.schedule.kappa = number_or(s, "kappa", m.schedule.kappa, w + ".schedule");
    m.schedule.alpha = number_or(s, "alpha", m.schedule.alpha, w + ".schedule");
    m.schedule.beta_target = number_or(s, "beta_target", m.schedule.beta_target, w + ".schedule");
    m.schedule.iota_floor = number_or(s, "iota_floor", m.schedule.iota_floor, w + ".schedule");
  }
  if (!(m.N >= 1.0)) throw ConfigError("micro.N must be >= 1");
  if (!(m.record_interval > 0.0)) throw ConfigError("micro.record_interval must be positive");
  return m;
}

std::vector<DiagnosticSpec> parse_diagnostics(const Json& j) {
  if (!j.is_array()) throw ConfigError("diagnostics: expected an array");
  std::vector<DiagnosticSpec> out;
  for (const auto& d : j) {
    DiagnosticSpec s;
    if (d.is_string()) {
      s.name = d.get<std::string>();
    } else if (d.is_object() && d.contains("name") && d.at("name").is_string()) {
      s.name = d.at("name").get<std::string>();
      s.options = d;
      s.options.erase("name");
    } else {
      throw ConfigError("diagnostics: entries are names or objects with a \"name\"");
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::micro: return "micro";
    case ModelKind::wf: return "wf";
    case ModelKind::meanfield: return "meanfield";
    case ModelKind::mckean_vlasov: return "mckean_vlasov";
    case ModelKind::frozen_theta: return "frozen_theta";
    case ModelKind::single_colony: return "single_colony";
    case ModelKind::analytics_only: return "analytics_only";
  }
  return "?";
}

ModelKind parse_model_kind(const std::string& s) {
  for (auto k : {ModelKind::micro, ModelKind::wf, ModelKind::meanfield, ModelKind::mckean_vlasov,
                 ModelKind::frozen_theta, ModelKind::single_colony, ModelKind::analytics_only}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("model: unknown selector '" + s + "'");
}

ExperimentSpec parse_experiment_spec(const Json& doc) {
  if (doc.is_object() && doc.contains("manifest_version")) {
    reject_unknown_keys(doc, {"manifest_version", "code_version", "seed", "spec"}, "manifest");
    if (!doc.contains("spec")) throw ConfigError("manifest: missing spec");
    return parse_experiment_spec(doc.at("spec"));
  }
  const std::string w = "spec";
  reject_unknown_keys(doc,
                      {"name", "model", "seed", "replicas", "parameters", "limit", "graph", "D",
                       "theta", "mean_z0", "micro", "integrator", "initial", "histogram_bins",
                       "diagnostics", "output"},
                      w);
  ExperimentSpec s;
  if (!doc.contains("name") || !doc.at("name").is_string()) throw ConfigError("spec.name: missing");
  s.name = doc.at("name").get<std::string>();
  if (!doc.contains("model") || !doc.at("model").is_string()) throw ConfigError("spec.model: missing");
  s.model = parse_model_kind(doc.at("model").get<std::string>());
  if (!doc.contains("seed")) throw ConfigError("spec.seed: missing (no default seed is used)");
  if (!doc.at("seed").is_number_unsigned() && !(doc.at("seed").is_number_integer() &&
                                                doc.at("seed").get<long long>() >= 0)) {
    throw ConfigError("spec.seed: expected a nonnegative integer");
  }
  s.seed = doc.at("seed").get<std::uint64_t>();
  s.replicas = size_field(doc, "replicas", 1, w);
  if (s.replicas < 1) throw ConfigError("spec.replicas must be >= 1");
  if (doc.contains("parameters")) s.parameters = parse_model_parameters(doc.at("parameters"));
  if (doc.contains("limit")) s.limit = parse_limit(doc.at("limit"));
  if (doc.contains("graph")) s.graph = parse_graph(doc.at("graph"));
  s.particles = size_field(doc, "D", 1, w);
  if (s.particles < 1) throw ConfigError("spec.D must be >= 1");
  if (doc.contains("theta")) s.theta = require_number(doc, "theta", w);
  if (doc.contains("mean_z0")) s.mean_z0 = require_number(doc, "mean_z0", w);
  if (doc.contains("micro")) s.micro = parse_micro(doc.at("micro"));
  if (doc.contains("integrator")) s.integrator = parse_integrator(doc.at("integrator"));
  if (doc.contains("initial")) s.initial = parse_initial(doc.at("initial"));
  s.histogram_bins = size_field(doc, "histogram_bins", 0, w);
  if (doc.contains("diagnostics")) s.diagnostics = parse_diagnostics(doc.at("diagnostics"));
  s.output = string_field(doc, "output", "", w);

  const bool limit_model = s.model != ModelKind::micro;
  if (limit_model && !s.limit) throw ConfigError("spec.limit: required for model " + to_string(s.model));
  if (s.model == ModelKind::micro && !s.parameters) throw ConfigError("spec.parameters: required for micro");
  if (s.model == ModelKind::frozen_theta && !s.theta) throw ConfigError("spec.theta: required for frozen_theta");
  if (s.model == ModelKind::micro && s.initial.kind != "equilibrium" && s.initial.kind != "values") {
    throw ConfigError("initial.kind: micro runs start from 'equilibrium' or 'values'");
  }
  return s;
}

Json to_json(const ExperimentSpec& s) {
  Json j;
  j["name"] = s.name;
  j["model"] = to_string(s.model);
  j["seed"] = s.seed;
  j["replicas"] = s.replicas;
  if (s.parameters) j["parameters"] = to_json(*s.parameters);
  if (s.limit) {
    j["limit"] = {{"kappa", s.limit->kappa}, {"alpha", s.limit->alpha}, {"beta", s.limit->beta},
                  {"a", s.limit->a}};
  }
  if (s.graph) j["graph"] = to_json(*s.graph);
  j["D"] = s.particles;
  if (s.theta) j["theta"] = *s.theta;
  if (s.mean_z0) j["mean_z0"] = *s.mean_z0;
  if (s.micro) {
    j["micro"] = {{"N", s.micro->N},
                  {"record_interval", s.micro->record_interval},
                  {"schedule",
                   {{"kappa", s.micro->schedule.kappa},
                    {"alpha", s.micro->schedule.alpha},
                    {"beta_target", s.micro->schedule.beta_target},
                    {"iota_floor", s.micro->schedule.iota_floor}}}};
  }
  j["integrator"] = {{"dt", s.integrator.dt},
                     {"t_end", s.integrator.t_end},
                     {"record_stride", s.integrator.record_stride},
                     {"boundary_policy", to_string(s.integrator.boundary_policy)},
                     {"floor_eps", s.integrator.floor_eps}};
  Json init = {{"kind", s.initial.kind}, {"lo", s.initial.lo}, {"hi", s.initial.hi},
               {"value", s.initial.value}};
  if (!s.initial.values.empty()) init["values"] = s.initial.values;
  j["initial"] = init;
  j["histogram_bins"] = s.histogram_bins;
  Json diags = Json::array();
  for (const auto& d : s.diagnostics) {
    Json e = d.options;
    e["name"] = d.name;
    diags.push_back(e);
  }
  j["diagnostics"] = diags;
  j["output"] = s.output;
  return j;
}

namespace {

class Runner {
 public:
  Runner(const ExperimentSpec& spec, const RunOptions& opt, std::filesystem::path dir)
      : spec_(spec), opt_(opt) {
    report_.out_dir = std::move(dir);
  }

  RunReport run() {
    Json manifest = {{"manifest_version", kManifestVersion},
                     {"code_version", ALTRUISM_VERSION},
                     {"seed", spec_.seed},
                     {"spec", to_json(spec_)}};
    write("manifest.json", manifest.dump(2) + "\n");
    if (spec_.model == ModelKind::analytics_only) {
      run_analytics();
    } else {
      run_simulation();
    }
    write("verdicts.json", Json{{"passed", report_.passed}, {"verdicts", report_.verdicts}}.dump(2) + "\n");
    return report_;
  }

 private:
  void write(const std::string& file, const std::string& content) {
    write_file_atomic(report_.out_dir / file, content);
    report_.files.push_back(file);
  }

  void verdict(const std::string& name, bool pass, Json detail) {
    detail["pass"] = pass;
    report_.verdicts[name] = std::move(detail);
    report_.passed = report_.passed && pass;
  }

  bool wants(const std::string& name) const {
    for (const auto& d : spec_.diagnostics) {
      if (d.name == name) return true;
    }
    return false;
  }

  const Json& options(const std::string& name) const {
    static const Json empty = Json::object();
    for (const auto& d : spec_.diagnostics) {
      if (d.name == name) return d.options;
    }
    return empty;
  }

  void check_known(std::initializer_list<const char*> known) const {
    for (const auto& d : spec_.diagnostics) {
      bool ok = false;
      for (const char* k : known) ok = ok || d.name == k;
      if (!ok) {
        throw ConfigError("diagnostic '" + d.name + "' is not available for model " +
                          to_string(spec_.model));
      }
    }
  }

  void run_analytics() {
    check_known({"invasion", "stationary_density", "gamma_identity", "scale_function", "fixation"});
    const WfParams& wp = *spec_.limit;
    const bool any = !spec_.diagnostics.empty();
    if (!any || wants("invasion")) {
      const InvasionResult r = invasion_criterion(wp);
      write("invasion.json", to_json(r).dump(2) + "\n");
      verdict("invasion", r.dies_out == (wp.alpha >= wp.beta),
              {{"integral", r.integral}, {"dies_out", r.dies_out}, {"expected_dies_out", wp.alpha >= wp.beta}});
    }
    if (wants("stationary_density")) {
      if (!spec_.theta) throw ConfigError("stationary_density needs theta");
      const StationaryModel sm = make_stationary_model(wp, *spec_.theta);
      const std::size_t points = size_field(options("stationary_density"), "points", 10000, "stationary_density");
      write("stationary_density.csv", density_table_csv(sm, stationary_cdf_table(sm, points)));
    }
    if (wants("gamma_identity")) {
      if (!spec_.theta) throw ConfigError("gamma_identity needs theta");
      const double r = gamma_identity_residual(wp, *spec_.theta);
      verdict("gamma_identity", std::abs(r) < 1e-10,
              {{"residual", r}, {"closed_form", gamma_identity_closed_form(wp, *spec_.theta)}});
    }
    if (wants("scale_function")) {
      const std::size_t points = size_field(options("scale_function"), "points", 101, "scale_function");
      const double z_max = number_or(options("scale_function"), "z_max", 0.99, "scale_function");
      if (points < 2 || !(z_max > 0.0 && z_max < 1.0)) throw ConfigError("scale_function: bad grid");
      std::string csv = "z,s,S\n";
      for (std::size_t k = 0; k < points; ++k) {
        const double z = z_max * static_cast<double>(k) / static_cast<double>(points - 1);
        const ScaleValues v = scale_function(wp, z);
        csv += format_double(z) + "," + format_double(v.s) + "," + format_double(v.S) + "\n";
      }
      write("scale_function.csv", csv);
    }
    if (wants("fixation")) {
      if (!spec_.mean_z0) throw ConfigError("fixation needs mean_z0");
      const FixationClass fc = fixation_classify(wp, *spec_.mean_z0, spec_.theta);
      Json j = {{"outcome", to_string(fc.outcome)}, {"mean_z0", *spec_.mean_z0}};
      if (fc.stationary) {
        j["theta"] = fc.stationary->theta;
        j["u"] = fc.stationary->u;
        j["v"] = fc.stationary->v;
        j["c_theta"] = fc.stationary->c_theta;
      }
      write("fixation.json", j.dump(2) + "\n");
    }
  }

  std::unique_ptr<SdeModel> limit_model() const {
    const WfParams& wp = *spec_.limit;
    switch (spec_.model) {
      case ModelKind::wf: {
        GraphSpec gs = spec_.graph.value_or(GraphSpec{GraphKind::complete_uniform, spec_.particles});
        return std::make_unique<WfSpatialModel>(wf_spatial_model(wp, build_deme_graph(gs)));
      }
      case ModelKind::meanfield:
        return std::make_unique<MeanfieldModel>(meanfield_model(wp, spec_.particles));
      case ModelKind::mckean_vlasov:
        return std::make_unique<McKeanVlasovModel>(mckean_vlasov_model(wp, spec_.particles));
      case ModelKind::frozen_theta:
        return std::make_unique<FrozenThetaModel>(frozen_theta_model(wp, *spec_.theta, spec_.particles));
      case ModelKind::single_colony:
        return std::make_unique<SingleColonyModel>(single_colony_model(wp));
      default: break;
    }
    throw ConfigError("not a limit model");
  }

  InitialSampler limit_initial(std::size_t dim) const {
    const InitialSpec& in = spec_.initial;
    if (in.kind == "uniform") return uniform_initial(spec_.seed, dim, in.lo, in.hi);
    if (in.kind == "constant") {
      return [dim, v = in.value](std::uint64_t) { return std::vector<double>(dim, v); };
    }
    if (in.kind == "values") return broadcast(in.values, dim);
    throw ConfigError("initial.kind '" + in.kind + "' is not available for limit models");
  }

  static InitialSampler broadcast(const std::vector<double>& values, std::size_t dim) {
    if (values.size() != 1 && values.size() != dim) {
      throw ConfigError("initial.values: expected 1 or " + std::to_string(dim) + " entries");
    }
    std::vector<double> x = values.size() == 1 ? std::vector<double>(dim, values[0]) : values;
    return [x](std::uint64_t) { return x; };
  }

  void run_simulation() {
    if (spec_.model == ModelKind::micro) {
      run_micro();
      return;
    }
    check_known({"paths", "monotone_moment", "stationary_ks", "fixation", "coupling"});
    const WfParams& wp = *spec_.limit;
    const auto model = limit_model();
    const InitialSampler x0 = limit_initial(model->dimension());
    const IntegratorConfig& cfg = spec_.integrator;

    std::vector<std::vector<double>> gap_series;
    std::vector<double> occupation;
    const double burn_in = number_or(options("stationary_ks"), "burn_in", 0.0, "stationary_ks");
    EnsembleOptions eo;
    eo.seed = spec_.seed;
    eo.replicas = spec_.replicas;
    eo.threads = opt_.threads;
    eo.histogram_bins = spec_.histogram_bins;
    eo.on_path = [&](std::uint64_t r, const Path& p) {
      if (r == 0 && wants("paths")) write("path_replica0.csv", path_csv(p));
      if (wants("monotone_moment")) gap_series.push_back(inverse_gap_series(p, wp.a));
      if (wants("stationary_ks")) {
        for (std::size_t k = 0; k < p.size(); ++k) {
          if (p.times[k] < burn_in) continue;
          for (double z : p.state(k)) occupation.push_back(z);
        }
      }
    };
    const EnsembleStats stats = ensemble(*model, x0, cfg, eo);
    write("ensemble.csv", ensemble_csv(stats));
    write("ensemble.json", ensemble_json(stats).dump() + "\n");

    if (wants("monotone_moment")) {
      std::vector<double> mean(stats.times.size(), 0.0);
      std::vector<double> se(stats.times.size(), 0.0);
      const double R = static_cast<double>(gap_series.size());
      for (std::size_t k = 0; k < mean.size(); ++k) {
        for (const auto& s : gap_series) mean[k] += s[k];
        mean[k] /= R;
        double ss = 0.0;
        for (const auto& s : gap_series) ss += (s[k] - mean[k]) * (s[k] - mean[k]);
        se[k] = R > 1.0 ? std::sqrt(ss / (R - 1.0) / R) : 0.0;
      }
      write("monotone_moment.csv", series_csv(stats.times, mean, se));
      const MonotoneVerdict v = monotone_moment_check(stats.times, gap_series, wp);
      verdict("monotone_moment", v.consistent, to_json(v));
    }
    if (wants("stationary_ks")) {
      if (spec_.model != ModelKind::frozen_theta) throw ConfigError("stationary_ks needs frozen_theta");
      const double threshold = number_or(options("stationary_ks"), "threshold", 0.05, "stationary_ks");
      const StationaryModel sm = make_stationary_model(wp, *spec_.theta);
      const double d = ks_distance(occupation, stationary_cdf_table(sm));
      verdict("stationary_ks", d < threshold,
              {{"ks_distance", d}, {"threshold", threshold}, {"samples", occupation.size()}});
    }
    if (wants("fixation")) {
      const auto z0 = x0(0);
      double mean = 0.0;
      double theta = 0.0;
      for (double z : z0) {
        mean += z;
        theta += inverse_gap(wp.a, z);
      }
      mean /= static_cast<double>(z0.size());
      theta /= static_cast<double>(z0.size());
      const bool interior = mean > 0.0 && mean < 1.0 && wp.alpha == wp.beta;
      const FixationClass fc = fixation_classify(wp, mean, interior ? std::optional<double>(theta) : std::nullopt);
      double final_mean = 0.0;
      const std::size_t last = stats.times.size() - 1;
      for (std::size_t c = 0; c < stats.dimension; ++c) final_mean += stats.mean_at(last, c);
      final_mean /= static_cast<double>(stats.dimension);
      write("fixation.json", Json{{"outcome", to_string(fc.outcome)},
                                  {"mean_z0", mean},
                                  {"final_mean", final_mean},
                                  {"t_end", stats.times.back()}}
                                 .dump(2) + "\n");
    }
    if (wants("coupling")) {
      if (spec_.model != ModelKind::meanfield) throw ConfigError("coupling needs the meanfield model");
      const Json& o = options("coupling");
      CouplingConfig cc;
      if (o.contains("D_list")) {
        cc.D_list.clear();
        for (double d : number_list(o.at("D_list"), "coupling.D_list")) {
          cc.D_list.push_back(static_cast<std::size_t>(d));
        }
      }
      cc.D_ref = size_field(o, "D_ref", cc.D_ref, "coupling");
      cc.t_end = cfg.t_end;
      cc.record_interval = number_or(o, "record_interval", cc.record_interval, "coupling");
      cc.replicas = spec_.replicas;
      cc.seed = spec_.seed;
      cc.dt = cfg.dt;
      cc.boundary_policy = cfg.boundary_policy;
      cc.init_lo = spec_.initial.lo;
      cc.init_hi = spec_.initial.hi;
      cc.threads = opt_.threads;
      const auto rows = coupling_experiment(wp, cc);
      write("coupling.csv", coupling_csv(rows));
      double lo = INFINITY;
      double hi = 0.0;
      for (const auto& r : rows) {
        if (std::abs(r.t - cc.t_end) > 1e-9) continue;
        lo = std::min(lo, r.sqrtD_error);
        hi = std::max(hi, r.sqrtD_error);
      }
      const double limit = number_or(o, "max_ratio", 2.0, "coupling");
      verdict("coupling", hi / lo <= limit, {{"ratio", hi / lo}, {"max_ratio", limit}});
    }
  }

  void run_micro() {
    check_known({"paths", "deviation", "moment_monitor"});
    const ModelParameters& mp = *spec_.parameters;
    const DemeGraph g = build_deme_graph(mp.graph);
    const std::size_t D = g.size();
    const LimitConstants lc = derive_limit_constants(mp.ecology);
    std::vector<double> hfp0;
    if (spec_.initial.kind == "equilibrium") {
      const auto& F = spec_.initial.values;
      if (F.size() != 1 && F.size() != D) throw ConfigError("initial.values: expected 1 or D frequencies");
      hfp0 = equilibrium_hfp_state(mp.ecology, F.size() == 1 ? std::vector<double>(D, F[0]) : F);
    } else {
      hfp0 = broadcast(spec_.initial.values, 3 * D)(0);
    }
    const IntegratorConfig& cfg = spec_.integrator;
    PathProducer produce;
    double N = 1.0;
    std::unique_ptr<HfpModel> plain;
    if (spec_.micro) {
      N = spec_.micro->N;
      produce = [&, N](std::uint64_t r) {
        return rescaled_frequency_run(mp.ecology, spec_.micro->schedule, g, N, cfg.t_end,
                                      spec_.micro->record_interval, cfg, hfp0, spec_.seed, r);
      };
    } else {
      plain = std::make_unique<HfpModel>(hfp_model(mp.ecology, mp.scaling, g, cfg.floor_eps));
      N = mp.scaling.N;
      produce = [&](std::uint64_t r) { return integrate(*plain, hfp0, cfg, spec_.seed, r); };
    }

    std::vector<DeviationSeries> deviations;
    constexpr MonitorKind kinds[] = {MonitorKind::combined_p4, MonitorKind::inv_H2,
                                     MonitorKind::P_over_H2, MonitorKind::inv_P, MonitorKind::inv_PH};
    std::vector<std::vector<double>> monitor_sum(std::size(kinds));
    std::vector<double> times;
    EnsembleOptions eo;
    eo.seed = spec_.seed;
    eo.replicas = spec_.replicas;
    eo.threads = opt_.threads;
    eo.histogram_bins = spec_.histogram_bins;
    eo.on_path = [&](std::uint64_t r, const Path& p) {
      if (r == 0) times = p.times;
      if (r == 0 && wants("paths")) write("path_replica0.csv", path_csv(p));
      if (wants("deviation")) deviations.push_back(deviation_statistic(p, mp.ecology, lc, g, N));
      if (wants("moment_monitor")) {
        for (std::size_t m = 0; m < std::size(kinds); ++m) {
          const auto v = moment_monitor(p, mp.ecology, g, kinds[m]);
          if (monitor_sum[m].empty()) monitor_sum[m].assign(v.size(), 0.0);
          for (std::size_t k = 0; k < v.size(); ++k) monitor_sum[m][k] += v[k];
        }
      }
    };
    const EnsembleStats stats = ensemble(produce, eo);
    write("ensemble.csv", ensemble_csv(stats));
    write("ensemble.json", ensemble_json(stats).dump() + "\n");

    if (wants("deviation")) {
      const MeanSeries ms = deviation_ensemble(deviations);
      write("deviation.csv", series_csv(ms.times, ms.value, ms.stderr_));
      write("deviation.json",
            Json{{"N", N},
                 {"t", ms.times.back()},
                 {"value", ms.value.back()},
                 {"stderr", ms.stderr_.back()},
                 {"replicas", deviations.size()},
                 {"note", "finite-N estimate; boundedness across N is checked, the supremum over N "
                          "is not"}}
                    .dump(2) +
                "\n");
    }
    if (wants("moment_monitor")) {
      const double bound = number_or(options("moment_monitor"), "max_growth", 10.0, "moment_monitor");
      for (std::size_t m = 0; m < std::size(kinds); ++m) {
        auto& v = monitor_sum[m];
        for (double& x : v) x /= static_cast<double>(spec_.replicas);
        write("monitor_" + to_string(kinds[m]) + ".csv", series_csv(times, v));
        double peak = 0.0;
        for (double x : v) peak = std::max(peak, x);
        verdict("monitor_" + to_string(kinds[m]), peak <= bound * v.front(),
                {{"initial", v.front()}, {"peak", peak}, {"max_growth", bound}});
      }
    }
  }

  const ExperimentSpec& spec_;
  const RunOptions& opt_;
  RunReport report_;
};

std::filesystem::path resolve_out_dir(const ExperimentSpec& spec, const RunOptions& opt) {
  if (opt.out_dir) return *opt.out_dir;
  if (!spec.output.empty()) return spec.output;
  if (const char* root = std::getenv("ALTRUISM_OUTPUT_ROOT"); root && *root) {
    return std::filesystem::path(root) / spec.name;
  }
  return std::filesystem::path("runs") / spec.name;
}

}  // namespace

RunReport run_experiment(const ExperimentSpec& spec, const RunOptions& opt) {
  return Runner(spec, opt, resolve_out_dir(spec, opt)).run();
}

int run_command(const std::filesystem::path& spec_file, const RunOptions& opt, std::ostream& log) {
  ExperimentSpec spec;
  try {
    std::ifstream in(spec_file);
    if (!in) throw ConfigError("cannot open " + spec_file.string());
    spec = parse_experiment_spec(Json::parse(in));
  } catch (const Json::exception& e) {
    log << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    log << "config error: " << e.what() << '\n';
    return 2;
  }
  try {
    const RunReport r = run_experiment(spec, opt);
    for (const auto& [name, v] : r.verdicts.items()) {
      log << (v.at("pass").get<bool>() ? "PASS " : "FAIL ") << name << '\n';
    }
    log << "wrote " << r.files.size() << " files to " << r.out_dir.string() << '\n';
    return r.passed ? 0 : 1;
  } catch (const NumericalError& e) {
    log << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    log << "config error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    log << "config error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace altruism
