#include "altruism/model/params_io.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "altruism/errors.hpp"

namespace altruism {

void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected a JSON object");
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) throw ConfigError(where + ": unknown key '" + item.key() + "'");
  }
}

double require_number(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(where + "." + key + ": missing");
  if (!it->is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return it->get<double>();
}

double number_or(const Json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  return require_number(obj, key, where);
}

namespace {

std::size_t size_or(const Json& obj, const char* key, std::size_t fallback,
                    const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(where + "." + key + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

EcologyParams parse_ecology(const Json& j) {
  const std::string w = "ecology";
  reject_unknown_keys(j, {"lambda", "K", "delta", "nu", "gamma", "eta", "rho"}, w);
  EcologyParams p;
  p.lambda = require_number(j, "lambda", w);
  p.K = require_number(j, "K", w);
  p.delta = require_number(j, "delta", w);
  p.nu = require_number(j, "nu", w);
  p.gamma = require_number(j, "gamma", w);
  p.eta = require_number(j, "eta", w);
  p.rho = require_number(j, "rho", w);
  validate(p);
  return p;
}

ScalingParams parse_scaling(const Json& j) {
  const std::string w = "scaling";
  reject_unknown_keys(
      j, {"N", "kappa_H", "kappa_P", "alpha", "beta_H", "beta_P", "iota_H", "iota_P"}, w);
  ScalingParams sp;
  sp.N = number_or(j, "N", 1.0, w);
  sp.kappa_H = number_or(j, "kappa_H", 0.0, w);
  sp.kappa_P = number_or(j, "kappa_P", 0.0, w);
  sp.alpha = number_or(j, "alpha", 0.0, w);
  sp.beta_H = number_or(j, "beta_H", 0.0, w);
  sp.beta_P = number_or(j, "beta_P", 0.0, w);
  sp.iota_H = number_or(j, "iota_H", 0.0, w);
  sp.iota_P = number_or(j, "iota_P", 0.0, w);
  validate(sp);
  return sp;
}

GraphSpec parse_graph(const Json& j) {
  const std::string w = "graph";
  reject_unknown_keys(j, {"kind", "D", "Dx", "Dy", "weight_decay"}, w);
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    throw ConfigError("graph.kind: missing or not a string");
  }
  GraphSpec g;
  g.kind = parse_graph_kind(j.at("kind").get<std::string>());
  g.D = size_or(j, "D", 1, w);
  g.Dx = size_or(j, "Dx", 1, w);
  g.Dy = size_or(j, "Dy", 1, w);
  g.weight_decay = number_or(j, "weight_decay", 0.5, w);
  build_deme_graph(g);  // validates sizes
  return g;
}

ModelParameters parse_model_parameters(const Json& j) {
  reject_unknown_keys(j, {"ecology", "scaling", "graph"}, "parameters");
  if (!j.contains("ecology")) throw ConfigError("parameters.ecology: missing");
  ModelParameters mp;
  mp.ecology = parse_ecology(j.at("ecology"));
  if (j.contains("scaling")) mp.scaling = parse_scaling(j.at("scaling"));
  if (j.contains("graph")) mp.graph = parse_graph(j.at("graph"));
  return mp;
}

ModelParameters load_model_parameters(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return parse_model_parameters(j);
}

Json to_json(const EcologyParams& p) {
  return {{"lambda", p.lambda}, {"K", p.K},     {"delta", p.delta}, {"nu", p.nu},
          {"gamma", p.gamma},   {"eta", p.eta}, {"rho", p.rho}};
}

Json to_json(const ScalingParams& sp) {
  return {{"N", sp.N},           {"kappa_H", sp.kappa_H}, {"kappa_P", sp.kappa_P},
          {"alpha", sp.alpha},   {"beta_H", sp.beta_H},   {"beta_P", sp.beta_P},
          {"iota_H", sp.iota_H}, {"iota_P", sp.iota_P}};
}

Json to_json(const GraphSpec& g) {
  return {{"kind", to_string(g.kind)},
          {"D", g.D},
          {"Dx", g.Dx},
          {"Dy", g.Dy},
          {"weight_decay", g.weight_decay}};
}

Json to_json(const ModelParameters& mp) {
  return {{"ecology", to_json(mp.ecology)},
          {"scaling", to_json(mp.scaling)},
          {"graph", to_json(mp.graph)}};
}

}  // namespace altruism
