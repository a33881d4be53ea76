#pragma once

#include <initializer_list>
#include <string>

#include <json.hpp>

#include "altruism/model/graph.hpp"
#include "altruism/model/params.hpp"

namespace altruism {

using Json = nlohmann::json;

/// Document with top-level keys "ecology", "scaling", "graph". Only "ecology" is required.
struct ModelParameters {
  EcologyParams ecology;
  ScalingParams scaling;
  GraphSpec graph;
};

/// Throws ConfigError if `obj` is not an object or carries a key outside `allowed`.
void reject_unknown_keys(const Json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where);

/// Reads a required number; ConfigError names the missing path on failure.
double require_number(const Json& obj, const char* key, const std::string& where);
double number_or(const Json& obj, const char* key, double fallback, const std::string& where);

EcologyParams parse_ecology(const Json& j);
ScalingParams parse_scaling(const Json& j);
GraphSpec parse_graph(const Json& j);
ModelParameters parse_model_parameters(const Json& j);
ModelParameters load_model_parameters(const std::string& path);

Json to_json(const EcologyParams& p);
Json to_json(const ScalingParams& sp);
Json to_json(const GraphSpec& g);
Json to_json(const ModelParameters& mp);

}  // namespace altruism
