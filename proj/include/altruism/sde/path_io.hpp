#pragma once

#include <string>

#include "altruism/sde/integrator.hpp"

namespace altruism {

/// Shortest round-trip decimal form; identical inputs give identical bytes.
std::string format_double(double v);

/// Header `t,<component names...>`, one row per recorded time.
std::string path_csv(const Path& p);

}  // namespace altruism
