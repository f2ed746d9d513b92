#pragma once

// JSON experiment configuration shared by the CLI, the python module and the
// tests:
//
// {
//   "maps": [ { "rotation_angle": <turns>, "zeros": [[re, im], ...] }, ... ],
//   "driving": { "kind": "bernoulli", "p": [...] }
//            | { "kind": "rotation", "alpha": <real>, "thresholds": [...] },
//   "theta_turns": <real>,
//   "seed": <integer>
// }

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "blaschke/cocycle_path.hpp"

namespace blaschke {

struct ExperimentConfig {
    MapTable table;
    DrivingSystem driving;
    UnitComplex theta;
    std::uint64_t seed = 1;
    std::string canonical_text;  // serialized form used for hashing
    std::uint64_t hash = 0;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// FNV-1a over bytes; used to stamp outputs with the config identity.
std::uint64_t fnv1a(const std::string& bytes);

/// The bundled two-map example: z^2 and -((z-0.4)/(1-0.4z))^2 with
/// P(symbol 0) = p, plus its rotation-driven variant (alpha = 1/pi,
/// threshold at p).
ExperimentConfig example_config_bernoulli(double p = 0.2, std::uint64_t seed = 1);
ExperimentConfig example_config_rotation(double p = 0.2, std::uint64_t seed = 1);

}  // namespace blaschke
