#include "blaschke/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace blaschke {

namespace {

using nlohmann::json;

BlaschkeProduct parse_map(const json& jm) {
    if (!jm.contains("zeros") || !jm["zeros"].is_array() || jm["zeros"].empty()) {
        throw ConfigError("config: each map needs a non-empty \"zeros\" array");
    }
    const double turns = jm.value("rotation_angle", 0.0);
    std::vector<DiscPoint> zeros;
    for (const json& jz : jm["zeros"]) {
        if (!jz.is_array() || jz.size() != 2) {
            throw ConfigError("config: zeros must be [re, im] pairs");
        }
        try {
            zeros.emplace_back(Complex(jz[0].get<double>(), jz[1].get<double>()));
        } catch (const std::domain_error& e) {
            throw ConfigError(std::string("config: invalid zero: ") + e.what());
        }
    }
    return BlaschkeProduct(UnitComplex::from_turns(turns), std::move(zeros));
}

DrivingSystem parse_driving(const json& jd) {
    const std::string kind = jd.value("kind", "");
    try {
        if (kind == "bernoulli") {
            if (!jd.contains("p")) throw ConfigError("config: bernoulli driving needs \"p\"");
            return DrivingSystem::bernoulli(jd["p"].get<std::vector<double>>());
        }
        if (kind == "rotation") {
            if (!jd.contains("alpha") || !jd.contains("thresholds")) {
                throw ConfigError("config: rotation driving needs \"alpha\" and \"thresholds\"");
            }
            return DrivingSystem::rotation(jd["alpha"].get<double>(),
                                           jd["thresholds"].get<std::vector<double>>());
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    throw ConfigError("config: driving kind must be \"bernoulli\" or \"rotation\"");
}

}  // namespace

ExperimentConfig parse_config(const nlohmann::json& j) {
    if (!j.contains("maps") || !j["maps"].is_array() || j["maps"].empty()) {
        throw ConfigError("config: need a non-empty \"maps\" array");
    }
    std::vector<BlaschkeProduct> maps;
    for (const json& jm : j["maps"]) maps.push_back(parse_map(jm));
    if (!j.contains("driving")) throw ConfigError("config: missing \"driving\"");
    DrivingSystem driving = parse_driving(j["driving"]);
    if (driving.alphabet_size() > static_cast<int>(maps.size())) {
        throw ConfigError("config: driving alphabet larger than the map table");
    }
    ExperimentConfig cfg{MapTable(std::move(maps)), std::move(driving),
                         UnitComplex::from_turns(j.value("theta_turns", 0.0)),
                         j.value("seed", std::uint64_t{1}), "", 0};
    cfg.canonical_text = j.dump();
    cfg.hash = fnv1a(cfg.canonical_text);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: parse error: ") + e.what());
    }
    return parse_config(j);
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

namespace {

json example_maps() {
    return json::array({
        json{{"rotation_angle", 0.0}, {"zeros", json::array({{0.0, 0.0}, {0.0, 0.0}})}},
        json{{"rotation_angle", 0.5}, {"zeros", json::array({{0.4, 0.0}, {0.4, 0.0}})}},
    });
}

}  // namespace

ExperimentConfig example_config_bernoulli(double p, std::uint64_t seed) {
    json j{{"maps", example_maps()},
           {"driving", json{{"kind", "bernoulli"}, {"p", json::array({p, 1.0 - p})}}},
           {"theta_turns", 0.0},
           {"seed", seed}};
    return parse_config(j);
}

ExperimentConfig example_config_rotation(double p, std::uint64_t seed) {
    json j{{"maps", example_maps()},
           {"driving", json{{"kind", "rotation"},
                            {"alpha", 1.0 / kPi},
                            {"thresholds", json::array({0.0, p, 1.0})}}},
           {"theta_turns", 0.0},
           {"seed", seed}};
    return parse_config(j);
}

}  // namespace blaschke
