#include "farswarm/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace farswarm {

namespace {

using nlohmann::json;

const char* const known_keys[] = {"geometry", "n",         "density",      "dx",
                                  "rule",     "cutoff",    "seed",         "max_steps",
                                  "stride",   "densities", "realizations", "out"};

GeometryKind parse_geometry(const std::string& name) {
    if (name == "disc") return GeometryKind::Disc;
    if (name == "square") return GeometryKind::Square;
    if (name == "semidisc") return GeometryKind::SemiDisc;
    if (name == "segment") return GeometryKind::Segment;
    if (name == "ball3d") return GeometryKind::Ball3D;
    if (name == "lattice_disc") return GeometryKind::LatticeInDisc;
    if (name == "radial_1_over_r") return GeometryKind::RadialOneOverR;
    throw ConfigError("config key \"geometry\": unknown geometry \"" + name + "\"");
}

const json& require(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(std::string("config: missing required key \"") + key + "\"");
    return *it;
}

double as_number(const json& v, const char* key) {
    if (!v.is_number()) throw ConfigError(std::string("config key \"") + key + "\": expected a number");
    return v.get<double>();
}

std::int64_t as_integer(const json& v, const char* key) {
    if (!v.is_number_integer())
        throw ConfigError(std::string("config key \"") + key + "\": expected an integer");
    return v.get<std::int64_t>();
}

std::string as_string(const json& v, const char* key) {
    if (!v.is_string()) throw ConfigError(std::string("config key \"") + key + "\": expected a string");
    return v.get<std::string>();
}

}  // namespace

Rule RunConfig::to_rule() const {
    return rule_kind == RuleKind::FarthestPoint ? Rule::farthest() : Rule::nearest(cutoff);
}

InitSpec RunConfig::to_init_spec() const { return make_init_spec(geometry, n, density, seed); }

EnsembleSpec RunConfig::to_ensemble_spec() const {
    if (densities.empty())
        throw ConfigError("config: ensemble runs require the \"densities\" key");
    if (realizations < 2)
        throw ConfigError("config: ensemble runs require \"realizations\" >= 2");
    EnsembleSpec spec;
    spec.geometry = geometry;
    spec.size = to_init_spec().size;  // radius pinned by the base (n, density) pair
    spec.densities = densities;
    spec.realizations = realizations;
    spec.step_size = step_size;
    spec.rule = to_rule();
    spec.max_steps = max_steps;
    spec.stride = stride;
    spec.base_seed = seed;
    return spec;
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");

    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : known_keys) known = known || key == k;
        if (!known) throw ConfigError("config: unknown key \"" + key + "\"");
    }

    RunConfig cfg;
    cfg.geometry = parse_geometry(as_string(require(j, "geometry"), "geometry"));

    const std::int64_t n = as_integer(require(j, "n"), "n");
    if (n < 2) throw ConfigError("config key \"n\": must be >= 2");
    cfg.n = static_cast<int>(n);

    cfg.density = as_number(require(j, "density"), "density");
    if (!(cfg.density > 0.0)) throw ConfigError("config key \"density\": must be > 0");

    cfg.step_size = as_number(require(j, "dx"), "dx");
    if (!(cfg.step_size > 0.0)) throw ConfigError("config key \"dx\": must be > 0");

    const std::string rule = as_string(require(j, "rule"), "rule");
    if (rule == "farthest") {
        cfg.rule_kind = RuleKind::FarthestPoint;
    } else if (rule == "nearest") {
        cfg.rule_kind = RuleKind::NearestWithCutoff;
    } else {
        throw ConfigError("config key \"rule\": expected \"farthest\" or \"nearest\"");
    }

    cfg.cutoff = cfg.step_size;  // local rule: sensing resumes past one step
    if (const auto it = j.find("cutoff"); it != j.end()) {
        cfg.cutoff = as_number(*it, "cutoff");
        if (!(cfg.cutoff > 0.0)) throw ConfigError("config key \"cutoff\": must be > 0");
    }

    const std::int64_t seed = as_integer(require(j, "seed"), "seed");
    if (seed < 0) throw ConfigError("config key \"seed\": must be >= 0");
    cfg.seed = static_cast<std::uint64_t>(seed);

    if (const auto it = j.find("max_steps"); it != j.end()) {
        cfg.max_steps = as_integer(*it, "max_steps");
        if (cfg.max_steps < 1) throw ConfigError("config key \"max_steps\": must be >= 1");
    }
    if (const auto it = j.find("stride"); it != j.end()) {
        cfg.stride = as_integer(*it, "stride");
        if (cfg.stride < 1) throw ConfigError("config key \"stride\": must be >= 1");
    }
    if (const auto it = j.find("densities"); it != j.end()) {
        if (!it->is_array()) throw ConfigError("config key \"densities\": expected an array");
        for (const auto& v : *it) {
            const double d = as_number(v, "densities");
            if (!(d > 0.0)) throw ConfigError("config key \"densities\": entries must be > 0");
            cfg.densities.push_back(d);
        }
    }
    if (const auto it = j.find("realizations"); it != j.end()) {
        const std::int64_t r = as_integer(*it, "realizations");
        if (r < 2) throw ConfigError("config key \"realizations\": must be >= 2");
        cfg.realizations = static_cast<int>(r);
    }
    if (const auto it = j.find("out"); it != j.end()) cfg.out = as_string(*it, "out");

    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace farswarm
