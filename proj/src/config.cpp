#include "migrasim/config.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace migrasim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const char* scope,
                         std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool found = false;
        for (const char* k : known) {
            if (key == k) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw std::runtime_error(std::string("config: unknown key \"") +
                                     (scope[0] ? std::string(scope) + "." : "") +
                                     key + "\"");
        }
    }
}

template <typename T>
void read(const json& obj, const char* scope, const char* key, T& target,
          bool required = false) {
    if (!obj.contains(key)) {
        if (required) {
            throw std::runtime_error(std::string("config: missing required key \"") +
                                     key + "\"");
        }
        return;
    }
    try {
        obj.at(key).get_to(target);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config: bad value for \"") +
                                 (scope[0] ? std::string(scope) + "." : "") +
                                 key + "\": " + e.what());
    }
}

const std::map<std::string, std::function<void(ScenarioConfig&, double)>>&
override_setters() {
    static const std::map<std::string, std::function<void(ScenarioConfig&, double)>>
        setters = {
            {"n_workers", [](ScenarioConfig& c, double v) {
                 c.n_workers = static_cast<std::size_t>(v);
             }},
            {"seed", [](ScenarioConfig& c, double v) {
                 c.seed = static_cast<std::uint64_t>(v);
             }},
            {"horizon_months", [](ScenarioConfig& c, double v) {
                 c.horizon_months = static_cast<std::size_t>(v);
             }},
            {"sparse_factor", [](ScenarioConfig& c, double v) { c.sparse_factor = v; }},
            {"weight_upper", [](ScenarioConfig& c, double v) { c.weight_upper = v; }},
            {"initial_urban_fraction",
             [](ScenarioConfig& c, double v) { c.initial_urban_fraction = v; }},
            {"x0_magnitude", [](ScenarioConfig& c, double v) { c.x0_magnitude = v; }},
            {"dt_days", [](ScenarioConfig& c, double v) { c.dt_days = v; }},
            {"dynamics.a", [](ScenarioConfig& c, double v) { c.dynamics.a = v; }},
            {"dynamics.f", [](ScenarioConfig& c, double v) { c.dynamics.f = v; }},
            {"dynamics.input_gain",
             [](ScenarioConfig& c, double v) { c.dynamics.input_gain = v; }},
            {"migration.beta",
             [](ScenarioConfig& c, double v) { c.migration.beta = v; }},
            {"migration.review_period_days",
             [](ScenarioConfig& c, double v) { c.migration.review_period_days = v; }},
            {"econ.alpha", [](ScenarioConfig& c, double v) { c.econ.alpha = v; }},
            {"econ.phi", [](ScenarioConfig& c, double v) { c.econ.phi = v; }},
            {"econ.eta", [](ScenarioConfig& c, double v) { c.econ.eta = v; }},
            {"econ.econ_b", [](ScenarioConfig& c, double v) { c.econ.econ_b = v; }},
            {"econ.A_m", [](ScenarioConfig& c, double v) { c.econ.A_m = v; }},
            {"econ.A_a", [](ScenarioConfig& c, double v) { c.econ.A_a = v; }},
            {"econ.Z_m", [](ScenarioConfig& c, double v) { c.econ.Z_m = v; }},
            {"econ.Z_a", [](ScenarioConfig& c, double v) { c.econ.Z_a = v; }},
            {"econ.rho", [](ScenarioConfig& c, double v) { c.econ.rho = v; }},
            {"econ.gamma", [](ScenarioConfig& c, double v) { c.econ.gamma = v; }},
            {"econ.r_u", [](ScenarioConfig& c, double v) { c.econ.r_u = v; }},
        };
    return setters;
}

} // namespace

ParsedConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("config: JSON parse error: ") +
                                 e.what());
    }
    if (!root.is_object()) {
        throw std::runtime_error("config: top level must be a JSON object");
    }
    reject_unknown_keys(root, "",
                        {"schema_version", "n_workers", "seed", "horizon_months",
                         "sparse_factor", "weight_upper", "initial_urban_fraction",
                         "hukou_initial_urban", "x0_magnitude", "dt_days",
                         "blowup_bound", "clamp_on_divergence", "zero_tol", "econ",
                         "dynamics", "migration", "sweep"});

    int schema_version = kSchemaVersion;
    read(root, "", "schema_version", schema_version);
    if (schema_version != kSchemaVersion) {
        throw std::runtime_error("config: unsupported schema_version");
    }

    ParsedConfig parsed;
    ScenarioConfig& c = parsed.scenario;
    read(root, "", "n_workers", c.n_workers, /*required=*/true);
    read(root, "", "seed", c.seed, /*required=*/true);
    read(root, "", "horizon_months", c.horizon_months, /*required=*/true);
    read(root, "", "sparse_factor", c.sparse_factor);
    read(root, "", "weight_upper", c.weight_upper);
    read(root, "", "initial_urban_fraction", c.initial_urban_fraction);
    read(root, "", "hukou_initial_urban", c.hukou_initial_urban);
    read(root, "", "x0_magnitude", c.x0_magnitude);
    read(root, "", "dt_days", c.dt_days);
    read(root, "", "blowup_bound", c.blowup_bound);
    read(root, "", "clamp_on_divergence", c.clamp_on_divergence);
    read(root, "", "zero_tol", c.zero_tol);

    if (root.contains("econ")) {
        const json& e = root.at("econ");
        reject_unknown_keys(e, "econ",
                            {"alpha", "phi", "eta", "econ_b", "A_m", "A_a", "Z_m",
                             "Z_a", "rho", "gamma", "r_u"});
        read(e, "econ", "alpha", c.econ.alpha);
        read(e, "econ", "phi", c.econ.phi);
        read(e, "econ", "eta", c.econ.eta);
        read(e, "econ", "econ_b", c.econ.econ_b);
        read(e, "econ", "A_m", c.econ.A_m);
        read(e, "econ", "A_a", c.econ.A_a);
        read(e, "econ", "Z_m", c.econ.Z_m);
        read(e, "econ", "Z_a", c.econ.Z_a);
        read(e, "econ", "rho", c.econ.rho);
        read(e, "econ", "gamma", c.econ.gamma);
        read(e, "econ", "r_u", c.econ.r_u);
    }
    if (root.contains("dynamics")) {
        const json& d = root.at("dynamics");
        reject_unknown_keys(d, "dynamics", {"a", "f", "input_gain"});
        read(d, "dynamics", "a", c.dynamics.a);
        read(d, "dynamics", "f", c.dynamics.f);
        read(d, "dynamics", "input_gain", c.dynamics.input_gain);
    }
    if (root.contains("migration")) {
        const json& m = root.at("migration");
        reject_unknown_keys(m, "migration", {"beta", "review_period_days"});
        read(m, "migration", "beta", c.migration.beta);
        read(m, "migration", "review_period_days",
             c.migration.review_period_days);
    }
    if (root.contains("sweep")) {
        const json& s = root.at("sweep");
        if (!s.is_object()) {
            throw std::runtime_error("config: \"sweep\" must be an object");
        }
        for (const auto& [key, value] : s.items()) {
            if (override_setters().find(key) == override_setters().end()) {
                throw std::runtime_error("config: unknown sweep parameter \"" +
                                         key + "\"");
            }
            if (!value.is_array() || value.empty()) {
                throw std::runtime_error("config: sweep values for \"" + key +
                                         "\" must be a non-empty array");
            }
            parsed.sweep[key] = value.get<std::vector<double>>();
        }
    }

    try {
        c.validate();
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("config: invalid value: ") + e.what());
    }
    return parsed;
}

std::string serialize_config(const ScenarioConfig& c) {
    json root;
    root["schema_version"] = kSchemaVersion;
    root["n_workers"] = c.n_workers;
    root["seed"] = c.seed;
    root["horizon_months"] = c.horizon_months;
    root["sparse_factor"] = c.sparse_factor;
    root["weight_upper"] = c.weight_upper;
    root["initial_urban_fraction"] = c.initial_urban_fraction;
    root["hukou_initial_urban"] = c.hukou_initial_urban;
    root["x0_magnitude"] = c.x0_magnitude;
    root["dt_days"] = c.dt_days;
    root["blowup_bound"] = c.blowup_bound;
    root["clamp_on_divergence"] = c.clamp_on_divergence;
    root["zero_tol"] = c.zero_tol;
    root["econ"] = {{"alpha", c.econ.alpha},   {"phi", c.econ.phi},
                    {"eta", c.econ.eta},       {"econ_b", c.econ.econ_b},
                    {"A_m", c.econ.A_m},       {"A_a", c.econ.A_a},
                    {"Z_m", c.econ.Z_m},       {"Z_a", c.econ.Z_a},
                    {"rho", c.econ.rho},       {"gamma", c.econ.gamma},
                    {"r_u", c.econ.r_u}};
    root["dynamics"] = {{"a", c.dynamics.a},
                        {"f", c.dynamics.f},
                        {"input_gain", c.dynamics.input_gain}};
    root["migration"] = {{"beta", c.migration.beta},
                         {"review_period_days", c.migration.review_period_days}};
    return root.dump(2);
}

void apply_override(ScenarioConfig& config, const std::string& path,
                    double value) {
    const auto it = override_setters().find(path);
    if (it == override_setters().end()) {
        throw std::runtime_error("config: unknown parameter path \"" + path +
                                 "\"");
    }
    it->second(config, value);
}

std::vector<SweepCell> expand_sweep(const ScenarioConfig& base,
                                    const SweepGrid& grid) {
    std::vector<SweepCell> cells;
    std::size_t total = 1;
    for (const auto& [path, values] : grid) total *= values.size();
    cells.reserve(total);

    for (std::size_t index = 0; index < total; ++index) {
        SweepCell cell;
        cell.index = index;
        cell.scenario = base;
        std::size_t rem = index;
        // lexicographic key order (std::map), last key varies fastest
        for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
            const auto& values = it->second;
            const std::size_t pick = rem % values.size();
            rem /= values.size();
            cell.assignment[it->first] = values[pick];
        }
        for (const auto& [path, value] : cell.assignment) {
            apply_override(cell.scenario, path, value);
        }
        cell.scenario.seed = cell_seed(base.seed, index);
        cells.push_back(std::move(cell));
    }
    return cells;
}

} // namespace migrasim
