#include "migrasim/io.hpp"

#include <json.hpp>

#include "migrasim/config.hpp"
#include "migrasim/text.hpp"

namespace migrasim {

std::string series_csv(const SimResult& result) {
    std::string out =
        "t_days,n_urban,v,bv,spread,urban_inflow,urban_outflow\n";
    for (const MonthRecord& r : result.series) {
        out += shortest(r.t_days);
        out += ',';
        out += std::to_string(r.n_urban);
        out += ',';
        out += shortest(r.v);
        out += ',';
        out += shortest(r.bv);
        out += ',';
        out += shortest(r.spread);
        out += ',';
        out += std::to_string(r.urban_inflow);
        out += ',';
        out += std::to_string(r.urban_outflow);
        out += '\n';
    }
    return out;
}

std::string summary_json(const ScenarioConfig& config, const SimResult& result) {
    nlohmann::json root;
    root["schema_version"] = kSchemaVersion;
    root["config"] = nlohmann::json::parse(serialize_config(config));
    root["verdict"] = {
        {"has_spanning_tree", result.verdict.has_spanning_tree},
        {"lambda2_re", result.verdict.lambda2_re},
        {"consensus_predicted", result.verdict.consensus_predicted}};
    root["diverged"] = result.diverged;
    root["status"] =
        result.status == RunStatus::Ok ? "ok" : "sector_collapse";
    root["summary"]["oscillation_amplitude"] =
        result.summary.oscillation_amplitude;
    if (result.summary.overshoot_ratio) {
        root["summary"]["overshoot_ratio"] = *result.summary.overshoot_ratio;
    } else {
        root["summary"]["overshoot_ratio"] = nullptr;
    }
    root["months_recorded"] = result.series.size();
    return root.dump(2) + "\n";
}

} // namespace migrasim
