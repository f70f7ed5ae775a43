#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "migrasim/config.hpp"
#include "migrasim/engine.hpp"
#include "migrasim/io.hpp"

namespace fs = std::filesystem;
using namespace migrasim;

namespace {

struct CliError : std::runtime_error {
    CliError(std::string code, const std::string& message)
        : std::runtime_error(message), code(std::move(code)) {}
    std::string code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("E_CONFIG_OPEN", "cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("E_OUTPUT", "cannot write file: " + path.string());
    out << content;
}

ParsedConfig load_config(const std::string& path) {
    try {
        return parse_config(read_file(path));
    } catch (const CliError&) {
        throw;
    } catch (const std::exception& e) {
        throw CliError("E_CONFIG", e.what());
    }
}

void write_run_outputs(const fs::path& dir, const ScenarioConfig& config,
                       const SimResult& result, const std::string& format) {
    fs::create_directories(dir);
    if (format == "csv" || format == "both") {
        write_file(dir / "series.csv", series_csv(result));
    }
    if (format == "json" || format == "both") {
        write_file(dir / "summary.json", summary_json(config, result));
    }
}

int sweep_thread_count() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    if (const char* cap = std::getenv("MIGRASIM_THREADS")) {
        const int requested = std::atoi(cap);
        if (requested >= 1 && requested < threads) threads = requested;
    }
    return std::max(threads, 1);
}

int do_run(const std::string& config_path, const std::string& out_dir,
           std::optional<std::uint64_t> seed, const std::string& format) {
    ParsedConfig parsed = load_config(config_path);
    ScenarioConfig config = parsed.scenario;
    if (seed) config.seed = *seed;
    const SimResult result = run(config);
    write_run_outputs(out_dir, config, result, format);
    std::cout << "run complete: " << result.series.size() - 1
              << " months recorded, status="
              << (result.status == RunStatus::Ok ? "ok" : "sector_collapse")
              << (result.diverged ? ", diverged" : "") << "\n";
    return 0;
}

int do_sweep(const std::string& config_path, const std::string& out_dir,
             std::optional<std::uint64_t> seed, const std::string& format) {
    ParsedConfig parsed = load_config(config_path);
    if (parsed.sweep.empty()) {
        throw CliError("E_SWEEP", "config has no \"sweep\" section");
    }
    ScenarioConfig base = parsed.scenario;
    if (seed) base.seed = *seed;
    const std::vector<SweepCell> cells = expand_sweep(base, parsed.sweep);
    fs::create_directories(out_dir);

    std::vector<std::string> status(cells.size(), "ok");
    const int threads = sweep_thread_count();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(cells.size());
         ++k) {
        const SweepCell& cell = cells[static_cast<std::size_t>(k)];
        try {
            const SimResult result = run(cell.scenario);
            const fs::path cell_dir =
                fs::path(out_dir) / ("cell_" + std::to_string(cell.index));
            write_run_outputs(cell_dir, cell.scenario, result, format);
            if (result.status != RunStatus::Ok) {
                status[static_cast<std::size_t>(k)] = "sector_collapse";
            }
        } catch (const std::exception& e) {
            status[static_cast<std::size_t>(k)] =
                std::string("failed: ") + e.what();
        }
    }

    nlohmann::json manifest;
    manifest["schema_version"] = kSchemaVersion;
    manifest["base_seed"] = base.seed;
    manifest["cell_count"] = cells.size();
    for (const SweepCell& cell : cells) {
        nlohmann::json entry;
        entry["index"] = cell.index;
        entry["seed"] = cell.scenario.seed;
        entry["assignment"] = cell.assignment;
        entry["status"] = status[cell.index];
        entry["path"] = "cell_" + std::to_string(cell.index);
        manifest["cells"].push_back(std::move(entry));
    }
    write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "sweep complete: " << cells.size() << " cells\n";
    return 0;
}

int do_analyze_graph(const std::string& config_path,
                     const std::string& graph_path,
                     const std::string& export_path,
                     std::optional<std::uint64_t> seed) {
    ParsedConfig parsed = load_config(config_path);
    ScenarioConfig& config = parsed.scenario;
    if (seed) config.seed = *seed;

    SocialGraph graph = [&] {
        if (!graph_path.empty()) {
            std::ifstream in(graph_path);
            if (!in) {
                throw CliError("E_GRAPH_OPEN",
                               "cannot open graph file: " + graph_path);
            }
            return read_edge_list(in);
        }
        RandomStream rng(config.seed);
        SocialGraph g = random_graph(config.n_workers, config.weight_upper,
                                     config.sparse_factor, rng);
        g.generation_seed = config.seed;
        return g;
    }();

    const Spectrum s = spectrum(laplacian(graph), graph.order(), config.zero_tol);
    const ConsensusVerdict verdict =
        predict_consensus(graph, config.dynamics, config.zero_tol);

    std::cout << "order: " << graph.order() << "\n"
              << "spanning_tree: " << (verdict.has_spanning_tree ? "yes" : "no")
              << "\n"
              << "zero_eigenvalues: " << s.zero_count << "\n"
              << "lambda2_re: " << verdict.lambda2_re << "\n"
              << "consensus_predicted: "
              << (verdict.consensus_predicted ? "yes" : "no") << " (a="
              << config.dynamics.a << ", f*lambda2_re="
              << config.dynamics.f * verdict.lambda2_re << ")\n";

    if (!export_path.empty()) {
        std::ofstream out(export_path, std::ios::binary);
        if (!out) {
            throw CliError("E_OUTPUT", "cannot write graph file: " + export_path);
        }
        write_edge_list(graph, out);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rural-urban migration simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::string format = "both";
    std::string graph_path;
    std::string export_path;
    std::optional<std::uint64_t> seed_override;

    auto add_common = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("--config", config_path, "JSON scenario config")
            ->required();
        if (with_out) {
            cmd->add_option("--out", out_dir, "output directory");
            cmd->add_option("--seed", seed_override, "seed override");
            cmd->add_option("--format", format, "csv|json|both")
                ->check(CLI::IsMember({"csv", "json", "both"}));
        }
    };

    CLI::App* cmd_run = app.add_subcommand("run", "execute one scenario");
    add_common(cmd_run, true);
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "execute the config's parameter grid");
    add_common(cmd_sweep, true);
    CLI::App* cmd_analyze = app.add_subcommand(
        "analyze-graph", "spectral and consensus analysis without simulating");
    add_common(cmd_analyze, false);
    cmd_analyze->add_option("--graph", graph_path,
                            "load graph from edge-list file instead of "
                            "generating from the config");
    cmd_analyze->add_option("--export-graph", export_path,
                            "write the analyzed graph as an edge list");
    cmd_analyze->add_option("--seed", seed_override, "seed override");
    CLI::App* cmd_validate =
        app.add_subcommand("validate-config", "check a config and exit");
    add_common(cmd_validate, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            return do_run(config_path, out_dir, seed_override, format);
        }
        if (cmd_sweep->parsed()) {
            return do_sweep(config_path, out_dir, seed_override, format);
        }
        if (cmd_analyze->parsed()) {
            return do_analyze_graph(config_path, graph_path, export_path,
                                    seed_override);
        }
        if (cmd_validate->parsed()) {
            load_config(config_path);
            std::cout << "config ok\n";
            return 0;
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.code << " " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: E_INTERNAL " << e.what() << "\n";
        return 1;
    }
    return 1;
}
