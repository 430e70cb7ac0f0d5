#include "cli_app.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "srlq/csv.hpp"
#include "srlq/equilibria.hpp"
#include "srlq/experiments.hpp"
#include "srlq/game_model.hpp"
#include "srlq/simulate.hpp"

namespace srlq::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct CommonOptions {
    std::string spec_path;
    std::string out_dir = ".";
    std::vector<std::string> m_overrides;
    uint64_t seed = 1;
    int samples = 100000;
    std::string grid;
    std::string pin = "100";
};

class ValidationFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_grid(const std::string& text, double def_start, double def_stop,
                               double def_step) {
    double start = def_start;
    double stop = def_stop;
    double step = def_step;
    if (!text.empty()) {
        const auto a = text.find(':');
        const auto b = text.rfind(':');
        if (a == std::string::npos || b == a)
            throw ValidationFailure("--grid expects start:stop:step");
        try {
            start = std::stod(text.substr(0, a));
            stop = std::stod(text.substr(a + 1, b - a - 1));
            step = std::stod(text.substr(b + 1));
        } catch (const std::exception&) {
            throw ValidationFailure("--grid expects numeric start:stop:step");
        }
    }
    if (step <= 0.0 || stop < start) throw ValidationFailure("--grid requires step > 0 and stop >= start");
    std::vector<double> grid;
    for (double v = start; v <= stop + 0.5 * step; v += step)
        grid.push_back(std::min(v, stop));
    if (!grid.empty() && grid.back() < stop) grid.push_back(stop);
    return grid;
}

std::optional<double> parse_level(const std::string& text, const std::string& what) {
    if (text == "inf") return std::nullopt;
    try {
        const double v = std::stod(text);
        if (v <= 0.0) throw ValidationFailure(what + " must be positive or 'inf'");
        return v;
    } catch (const ValidationFailure&) {
        throw;
    } catch (const std::exception&) {
        throw ValidationFailure(what + " must be a number or 'inf'");
    }
}

void apply_m_overrides(const GameSpec& spec, RobustnessConfig& robustness,
                       const std::vector<std::string>& overrides) {
    for (const auto& text : overrides) {
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ValidationFailure("--m expects <player>=<value|inf>, got '" + text + "'");
        int player = 0;
        try {
            player = std::stoi(text.substr(0, eq)) - 1;
        } catch (const std::exception&) {
            throw ValidationFailure("--m player index is not a number in '" + text + "'");
        }
        if (player < 0 || player >= spec.n_players)
            throw ValidationFailure("--m player index out of range in '" + text + "'");
        const auto level = parse_level(text.substr(eq + 1), "--m value");
        if (!level) {
            robustness.penalty[static_cast<size_t>(player)] = std::nullopt;
        } else {
            robustness.penalty[static_cast<size_t>(player)] = std::vector<Matrix>(
                static_cast<size_t>(spec.horizon),
                Matrix::diagonal(spec.opponent_dim(player), *level));
        }
    }
}

GameDocument load_validated(const CommonOptions& opts) {
    if (opts.spec_path.empty()) throw ValidationFailure("--spec is required for this command");
    GameDocument doc = load_game_json(opts.spec_path);
    apply_m_overrides(doc.spec, doc.robustness, opts.m_overrides);
    const ValidationReport report = validate_game(doc.spec, doc.robustness);
    if (!report.ok()) {
        std::string message = "game spec failed validation:";
        for (const auto& v : report.violations) message += "\n  - " + v;
        throw ValidationFailure(message);
    }
    return doc;
}

fs::path prepare_out_dir(const std::string& dir) {
    fs::path path(dir);
    std::error_code ec;
    fs::create_directories(path, ec);
    if (ec) throw std::runtime_error("cannot create output directory " + dir + ": " + ec.message());
    return path;
}

void write_json_file(const nlohmann::json& doc, const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void emit(const ExperimentResult& result, const fs::path& dir, const std::string& stem) {
    write_csv(result, (dir / (stem + ".csv")).string());
    write_metadata_json(result, (dir / (stem + "_meta.json")).string());
    std::cout << "wrote " << (dir / (stem + ".csv")).string() << "\n";
}

// ---------------------------------------------------------------------------
// Built-in games

GameSpec motivating_game() { return build_two_player_scalar_game(1.05, 50); }
GameSpec collaborative_game() { return build_two_player_scalar_game(1.0, 3); }
GameSpec star_game() { return build_star_network_game(5, 20, 5.0); }

double closed_loop_coefficient(const GameSpec& spec, const EquilibriumSolution& sol, int stage) {
    double coeff = spec.dynamics_a[static_cast<size_t>(stage)](0, 0);
    for (int i = 0; i < spec.n_players; ++i)
        coeff += sol.player_gains_k[static_cast<size_t>(i)][static_cast<size_t>(stage)](0, 0);
    return coeff;
}

int cmd_solve(const CommonOptions& opts) {
    const GameDocument doc = load_validated(opts);
    const fs::path dir = prepare_out_dir(opts.out_dir);
    const EquilibriumSolution sol = solve_strategically_robust(doc.spec, doc.robustness);
    write_json_file(solution_to_json(sol), dir / "solution.json");
    double worst = 0.0;
    for (const auto& log : sol.condition_log) worst = std::max(worst, log.foc_residual);
    std::cout << "solved " << doc.spec.n_players << "-player game over " << doc.spec.horizon
              << " stages; max FOC residual " << worst << "\n"
              << "wrote " << (dir / "solution.json").string() << "\n";
    return kExitOk;
}

int cmd_rollout(const CommonOptions& opts) {
    const GameDocument doc = load_validated(opts);
    const fs::path dir = prepare_out_dir(opts.out_dir);
    const EquilibriumSolution sol = solve_strategically_robust(doc.spec, doc.robustness);
    std::vector<Policy> policies;
    for (int i = 0; i < doc.spec.n_players; ++i)
        policies.push_back(linear_policy(i, sol.player_gains_k[static_cast<size_t>(i)]));
    const Trajectory traj = rollout(doc.spec, policies);
    write_trajectory_csv(traj, (dir / "trajectory.csv").string());
    std::cout << "social cost " << csv::format(traj.social_cost) << "\n"
              << "wrote " << (dir / "trajectory.csv").string() << "\n";
    return kExitOk;
}

int cmd_sweep(const CommonOptions& opts, const std::string& mode) {
    const GameDocument doc = load_validated(opts);
    const fs::path dir = prepare_out_dir(opts.out_dir);
    const SweepMode sweep_mode = mode == "all" ? SweepMode::AllRobust : SweepMode::SingleRobust;
    const auto grid = parse_grid(opts.grid, 0.0, 1.0, 0.02);
    ExperimentResult result = social_cost_sweep(doc.spec, sweep_mode, grid);
    emit(result, dir, "sweep_" + mode);
    return kExitOk;
}

int cmd_mc(const CommonOptions& opts) {
    const GameDocument doc = load_validated(opts);
    if (doc.spec.n_players != 2) throw ValidationFailure("mc requires a two-player game spec");
    const fs::path dir = prepare_out_dir(opts.out_dir);

    RobustnessConfig sr_config = doc.robustness;
    const bool any_robust =
        std::any_of(sr_config.penalty.begin(), sr_config.penalty.end(),
                    [](const auto& p) { return p.has_value(); });
    if (!any_robust)
        sr_config = RobustnessConfig::scaled_identity(doc.spec, {1.2, std::nullopt});

    const EquilibriumSolution nash = solve_nash(doc.spec);
    const EquilibriumSolution robust = solve_strategically_robust(doc.spec, sr_config);
    ExperimentResult result = monte_carlo_bias(doc.spec, nash, robust, opts.samples, opts.seed);
    emit(result, dir, "table1");
    return kExitOk;
}

int cmd_reproduce(const CommonOptions& opts, const std::string& target) {
    const fs::path dir = prepare_out_dir(opts.out_dir);

    if (target == "motivating") {
        const GameSpec spec = motivating_game();
        const EquilibriumSolution nash = solve_nash(spec);
        const EquilibriumSolution robust = solve_strategically_robust(
            spec, RobustnessConfig::scaled_identity(spec, {1.2, std::nullopt}));
        const int mid = spec.horizon / 2;
        ExperimentResult result;
        result.name = "motivating";
        result.columns = {"mid_closed_loop"};
        result.row_labels = {"NE", "SR"};
        result.rows = {{closed_loop_coefficient(spec, nash, mid)},
                       {closed_loop_coefficient(spec, robust, mid)}};
        result.metadata["horizon"] = spec.horizon;
        result.metadata["mid_stage"] = mid;
        result.metadata["sr_penalty"] = 1.2;
        emit(result, dir, "motivating");
        std::cout << "NE mid-horizon closed loop " << csv::format(result.rows[0][0]) << "\n"
                  << "SR mid-horizon closed loop " << csv::format(result.rows[1][0]) << "\n";
        return kExitOk;
    }
    if (target == "collab-adversarial") {
        const auto budgets = parse_grid(opts.grid, 0.0, 2.0, 0.05);
        ExperimentResult result = adversarial_budget_sweep(
            collaborative_game(), {std::nullopt, 1.2, 1.4, 2.5}, budgets, 1.2);
        emit(result, dir, "fig1_adversarial");
        return kExitOk;
    }
    if (target == "collab-mc") {
        const GameSpec spec = collaborative_game();
        const EquilibriumSolution nash = solve_nash(spec);
        const EquilibriumSolution robust = solve_strategically_robust(
            spec, RobustnessConfig::scaled_identity(spec, {1.2, std::nullopt}));
        ExperimentResult result = monte_carlo_bias(spec, nash, robust, opts.samples, opts.seed);
        emit(result, dir, "table1");
        return kExitOk;
    }
    if (target == "collab-social" || target == "network-social") {
        const bool network = target == "network-social";
        const GameSpec spec = network ? star_game() : collaborative_game();
        const auto grid = network ? parse_grid(opts.grid, 0.0, 8.0, 0.1)
                                  : parse_grid(opts.grid, 0.0, 1.0, 0.02);
        const ExperimentResult single = social_cost_sweep(spec, SweepMode::SingleRobust, grid);
        const ExperimentResult all = social_cost_sweep(spec, SweepMode::AllRobust, grid);

        ExperimentResult merged;
        merged.name = network ? "fig4_social_network" : "fig2_social_collab";
        merged.columns = {"inv_m", "cost_single_robust", "solved_single", "cost_all_robust",
                          "solved_all"};
        for (size_t i = 0; i < single.rows.size(); ++i)
            merged.rows.push_back({single.rows[i][0], single.rows[i][1], single.rows[i][2],
                                   all.rows[i][1], all.rows[i][2]});
        merged.metadata["nash_social_cost"] = single.metadata.at("nash_social_cost");
        merged.metadata["social_optimum"] = single.metadata.at("social_optimum");
        merged.metadata["boundary_single_robust"] = single.metadata.at("boundary_inv_m");
        merged.metadata["boundary_all_robust"] = all.metadata.at("boundary_inv_m");
        emit(merged, dir, merged.name);
        return kExitOk;
    }
    if (target == "network-scenarios") {
        NetworkScenarioOptions options;
        options.nonrobust_pin = parse_level(opts.pin, "--pin");
        ExperimentResult result = network_scenarios(star_game(), 0.16, options);
        emit(result, dir, "table2_network");
        return kExitOk;
    }
    throw ValidationFailure(
        "unknown reproduce target '" + target +
        "' (expected one of motivating, collab-adversarial, collab-mc, collab-social, "
        "network-scenarios, network-social)");
}

int cmd_dump_spec(const CommonOptions& opts, const std::string& name) {
    const fs::path dir = prepare_out_dir(opts.out_dir);
    GameSpec spec;
    if (name == "motivating")
        spec = motivating_game();
    else if (name == "collaborative")
        spec = collaborative_game();
    else if (name == "star-network")
        spec = star_game();
    else
        throw ValidationFailure("unknown built-in spec '" + name +
                                "' (expected motivating, collaborative or star-network)");
    const fs::path path = dir / (name + ".json");
    write_json_file(game_to_json(spec, RobustnessConfig::all_infinite(spec.n_players)), path);
    std::cout << "wrote " << path.string() << "\n";
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Strategically robust linear quadratic dynamic game solver"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string mode = "single";
    std::string target;
    std::string dump_name;

    auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        if (needs_spec) cmd->add_option("--spec", opts.spec_path, "Game spec JSON file");
        cmd->add_option("--out", opts.out_dir, "Output directory (default: .)");
        cmd->add_option("--m", opts.m_overrides,
                        "Robustness override <player>=<value|inf>, repeatable");
        cmd->add_option("--seed", opts.seed, "Random stream seed");
        cmd->add_option("--samples", opts.samples, "Monte Carlo sample count");
        cmd->add_option("--grid", opts.grid, "Grid as start:stop:step");
    };

    CLI::App* solve = app.add_subcommand("solve", "Solve a game spec and export the solution");
    add_common(solve, true);
    CLI::App* roll = app.add_subcommand("rollout", "Solve and roll out the equilibrium policies");
    add_common(roll, true);
    CLI::App* sweep = app.add_subcommand("sweep", "Social-cost sweep over inverse penalties");
    add_common(sweep, true);
    sweep->add_option("--mode", mode, "single (player 1 robust) or all")
        ->check(CLI::IsMember({"single", "all"}));
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo bias study on a two-player game");
    add_common(mc, true);
    CLI::App* repro =
        app.add_subcommand("reproduce", "Rebuild a bundled experiment from its built-in spec");
    add_common(repro, false);
    repro->add_option("target", target,
                      "motivating | collab-adversarial | collab-mc | collab-social | "
                      "network-scenarios | network-social");
    repro->add_option("--scenario", target, "Alias for the positional target");
    repro->add_option("--pin", opts.pin,
                      "Finite penalty modelling non-robust players in network-scenarios "
                      "(number or 'inf')");
    CLI::App* dump = app.add_subcommand("dump-spec", "Write a built-in game spec as JSON");
    add_common(dump, false);
    dump->add_option("name", dump_name, "motivating | collaborative | star-network")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (solve->parsed()) return cmd_solve(opts);
        if (roll->parsed()) return cmd_rollout(opts);
        if (sweep->parsed()) return cmd_sweep(opts, mode);
        if (mc->parsed()) return cmd_mc(opts);
        if (repro->parsed()) {
            if (target.empty())
                throw ValidationFailure("reproduce requires a target (positional or --scenario)");
            return cmd_reproduce(opts, target);
        }
        if (dump->parsed()) return cmd_dump_spec(opts, dump_name);
    } catch (const SolverError& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return kExitSolver;
    } catch (const ValidationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace srlq::cli
