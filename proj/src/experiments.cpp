#include "srlq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "srlq/csv.hpp"
#include "srlq/philox.hpp"
#include "srlq/simulate.hpp"

namespace srlq {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string level_label(const std::optional<double>& level) {
    if (!level) return "ne";
    std::ostringstream os;
    os << "m" << csv::format(*level);
    return os.str();
}

std::vector<Policy> linear_profile(const std::vector<std::vector<Matrix>>& gains) {
    std::vector<Policy> policies;
    policies.reserve(gains.size());
    for (size_t i = 0; i < gains.size(); ++i)
        policies.push_back(linear_policy(static_cast<int>(i), gains[i]));
    return policies;
}

}  // namespace

double percentile(std::vector<double> samples, double q) {
    if (samples.empty()) throw std::invalid_argument("percentile: empty sample set");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("percentile: q must lie in [0, 1]");
    std::sort(samples.begin(), samples.end());
    const double rank = q * static_cast<double>(samples.size() - 1);
    const size_t lo = static_cast<size_t>(std::floor(rank));
    if (lo + 1 >= samples.size()) return samples.back();
    const double frac = rank - static_cast<double>(lo);
    return samples[lo] + frac * (samples[lo + 1] - samples[lo]);
}

ExperimentResult monte_carlo_bias(const GameSpec& spec, const EquilibriumSolution& nash,
                                  const EquilibriumSolution& robust, int n_samples, uint64_t seed,
                                  const MonteCarloOptions& options) {
    if (spec.n_players != 2)
        throw std::invalid_argument("monte_carlo_bias: requires a two-player game");
    if (n_samples <= 0) throw std::invalid_argument("monte_carlo_bias: n_samples must be positive");

    const Policy p1_nash = linear_policy(0, nash.player_gains_k[0]);
    const Policy p1_robust = linear_policy(0, robust.player_gains_k[0]);
    const Policy p2_nash = linear_policy(1, nash.player_gains_k[1]);

    std::vector<double> nash_costs(static_cast<size_t>(n_samples));
    std::vector<double> robust_costs(static_cast<size_t>(n_samples));
    for (int k = 0; k < n_samples; ++k) {
        const double b = options.forced_bias ? *options.forced_bias
                                             : standard_normal(seed, static_cast<uint64_t>(k));
        const Policy p2 = biased_policy(p2_nash, {b});
        nash_costs[static_cast<size_t>(k)] = rollout(spec, {p1_nash, p2}).per_player_costs[0];
        robust_costs[static_cast<size_t>(k)] = rollout(spec, {p1_robust, p2}).per_player_costs[0];
    }

    ExperimentResult result;
    result.name = "table1";
    result.columns = {"percentile", "ne_cost", "sr_cost"};
    for (const double q : {0.05, 0.25, 0.50, 0.75, 0.95})
        result.rows.push_back(
            {100.0 * q, percentile(nash_costs, q), percentile(robust_costs, q)});
    result.metadata["seed"] = seed;
    result.metadata["samples"] = n_samples;
    result.metadata["forced_bias"] = options.forced_bias ? nlohmann::json(*options.forced_bias)
                                                         : nlohmann::json(nullptr);
    return result;
}

ExperimentResult adversarial_budget_sweep(const GameSpec& spec,
                                          const std::vector<std::optional<double>>& levels,
                                          const std::vector<double>& budgets,
                                          double reference_level) {
    if (spec.n_players != 2)
        throw std::invalid_argument("adversarial_budget_sweep: requires a two-player game");

    const EquilibriumSolution nash = solve_nash(spec);
    const EquilibriumSolution reference = solve_strategically_robust(
        spec, RobustnessConfig::scaled_identity(spec, {reference_level, std::nullopt}));
    const auto reference_component =
        component_gains(reference.adversary_gains_l[0], stacked_index_map(spec, 0), 1);
    const Policy p2_nash = linear_policy(1, nash.player_gains_k[1]);

    std::vector<std::vector<Matrix>> p1_gains;
    p1_gains.reserve(levels.size());
    for (const auto& level : levels) {
        if (!level) {
            p1_gains.push_back(nash.player_gains_k[0]);
        } else {
            const EquilibriumSolution sr = solve_strategically_robust(
                spec, RobustnessConfig::scaled_identity(spec, {*level, std::nullopt}));
            p1_gains.push_back(sr.player_gains_k[0]);
        }
    }

    ExperimentResult result;
    result.name = "fig1_adversarial";
    result.columns = {"c"};
    for (const auto& level : levels) result.columns.push_back("cost_" + level_label(level));
    for (const double c : budgets) {
        std::vector<double> row{c};
        const Policy p2 = clipped_adversarial_policy(p2_nash, reference_component, c);
        for (const auto& gains : p1_gains)
            row.push_back(rollout(spec, {linear_policy(0, gains), p2}).per_player_costs[0]);
        result.rows.push_back(std::move(row));
    }
    result.metadata["reference_level"] = reference_level;
    nlohmann::json level_json = nlohmann::json::array();
    for (const auto& level : levels)
        level_json.push_back(level ? nlohmann::json(*level) : nlohmann::json("inf"));
    result.metadata["levels"] = std::move(level_json);
    return result;
}

ExperimentResult social_cost_sweep(const GameSpec& spec, SweepMode mode,
                                   const std::vector<double>& inverse_penalties) {
    auto config_at = [&](double s) {
        std::vector<std::optional<double>> level(static_cast<size_t>(spec.n_players), std::nullopt);
        if (s > 0.0) {
            if (mode == SweepMode::AllRobust)
                for (auto& entry : level) entry = 1.0 / s;
            else
                level[0] = 1.0 / s;
        }
        return RobustnessConfig::scaled_identity(spec, level);
    };

    ExperimentResult result;
    result.name = mode == SweepMode::AllRobust ? "social_sweep_all" : "social_sweep_single";
    result.columns = {"inv_m", "social_cost", "solved"};
    std::optional<double> first_failure;
    for (const double s : inverse_penalties) {
        try {
            const EquilibriumSolution sol = solve_strategically_robust(spec, config_at(s));
            const Trajectory traj = rollout(spec, linear_profile(sol.player_gains_k));
            result.rows.push_back({s, traj.social_cost, 1.0});
        } catch (const SolverError&) {
            if (!first_failure) first_failure = s;
            result.rows.push_back({s, kNan, 0.0});
        }
    }

    const SocialOptimum optimum = solve_social_optimum(spec);
    const EquilibriumSolution nash = solve_nash(spec);
    const Trajectory nash_traj = rollout(spec, linear_profile(nash.player_gains_k));
    const BoundaryResult boundary = find_existence_boundary(
        spec, mode == SweepMode::AllRobust ? RobustnessPattern::AllPlayers
                                           : RobustnessPattern::SinglePlayer,
        inverse_penalties);

    result.metadata["mode"] = mode == SweepMode::AllRobust ? "all" : "single";
    result.metadata["nash_social_cost"] = nash_traj.social_cost;
    result.metadata["social_optimum"] = optimum.optimal_cost;
    result.metadata["first_failure_inv_m"] =
        first_failure ? nlohmann::json(*first_failure) : nlohmann::json(nullptr);
    result.metadata["boundary_inv_m"] = boundary.failure_found
                                            ? nlohmann::json(boundary.critical_scale)
                                            : nlohmann::json(nullptr);
    return result;
}

ExperimentResult network_scenarios(const GameSpec& star_spec, std::optional<double> center_penalty,
                                   const NetworkScenarioOptions& options) {
    const int N = star_spec.n_players;
    if (N < 3) throw std::invalid_argument("network_scenarios: requires at least three players");

    std::vector<std::optional<double>> nash_level(static_cast<size_t>(N), options.nonrobust_pin);
    std::vector<std::optional<double>> robust_level = nash_level;
    if (center_penalty) robust_level[0] = *center_penalty;

    const EquilibriumSolution nash = solve_strategically_robust(
        star_spec, RobustnessConfig::scaled_identity(star_spec, nash_level));
    const EquilibriumSolution robust = solve_strategically_robust(
        star_spec, RobustnessConfig::scaled_identity(star_spec, robust_level));

    // The first two leaves impersonate the components of the center's
    // adversary; the rest of the profile is the respective equilibrium.
    const auto center_map = stacked_index_map(star_spec, 0);
    const Policy leaf1_adv = component_policy(robust.adversary_gains_l[0], center_map, 1);
    const Policy leaf2_adv = component_policy(robust.adversary_gains_l[0], center_map, 2);

    auto with_override = [&](const EquilibriumSolution& base) {
        std::vector<Policy> policies = linear_profile(base.player_gains_k);
        policies[1] = leaf1_adv;
        policies[2] = leaf2_adv;
        return policies;
    };

    ExperimentResult result;
    result.name = "table2_network";
    result.columns = {"terminal_state", "center_cost"};
    result.row_labels = {"NE", "SR", "NE_adv", "SR_adv"};
    for (const auto& policies : {linear_profile(nash.player_gains_k),
                                 linear_profile(robust.player_gains_k), with_override(nash),
                                 with_override(robust)}) {
        const Trajectory traj = rollout(star_spec, policies);
        result.rows.push_back({traj.states.back()[0], traj.per_player_costs[0]});
    }

    result.metadata["center_penalty"] =
        center_penalty ? nlohmann::json(*center_penalty) : nlohmann::json("inf");
    result.metadata["nonrobust_pin"] =
        options.nonrobust_pin ? nlohmann::json(*options.nonrobust_pin) : nlohmann::json("inf");
    double worst_residual = 0.0;
    for (const auto* sol : {&nash, &robust})
        for (const auto& log : sol->condition_log)
            worst_residual = std::max(worst_residual, log.foc_residual);
    result.metadata["max_foc_residual"] = worst_residual;
    return result;
}

void write_csv(const ExperimentResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    const bool labeled = !result.row_labels.empty();
    if (labeled) out << "scenario";
    for (size_t j = 0; j < result.columns.size(); ++j) {
        if (labeled || j > 0) out << ",";
        out << result.columns[j];
    }
    out << "\n";
    for (size_t i = 0; i < result.rows.size(); ++i) {
        if (labeled) out << result.row_labels[i];
        for (size_t j = 0; j < result.rows[i].size(); ++j) {
            if (labeled || j > 0) out << ",";
            out << csv::format(result.rows[i][j]);
        }
        out << "\n";
    }
    if (!out) throw std::runtime_error("failed writing " + path);
}

void write_metadata_json(const ExperimentResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    nlohmann::json doc = result.metadata;
    doc["name"] = result.name;
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace srlq
