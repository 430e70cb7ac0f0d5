#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "srlq/equilibria.hpp"
#include "srlq/game_model.hpp"

namespace srlq {

// Tabular experiment output plus a metadata sidecar. Rows are numeric;
// row_labels, when non-empty, carry one label per row (first CSV column).
struct ExperimentResult {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> rows;
    nlohmann::json metadata;
};

// Linear-interpolation quantile of the sorted sample: rank q * (n - 1),
// interpolated between its floor/ceil neighbors. q in [0, 1].
double percentile(std::vector<double> samples, double q);

struct MonteCarloOptions {
    // Replaces every sampled bias with a constant (degenerate distribution).
    std::optional<double> forced_bias;
};

// Player 2's policy is its Nash policy corrupted by a constant standard
// normal drift, redrawn per sample from a counter-based stream keyed by
// (seed, sample index); reports the 5/25/50/75/95 percentiles of player 1's
// realized cost under its Nash gains and under its robust gains.
ExperimentResult monte_carlo_bias(const GameSpec& spec, const EquilibriumSolution& nash,
                                  const EquilibriumSolution& robust, int n_samples, uint64_t seed,
                                  const MonteCarloOptions& options = {});

// Player 1 cost as a function of the rogue budget c, one curve per
// robustness level (nullopt = the Nash case). Player 2 always plays the
// rogue policy built from its Nash policy and the reference adversary
// component extracted from the solution at reference_level.
ExperimentResult adversarial_budget_sweep(const GameSpec& spec,
                                          const std::vector<std::optional<double>>& levels,
                                          const std::vector<double>& budgets,
                                          double reference_level);

enum class SweepMode { SingleRobust, AllRobust };

// Social cost of the all-equilibrium rollout over an ascending inverse
// penalty grid (entry 0 of the grid may be 0 = Nash). Solver failures are
// recorded per grid point (solved = 0, cost = nan), not fatal. Metadata
// carries the Nash endpoint, the social optimum and the refined existence
// boundary.
ExperimentResult social_cost_sweep(const GameSpec& spec, SweepMode mode,
                                   const std::vector<double>& inverse_penalties);

struct NetworkScenarioOptions {
    // Penalty modelling the non-robust players in this experiment. The
    // published reference values pin them at 100; nullopt selects the exact
    // infinite-penalty elimination instead.
    std::optional<double> nonrobust_pin = 100.0;
};

// Central-node resilience table on a star game: (i) Nash profile,
// (ii) robust-center profile, (iii)/(iv) the same two profiles with the
// first two leaves overridden by the center-adversary components. Reports
// the center's terminal state and realized cost per scenario.
// center_penalty = nullopt degenerates the robust profile to Nash.
ExperimentResult network_scenarios(const GameSpec& star_spec,
                                   std::optional<double> center_penalty = 0.16,
                                   const NetworkScenarioOptions& options = {});

void write_csv(const ExperimentResult& result, const std::string& path);
void write_metadata_json(const ExperimentResult& result, const std::string& path);

}  // namespace srlq
