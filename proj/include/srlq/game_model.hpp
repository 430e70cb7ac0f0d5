#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srlq/matrix.hpp"

namespace srlq {

// Complete time-varying description of an N-player linear quadratic game
//
//   x_{t+1} = A_t x_t + sum_j B_t^j u_t^j,          t = 0..T-1
//   J^i     = |x_T|^2_{Qf^i} + sum_t |x_t|^2_{Q_t^i} + |u_t^i|^2_{R_t^i}
//                                  - |u_t^{-i}|^2_{S_t^i}
//
// All per-stage sequences have exactly `horizon` entries. Opponent-stacked
// objects (S, and RobustnessConfig::penalty) order the opponents of player i
// by increasing player index.
struct GameSpec {
    int n_players = 0;
    int horizon = 0;
    int state_dim = 0;
    std::vector<int> input_dims;
    Vector initial_state;
    std::vector<Matrix> dynamics_a;                   // [t], n x n
    std::vector<std::vector<Matrix>> dynamics_b;      // [i][t], n x d_i
    std::vector<std::vector<Matrix>> state_cost_q;    // [i][t], n x n
    std::vector<Matrix> terminal_cost_q;              // [i], n x n
    std::vector<std::vector<Matrix>> input_cost_r;    // [i][t], d_i x d_i
    std::vector<std::vector<Matrix>> opponent_cost_s; // [i][t], od_i x od_i

    int total_input_dim() const;
    // Width of the stacked opponent input of player i.
    int opponent_dim(int player) const;
};

// Per-player robustness penalty. A player without a penalty sequence is
// non-robust (the infinite-penalty sentinel); finite penalties are one SPD
// matrix of side opponent_dim(i) per stage.
struct RobustnessConfig {
    std::vector<std::optional<std::vector<Matrix>>> penalty;

    bool is_robust(int player) const { return penalty[static_cast<size_t>(player)].has_value(); }
    const std::vector<Matrix>& penalty_of(int player) const {
        return *penalty[static_cast<size_t>(player)];
    }

    static RobustnessConfig all_infinite(int n_players);
    // level[i] == nullopt -> non-robust, otherwise penalty level[i] * I at
    // every stage.
    static RobustnessConfig scaled_identity(const GameSpec& spec,
                                            const std::vector<std::optional<double>>& level);
};

// Column ranges of each opponent inside a player's stacked opponent vector.
struct StackedBlock {
    int player = 0;
    int offset = 0;
    int width = 0;
};

struct StackedIndexMap {
    int player = 0;
    int total_width = 0;
    std::vector<StackedBlock> blocks;

    const StackedBlock& block_of(int opponent) const;
};

StackedIndexMap stacked_index_map(const GameSpec& spec, int player);
// Horizontally stacked B_t^j over j != player.
Matrix stacked_opponent_b(const GameSpec& spec, int player, int stage);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks dimensional consistency, symmetry (within tolerance) and the
// definiteness assumptions: Q, Qf, S positive semidefinite; R and finite M
// positive definite. Reporting only; never throws.
ValidationReport validate_game(const GameSpec& spec, const RobustnessConfig& robustness);

// Tolerances used by validate_game and the JSON loader.
inline constexpr double kSymmetryTolerance = 1e-10;   // relative to 1 + max|X|
inline constexpr double kPsdEigenThreshold = -1e-10;  // lambda_min above this is PSD
inline constexpr double kPdEigenThreshold = 1e-12;    // lambda_min above this is PD

// Terminal penalty (selector . x - offset)^2, encoded exactly by state
// augmentation.
struct AffineTarget {
    Vector selector;
    double offset = 0.0;
};

// Selector picking a single state coordinate. Throws std::out_of_range for
// a coordinate outside [0, state_dim).
AffineTarget coordinate_target(int coordinate, double offset, int state_dim);

// Appends a constant-one coordinate to the state and replaces the terminal
// cost of every targeted player with the exact quadratic expansion of
// (selector . x - offset)^2 on the augmented state. Untargeted players keep
// their terminal cost, zero-padded. Stage costs are zero-padded; dynamics
// gain a unit diagonal entry for the constant coordinate.
GameSpec augment_affine_target(const GameSpec& spec,
                               const std::vector<std::optional<AffineTarget>>& targets);

// n_nodes agents on a star graph (node 0 central) averaging toward their
// neighbors, each steering its own coordinate toward `target` at the
// horizon with unit input cost. Already augmented.
GameSpec build_star_network_game(int n_nodes, int horizon, double target);

// Two scalar players pushing one state x_{t+1} = a x_t + u^1 + u^2 from
// x_0 = 1, with cost x_T^2 + sum_t (u^i_t)^2 each.
GameSpec build_two_player_scalar_game(double a, int horizon);

// JSON game document: the spec plus an optional "M" robustness block.
struct GameDocument {
    GameSpec spec;
    RobustnessConfig robustness;
};

// Throws std::invalid_argument with a descriptive message on malformed
// documents. Structural validation (definiteness etc.) is validate_game's
// job, not the parser's.
GameDocument parse_game_json(const nlohmann::json& doc);
GameDocument load_game_json(const std::string& path);
nlohmann::json game_to_json(const GameSpec& spec, const RobustnessConfig& robustness);

}  // namespace srlq
