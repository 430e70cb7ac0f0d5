#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "srlq/game_model.hpp"
#include "srlq/matrix.hpp"

namespace srlq {

enum class SolverFailure {
    PlayerConvexity,      // H^{u_i,u_i} not positive definite
    AdversaryConcavity,   // H^{d_i,d_i} not positive definite
    SingularStageSystem,  // stacked stage matrix numerically singular
    ReducedLqrIllPosed,   // R + B' P B not positive definite in a best response
    AdversaryUnbounded,   // inner maximization diverges
    IndefiniteSocialCost, // centralized stage input cost not positive definite
};

class SolverError : public std::runtime_error {
  public:
    SolverError(SolverFailure kind, int stage, int player, const std::string& message)
        : std::runtime_error(message), kind_(kind), stage_(stage), player_(player) {}

    SolverFailure kind() const { return kind_; }
    int stage() const { return stage_; }
    // -1 when the failure is not tied to one player.
    int player() const { return player_; }

  private:
    SolverFailure kind_;
    int stage_;
    int player_;
};

const char* to_string(SolverFailure kind);

// Diagnostics recorded per stage of a backward pass.
struct StageConditions {
    std::vector<double> u_block_min_eig;  // per player, lambda_min of H^{u_i,u_i}
    std::vector<double> d_block_min_eig;  // per player; +inf for non-robust players
    double condition = 0.0;               // inf-norm condition estimate of H
    double foc_residual = 0.0;            // ||H g - G||_inf of the solved gains
    double g_norm = 0.0;                  // max |G| entry, for the residual bound
};

// Equilibrium gains and quadratic value matrices. For non-robust players the
// recorded adversary gain is the pinned one: the vertical stack of the
// opponents' K gains.
struct EquilibriumSolution {
    std::vector<std::vector<Matrix>> player_gains_k;    // [i][t], d_i x n
    std::vector<std::vector<Matrix>> adversary_gains_l; // [i][t], od_i x n
    std::vector<std::vector<Matrix>> value_matrices_p;  // [i][t], t = 0..T, n x n
    std::vector<StageConditions> condition_log;         // [t]
};

// One stacked stage system H g = G. Row/column blocks follow player order:
// K_i block (width d_i) then, for robust players, the L_i block (width od_i).
struct StageBlockRef {
    int player = 0;
    bool adversary = false;
    int offset = 0;
    int width = 0;
};

struct StageSystem {
    Matrix h;
    Matrix g;
    std::vector<StageBlockRef> layout;
    std::vector<double> u_block_min_eig;
    std::vector<double> d_block_min_eig;

    const StageBlockRef& block(int player, bool adversary) const;
};

// Builds H and G for stage t from the next-stage value matrices (one per
// player). Assembly is total; definiteness is judged by the caller from the
// recorded block eigenvalues. Non-robust players are eliminated analytically
// (d_i = u_{-i}), which moves B_i' P_i B_j couplings onto their K row.
StageSystem assemble_stage_system(const GameSpec& spec, const RobustnessConfig& robustness,
                                  const std::vector<Matrix>& next_values, int stage);

// One backward value update per player. gains_l entries are ignored for
// non-robust players (their adversary is pinned to the stacked opponent
// gains). Results are symmetrized.
std::vector<Matrix> riccati_step(const GameSpec& spec, const RobustnessConfig& robustness,
                                 const std::vector<Matrix>& next_values,
                                 const std::vector<Matrix>& gains_k,
                                 const std::vector<Matrix>& gains_l, int stage);

// Backward pass over the full horizon. Throws SolverError (PlayerConvexity,
// AdversaryConcavity or SingularStageSystem) when the stage conditions fail.
EquilibriumSolution solve_strategically_robust(const GameSpec& spec,
                                               const RobustnessConfig& robustness);

// Feedback Nash equilibrium: the all-infinite-penalty degenerate case.
EquilibriumSolution solve_nash(const GameSpec& spec);

// Per-player sufficient invertibility condition on the stage system
// (block-Gershgorin bound on the symmetric part of H). Passing implies H is
// invertible; failing is inconclusive.
struct DominanceReport {
    struct PerPlayer {
        double lhs = 0.0;  // min of the two diagonal-block smallest eigenvalues
        double rhs = 0.0;  // half-sum of the worst coupling singular values
        bool pass = false;
    };
    std::vector<PerPlayer> players;
    bool all_pass = false;
    // Set when every penalty is the same lambda * I; rhs then reduces to
    // (N - 1) / 2 * lambda for every player.
    std::optional<double> uniform_lambda;
};

DominanceReport check_spectral_dominance(const GameSpec& spec, const RobustnessConfig& robustness,
                                         const std::vector<Matrix>& next_values, int stage);

struct BestResponse {
    std::vector<Matrix> gains;   // [t]
    std::vector<Matrix> values;  // [t], t = 0..T
};

// Player i's exact best response with their adversary fixed to
// adversary_gains and the opponents fixed to their entries of opponent_k:
// the reduced LQR with drift A + B_{-i} L_i and stage cost adjusted by the
// adversary penalty terms.
BestResponse best_response_player(const GameSpec& spec, const RobustnessConfig& robustness,
                                  const std::vector<Matrix>& adversary_gains,
                                  const std::vector<std::vector<Matrix>>& opponent_k, int player);

// Worst-case adversary of player i against fixed linear gains for all
// players: the inner maximization of the robust cost. values[0] contracted
// with x0 is the robust cost of the profile.
BestResponse best_response_adversary(const GameSpec& spec, const RobustnessConfig& robustness,
                                     const std::vector<std::vector<Matrix>>& gains_k, int player);

enum class RobustnessPattern { SinglePlayer, AllPlayers };

struct BoundaryResult {
    double critical_scale = 0.0;  // largest verified-solvable inverse penalty
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    bool failure_found = false;
};

// Sweeps M = (1/s) I over the ascending scale grid (s = inverse penalty) for
// the designated robust player(s) and returns the largest solvable s,
// refined by bisection to 1e-4. Without any failure on the grid, returns the
// grid's upper end with failure_found = false.
BoundaryResult find_existence_boundary(const GameSpec& spec, RobustnessPattern pattern,
                                       const std::vector<double>& scale_grid, int player = 0);

struct SocialOptimum {
    std::vector<Matrix> gains;   // [t], stacked input x n
    std::vector<Matrix> values;  // [t], t = 0..T
    double optimal_cost = 0.0;   // x0' P_0 x0
};

// Centralized LQR over the stacked input minimizing the sum of all players'
// costs (including the -S cross terms). Throws IndefiniteSocialCost when the
// combined stage input cost is not positive definite.
SocialOptimum solve_social_optimum(const GameSpec& spec);

nlohmann::json solution_to_json(const EquilibriumSolution& solution);

// Strict-positivity threshold for the stage conditions.
inline double definiteness_threshold(const Matrix& block) {
    return 1e-10 * (1.0 + max_abs(block));
}

inline constexpr double kSingularConditionThreshold = 1e12;

}  // namespace srlq
