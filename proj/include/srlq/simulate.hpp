#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srlq/equilibria.hpp"
#include "srlq/game_model.hpp"

namespace srlq {

// Stage-indexed state-feedback policy for one player.
struct Policy {
    int player = 0;
    int input_dim = 0;
    std::function<Vector(int stage, const Vector& state)> eval;
};

Policy linear_policy(int player, std::vector<Matrix> gains);
// base plus a constant input offset at every stage.
Policy biased_policy(Policy base, Vector offset);
// ne_policy(x) - clip(ne_policy(x) - adversary_gain_t x, -budget, budget),
// clip componentwise. budget = 0 reproduces ne_policy; a large budget
// reproduces the adversary component.
Policy clipped_adversarial_policy(Policy ne_policy, std::vector<Matrix> adversary_gains,
                                  double budget);
Policy external_policy(int player, int input_dim,
                       std::function<Vector(int, const Vector&)> eval);

// Row block of an adversary gain sequence belonging to one opponent.
std::vector<Matrix> component_gains(const std::vector<Matrix>& adversary_gains,
                                    const StackedIndexMap& index_map, int opponent);
// The same rows packaged as a policy for that opponent.
Policy component_policy(const std::vector<Matrix>& adversary_gains,
                        const StackedIndexMap& index_map, int opponent);

struct Trajectory {
    std::vector<Vector> states;              // [t], t = 0..T
    std::vector<std::vector<Vector>> inputs; // [i][t]
    std::vector<double> per_player_costs;    // realized nominal costs
    double social_cost = 0.0;
};

class RolloutError : public std::runtime_error {
  public:
    RolloutError(int stage, const std::string& message)
        : std::runtime_error(message), stage_(stage) {}
    int stage() const { return stage_; }

  private:
    int stage_;
};

// States with any entry beyond this magnitude abort the rollout.
inline constexpr double kStateOverflowLimit = 1e12;

// Simulates the coupled dynamics under one policy per player (ordered by
// player index) and evaluates every player's realized cost, including the
// -|u_{-i}|^2_S term. Throws RolloutError on state overflow.
Trajectory rollout(const GameSpec& spec, const std::vector<Policy>& policies);

// Robust cost J^i of a linear gain profile: the inner maximization evaluated
// by best_response_adversary, contracted with the initial state. Propagates
// AdversaryUnbounded.
double evaluate_robust_cost(const GameSpec& spec, const RobustnessConfig& robustness,
                            const std::vector<std::vector<Matrix>>& gains_k, int player);

// CSV layout: header t,x_1..x_n,u_1_1..u_N_dN; one row per stage (inputs
// empty on the terminal row); then a summary block of '# cost_player_<i>'
// and '# social_cost' lines.
void write_trajectory_csv(const Trajectory& trajectory, const std::string& path);

}  // namespace srlq
