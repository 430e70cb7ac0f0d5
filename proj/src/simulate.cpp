#include "srlq/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>

#include "srlq/csv.hpp"

namespace srlq {

Policy linear_policy(int player, std::vector<Matrix> gains) {
    if (gains.empty()) throw std::invalid_argument("linear_policy: empty gain sequence");
    const int dim = gains.front().rows();
    for (const auto& g : gains)
        if (g.rows() != dim || g.cols() != gains.front().cols())
            throw std::invalid_argument("linear_policy: inconsistent gain dimensions");
    auto shared = std::make_shared<std::vector<Matrix>>(std::move(gains));
    return Policy{player, dim, [shared](int stage, const Vector& x) {
                      return matvec(shared->at(static_cast<size_t>(stage)), x);
                  }};
}

Policy biased_policy(Policy base, Vector offset) {
    if (static_cast<int>(offset.size()) != base.input_dim)
        throw std::invalid_argument("biased_policy: offset dimension mismatch");
    auto eval = std::move(base.eval);
    return Policy{base.player, base.input_dim,
                  [eval = std::move(eval), offset = std::move(offset)](int stage, const Vector& x) {
                      Vector u = eval(stage, x);
                      for (size_t i = 0; i < u.size(); ++i) u[i] += offset[i];
                      return u;
                  }};
}

Policy clipped_adversarial_policy(Policy ne_policy, std::vector<Matrix> adversary_gains,
                                  double budget) {
    if (budget < 0.0) throw std::invalid_argument("clipped_adversarial_policy: negative budget");
    if (adversary_gains.empty() ||
        adversary_gains.front().rows() != ne_policy.input_dim)
        throw std::invalid_argument("clipped_adversarial_policy: component dimension mismatch");
    auto shared = std::make_shared<std::vector<Matrix>>(std::move(adversary_gains));
    auto ne = std::move(ne_policy.eval);
    return Policy{ne_policy.player, ne_policy.input_dim,
                  [ne = std::move(ne), shared, budget](int stage, const Vector& x) {
                      Vector u = ne(stage, x);
                      const Vector adv = matvec(shared->at(static_cast<size_t>(stage)), x);
                      for (size_t i = 0; i < u.size(); ++i)
                          u[i] -= std::clamp(u[i] - adv[i], -budget, budget);
                      return u;
                  }};
}

Policy external_policy(int player, int input_dim,
                       std::function<Vector(int, const Vector&)> eval) {
    return Policy{player, input_dim, std::move(eval)};
}

std::vector<Matrix> component_gains(const std::vector<Matrix>& adversary_gains,
                                    const StackedIndexMap& index_map, int opponent) {
    if (opponent == index_map.player)
        throw std::invalid_argument("component_gains: opponent equals the adversary's owner");
    const auto& blk = index_map.block_of(opponent);
    std::vector<Matrix> out;
    out.reserve(adversary_gains.size());
    for (const auto& l : adversary_gains) out.push_back(row_block(l, blk.offset, blk.width));
    return out;
}

Policy component_policy(const std::vector<Matrix>& adversary_gains,
                        const StackedIndexMap& index_map, int opponent) {
    return linear_policy(opponent, component_gains(adversary_gains, index_map, opponent));
}

Trajectory rollout(const GameSpec& spec, const std::vector<Policy>& policies) {
    const int N = spec.n_players;
    const int T = spec.horizon;
    if (static_cast<int>(policies.size()) != N)
        throw std::invalid_argument("rollout: one policy per player required");
    for (int i = 0; i < N; ++i) {
        if (policies[static_cast<size_t>(i)].player != i)
            throw std::invalid_argument("rollout: policies must be ordered by player index");
        if (policies[static_cast<size_t>(i)].input_dim != spec.input_dims[static_cast<size_t>(i)])
            throw std::invalid_argument("rollout: policy input dimension mismatch");
    }

    Trajectory traj;
    traj.states.reserve(static_cast<size_t>(T) + 1);
    traj.inputs.assign(static_cast<size_t>(N), {});
    traj.per_player_costs.assign(static_cast<size_t>(N), 0.0);

    Vector x = spec.initial_state;
    traj.states.push_back(x);
    for (int t = 0; t < T; ++t) {
        std::vector<Vector> u(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) {
            u[static_cast<size_t>(i)] = policies[static_cast<size_t>(i)].eval(t, x);
            if (static_cast<int>(u[static_cast<size_t>(i)].size()) !=
                spec.input_dims[static_cast<size_t>(i)])
                throw std::invalid_argument("rollout: policy output dimension mismatch");
        }

        for (int i = 0; i < N; ++i) {
            const size_t st = static_cast<size_t>(t);
            double stage_cost =
                quad_form(spec.state_cost_q[static_cast<size_t>(i)][st], x) +
                quad_form(spec.input_cost_r[static_cast<size_t>(i)][st], u[static_cast<size_t>(i)]);
            Vector stacked;
            stacked.reserve(static_cast<size_t>(spec.opponent_dim(i)));
            for (int j = 0; j < N; ++j)
                if (j != i)
                    stacked.insert(stacked.end(), u[static_cast<size_t>(j)].begin(),
                                   u[static_cast<size_t>(j)].end());
            stage_cost -= quad_form(spec.opponent_cost_s[static_cast<size_t>(i)][st], stacked);
            traj.per_player_costs[static_cast<size_t>(i)] += stage_cost;
        }

        Vector next = matvec(spec.dynamics_a[static_cast<size_t>(t)], x);
        for (int i = 0; i < N; ++i) {
            const Vector contribution =
                matvec(spec.dynamics_b[static_cast<size_t>(i)][static_cast<size_t>(t)],
                       u[static_cast<size_t>(i)]);
            for (size_t r = 0; r < next.size(); ++r) next[r] += contribution[r];
        }
        for (const double v : next)
            if (!std::isfinite(v) || std::abs(v) > kStateOverflowLimit)
                throw RolloutError(t, "rollout: state overflow at stage " + std::to_string(t));

        for (int i = 0; i < N; ++i)
            traj.inputs[static_cast<size_t>(i)].push_back(std::move(u[static_cast<size_t>(i)]));
        x = std::move(next);
        traj.states.push_back(x);
    }

    for (int i = 0; i < N; ++i)
        traj.per_player_costs[static_cast<size_t>(i)] +=
            quad_form(spec.terminal_cost_q[static_cast<size_t>(i)], traj.states.back());
    traj.social_cost = 0.0;
    for (const double c : traj.per_player_costs) traj.social_cost += c;
    return traj;
}

double evaluate_robust_cost(const GameSpec& spec, const RobustnessConfig& robustness,
                            const std::vector<std::vector<Matrix>>& gains_k, int player) {
    const BestResponse adversary = best_response_adversary(spec, robustness, gains_k, player);
    return quad_form(adversary.values[0], spec.initial_state);
}

void write_trajectory_csv(const Trajectory& trajectory, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);

    const size_t n = trajectory.states.front().size();
    std::ostringstream header;
    header << "t";
    for (size_t j = 0; j < n; ++j) header << ",x_" << j + 1;
    for (size_t i = 0; i < trajectory.inputs.size(); ++i)
        for (size_t k = 0; k < trajectory.inputs[i].front().size(); ++k)
            header << ",u_" << i + 1 << "_" << k + 1;
    out << header.str() << "\n";

    for (size_t t = 0; t < trajectory.states.size(); ++t) {
        out << t;
        for (const double v : trajectory.states[t]) out << "," << csv::format(v);
        if (t < trajectory.inputs.front().size()) {
            for (const auto& per_player : trajectory.inputs)
                for (const double v : per_player[t]) out << "," << csv::format(v);
        } else {
            for (const auto& per_player : trajectory.inputs)
                for (size_t k = 0; k < per_player.front().size(); ++k) out << ",";
        }
        out << "\n";
    }
    out << "# summary\n";
    for (size_t i = 0; i < trajectory.per_player_costs.size(); ++i)
        out << "# cost_player_" << i + 1 << "," << csv::format(trajectory.per_player_costs[i])
            << "\n";
    out << "# social_cost," << csv::format(trajectory.social_cost) << "\n";
    if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace srlq
