#include "srlq/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "srlq/linalg.hpp"

namespace srlq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string describe(SolverFailure kind, int stage, int player) {
    std::ostringstream os;
    os << to_string(kind) << " at stage " << stage;
    if (player >= 0) os << " (player " << player + 1 << ")";
    return os.str();
}

[[noreturn]] void fail(SolverFailure kind, int stage, int player = -1) {
    throw SolverError(kind, stage, player, describe(kind, stage, player));
}

double min_eig_of_block(Matrix block) {
    symmetrize(block);
    return linalg::min_eigenvalue(block);
}

// Vertical stack of K_j over j != player, in opponent order.
Matrix stack_opponent_gains(const std::vector<Matrix>& gains_k, int player) {
    std::vector<Matrix> blocks;
    blocks.reserve(gains_k.size() - 1);
    for (int j = 0; j < static_cast<int>(gains_k.size()); ++j)
        if (j != player) blocks.push_back(gains_k[static_cast<size_t>(j)]);
    return vstack(blocks);
}

}  // namespace

const char* to_string(SolverFailure kind) {
    switch (kind) {
        case SolverFailure::PlayerConvexity: return "PlayerConvexityFailure";
        case SolverFailure::AdversaryConcavity: return "AdversaryConcavityFailure";
        case SolverFailure::SingularStageSystem: return "SingularStageSystem";
        case SolverFailure::ReducedLqrIllPosed: return "ReducedLQRIllPosed";
        case SolverFailure::AdversaryUnbounded: return "AdversaryUnbounded";
        case SolverFailure::IndefiniteSocialCost: return "IndefiniteSocialCost";
    }
    return "UnknownSolverFailure";
}

const StageBlockRef& StageSystem::block(int player, bool adversary) const {
    for (const auto& b : layout)
        if (b.player == player && b.adversary == adversary) return b;
    throw std::out_of_range("StageSystem: no such block");
}

StageSystem assemble_stage_system(const GameSpec& spec, const RobustnessConfig& robustness,
                                  const std::vector<Matrix>& next_values, int stage) {
    const int N = spec.n_players;
    const size_t t = static_cast<size_t>(stage);

    StageSystem sys;
    int side = 0;
    for (int i = 0; i < N; ++i) {
        sys.layout.push_back({i, false, side, spec.input_dims[static_cast<size_t>(i)]});
        side += spec.input_dims[static_cast<size_t>(i)];
        if (robustness.is_robust(i)) {
            sys.layout.push_back({i, true, side, spec.opponent_dim(i)});
            side += spec.opponent_dim(i);
        }
    }
    sys.h = Matrix(side, side);
    sys.g = Matrix(side, spec.state_dim);
    sys.u_block_min_eig.assign(static_cast<size_t>(N), 0.0);
    sys.d_block_min_eig.assign(static_cast<size_t>(N), kInf);

    const Matrix& a = spec.dynamics_a[t];
    for (int i = 0; i < N; ++i) {
        const Matrix& bi = spec.dynamics_b[static_cast<size_t>(i)][t];
        const Matrix bmi = stacked_opponent_b(spec, i, stage);
        const Matrix& p = next_values[static_cast<size_t>(i)];
        const Matrix pbi = p * bi;
        const Matrix pbmi = p * bmi;
        const auto& u_ref = sys.block(i, false);

        const Matrix h_uu = spec.input_cost_r[static_cast<size_t>(i)][t] + mul_tn(bi, pbi);
        sys.u_block_min_eig[static_cast<size_t>(i)] = min_eig_of_block(h_uu);
        set_block(sys.h, u_ref.offset, u_ref.offset, h_uu);
        Matrix g_u = mul_tn(bi, p * a);
        g_u *= -1.0;
        set_block(sys.g, u_ref.offset, 0, g_u);

        if (robustness.is_robust(i)) {
            const auto& d_ref = sys.block(i, true);
            const Matrix& m = robustness.penalty_of(i)[t];
            Matrix h_dd = m + spec.opponent_cost_s[static_cast<size_t>(i)][t] - mul_tn(bmi, pbmi);
            sys.d_block_min_eig[static_cast<size_t>(i)] = min_eig_of_block(h_dd);
            set_block(sys.h, u_ref.offset, d_ref.offset, mul_tn(bi, pbmi));
            set_block(sys.h, d_ref.offset, d_ref.offset, h_dd);
            Matrix h_du = mul_tn(bmi, pbi);
            h_du *= -1.0;
            set_block(sys.h, d_ref.offset, u_ref.offset, h_du);
            set_block(sys.g, d_ref.offset, 0, mul_tn(bmi, p * a));

            // Coupling -M^{i,j} against the opponents' K columns.
            const auto map = stacked_index_map(spec, i);
            for (const auto& blk : map.blocks) {
                Matrix mij = col_block(m, blk.offset, blk.width);
                mij *= -1.0;
                set_block(sys.h, d_ref.offset, sys.block(blk.player, false).offset, mij);
            }
        } else {
            // d_i = u_{-i} substitution: the K row of player i couples to the
            // opponents' gains directly.
            const auto map = stacked_index_map(spec, i);
            for (const auto& blk : map.blocks) {
                const Matrix pbj = col_block(pbmi, blk.offset, blk.width);
                set_block(sys.h, u_ref.offset, sys.block(blk.player, false).offset,
                          mul_tn(bi, pbj));
            }
        }
    }
    return sys;
}

std::vector<Matrix> riccati_step(const GameSpec& spec, const RobustnessConfig& robustness,
                                 const std::vector<Matrix>& next_values,
                                 const std::vector<Matrix>& gains_k,
                                 const std::vector<Matrix>& gains_l, int stage) {
    const int N = spec.n_players;
    const size_t t = static_cast<size_t>(stage);
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        const Matrix& bi = spec.dynamics_b[static_cast<size_t>(i)][t];
        const Matrix bmi = stacked_opponent_b(spec, i, stage);
        const Matrix& k = gains_k[static_cast<size_t>(i)];
        const Matrix pinned = stack_opponent_gains(gains_k, i);
        const Matrix& l = robustness.is_robust(i) ? gains_l[static_cast<size_t>(i)] : pinned;

        const Matrix closed = spec.dynamics_a[t] + bi * k + bmi * l;
        Matrix p = spec.state_cost_q[static_cast<size_t>(i)][t] +
                   congruence(spec.input_cost_r[static_cast<size_t>(i)][t], k) +
                   congruence(next_values[static_cast<size_t>(i)], closed) -
                   congruence(spec.opponent_cost_s[static_cast<size_t>(i)][t], l);
        if (robustness.is_robust(i)) {
            const Matrix deviation = l - pinned;
            p -= congruence(robustness.penalty_of(i)[t], deviation);
        }
        symmetrize(p);
        out.push_back(std::move(p));
    }
    return out;
}

EquilibriumSolution solve_strategically_robust(const GameSpec& spec,
                                               const RobustnessConfig& robustness) {
    const int N = spec.n_players;
    const int T = spec.horizon;

    EquilibriumSolution sol;
    sol.player_gains_k.assign(static_cast<size_t>(N), std::vector<Matrix>(static_cast<size_t>(T)));
    sol.adversary_gains_l.assign(static_cast<size_t>(N), std::vector<Matrix>(static_cast<size_t>(T)));
    sol.value_matrices_p.assign(static_cast<size_t>(N),
                                std::vector<Matrix>(static_cast<size_t>(T) + 1));
    sol.condition_log.assign(static_cast<size_t>(T), {});

    std::vector<Matrix> values;
    values.reserve(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        values.push_back(spec.terminal_cost_q[static_cast<size_t>(i)]);
        sol.value_matrices_p[static_cast<size_t>(i)][static_cast<size_t>(T)] = values.back();
    }

    for (int stage = T - 1; stage >= 0; --stage) {
        StageSystem sys = assemble_stage_system(spec, robustness, values, stage);
        for (int i = 0; i < N; ++i) {
            const auto& u_ref = sys.block(i, false);
            const Matrix h_uu = row_block(col_block(sys.h, u_ref.offset, u_ref.width),
                                          u_ref.offset, u_ref.width);
            if (sys.u_block_min_eig[static_cast<size_t>(i)] <= definiteness_threshold(h_uu))
                fail(SolverFailure::PlayerConvexity, stage, i);
            if (robustness.is_robust(i)) {
                const auto& d_ref = sys.block(i, true);
                const Matrix h_dd = row_block(col_block(sys.h, d_ref.offset, d_ref.width),
                                              d_ref.offset, d_ref.width);
                if (sys.d_block_min_eig[static_cast<size_t>(i)] <= definiteness_threshold(h_dd))
                    fail(SolverFailure::AdversaryConcavity, stage, i);
            }
        }

        const linalg::LuFactorization fac = linalg::lu_factor(sys.h);
        if (fac.singular) fail(SolverFailure::SingularStageSystem, stage);
        const double condition = linalg::condition_inf(sys.h, fac);
        if (!(condition < kSingularConditionThreshold))
            fail(SolverFailure::SingularStageSystem, stage);
        const Matrix gains = linalg::lu_solve(fac, sys.g);

        Matrix residual = sys.h * gains - sys.g;
        double foc_residual = max_abs(residual);

        std::vector<Matrix> k_t;
        k_t.reserve(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) {
            const auto& u_ref = sys.block(i, false);
            k_t.push_back(row_block(gains, u_ref.offset, u_ref.width));
        }
        std::vector<Matrix> l_t(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) {
            if (robustness.is_robust(i)) {
                const auto& d_ref = sys.block(i, true);
                l_t[static_cast<size_t>(i)] = row_block(gains, d_ref.offset, d_ref.width);
            } else {
                l_t[static_cast<size_t>(i)] = stack_opponent_gains(k_t, i);
            }
        }

        values = riccati_step(spec, robustness, values, k_t, l_t, stage);

        for (int i = 0; i < N; ++i) {
            sol.player_gains_k[static_cast<size_t>(i)][static_cast<size_t>(stage)] =
                std::move(k_t[static_cast<size_t>(i)]);
            sol.adversary_gains_l[static_cast<size_t>(i)][static_cast<size_t>(stage)] =
                std::move(l_t[static_cast<size_t>(i)]);
            sol.value_matrices_p[static_cast<size_t>(i)][static_cast<size_t>(stage)] =
                values[static_cast<size_t>(i)];
        }
        auto& log = sol.condition_log[static_cast<size_t>(stage)];
        log.u_block_min_eig = std::move(sys.u_block_min_eig);
        log.d_block_min_eig = std::move(sys.d_block_min_eig);
        log.condition = condition;
        log.foc_residual = foc_residual;
        log.g_norm = max_abs(sys.g);
    }
    return sol;
}

EquilibriumSolution solve_nash(const GameSpec& spec) {
    return solve_strategically_robust(spec, RobustnessConfig::all_infinite(spec.n_players));
}

DominanceReport check_spectral_dominance(const GameSpec& spec, const RobustnessConfig& robustness,
                                         const std::vector<Matrix>& next_values, int stage) {
    const int N = spec.n_players;
    const size_t t = static_cast<size_t>(stage);
    for (int i = 0; i < N; ++i)
        if (!robustness.is_robust(i))
            throw std::invalid_argument(
                "check_spectral_dominance: requires a finite penalty for every player");

    DominanceReport report;
    report.players.resize(static_cast<size_t>(N));
    report.all_pass = true;

    // Detect the uniform lambda * I shorthand.
    std::optional<double> uniform = std::nullopt;
    bool is_uniform = true;
    for (int i = 0; i < N && is_uniform; ++i) {
        const Matrix& m = robustness.penalty_of(i)[t];
        const double lambda = m(0, 0);
        Matrix diff = m - Matrix::diagonal(m.rows(), lambda);
        if (max_abs(diff) > 1e-12 * (1.0 + std::abs(lambda)) ||
            (uniform && std::abs(*uniform - lambda) > 1e-12 * (1.0 + std::abs(lambda))))
            is_uniform = false;
        else
            uniform = lambda;
    }
    if (is_uniform) report.uniform_lambda = uniform;

    for (int i = 0; i < N; ++i) {
        const Matrix& bi = spec.dynamics_b[static_cast<size_t>(i)][t];
        const Matrix bmi = stacked_opponent_b(spec, i, stage);
        const Matrix& p = next_values[static_cast<size_t>(i)];
        const Matrix h_uu = spec.input_cost_r[static_cast<size_t>(i)][t] + congruence(p, bi);
        const Matrix h_dd = robustness.penalty_of(i)[t] +
                            spec.opponent_cost_s[static_cast<size_t>(i)][t] - congruence(p, bmi);
        auto& entry = report.players[static_cast<size_t>(i)];
        entry.lhs = std::min(min_eig_of_block(h_uu), min_eig_of_block(h_dd));

        const auto map_i = stacked_index_map(spec, i);
        entry.rhs = 0.0;
        for (const auto& blk : map_i.blocks) {
            const int j = blk.player;
            const Matrix mij = col_block(robustness.penalty_of(i)[t], blk.offset, blk.width);
            const auto map_j = stacked_index_map(spec, j);
            const auto& blk_ji = map_j.block_of(i);
            const Matrix mji = col_block(robustness.penalty_of(j)[t], blk_ji.offset, blk_ji.width);
            entry.rhs += 0.5 * std::max(linalg::max_singular_value(mij),
                                        linalg::max_singular_value(mji));
        }
        entry.pass = entry.lhs > entry.rhs;
        report.all_pass = report.all_pass && entry.pass;
    }
    return report;
}

BestResponse best_response_player(const GameSpec& spec, const RobustnessConfig& robustness,
                                  const std::vector<Matrix>& adversary_gains,
                                  const std::vector<std::vector<Matrix>>& opponent_k, int player) {
    const int T = spec.horizon;
    const size_t pi = static_cast<size_t>(player);

    BestResponse out;
    out.gains.resize(static_cast<size_t>(T));
    out.values.resize(static_cast<size_t>(T) + 1);
    Matrix p = spec.terminal_cost_q[pi];
    out.values[static_cast<size_t>(T)] = p;

    for (int stage = T - 1; stage >= 0; --stage) {
        const size_t t = static_cast<size_t>(stage);
        const Matrix& bi = spec.dynamics_b[pi][t];
        const Matrix bmi = stacked_opponent_b(spec, player, stage);
        const Matrix& l = adversary_gains[t];

        // Reduced LQR: drift bundles the fixed adversary's feedback.
        const Matrix a_tilde = spec.dynamics_a[t] + bmi * l;
        Matrix q_tilde = spec.state_cost_q[pi][t] -
                         congruence(spec.opponent_cost_s[pi][t], l);
        if (robustness.is_robust(player)) {
            std::vector<Matrix> opp;
            for (int j = 0; j < spec.n_players; ++j)
                if (j != player) opp.push_back(opponent_k[static_cast<size_t>(j)][t]);
            const Matrix deviation = l - vstack(opp);
            q_tilde -= congruence(robustness.penalty_of(player)[t], deviation);
        }

        const Matrix h_uu = spec.input_cost_r[pi][t] + congruence(p, bi);
        if (min_eig_of_block(h_uu) <= definiteness_threshold(h_uu))
            fail(SolverFailure::ReducedLqrIllPosed, stage, player);
        const Matrix rhs = mul_tn(bi, p * a_tilde);
        Matrix k = *linalg::try_solve(h_uu, rhs);
        k *= -1.0;

        const Matrix closed = a_tilde + bi * k;
        p = q_tilde + congruence(spec.input_cost_r[pi][t], k) + congruence(p, closed);
        symmetrize(p);
        out.gains[t] = std::move(k);
        out.values[t] = p;
    }
    return out;
}

BestResponse best_response_adversary(const GameSpec& spec, const RobustnessConfig& robustness,
                                     const std::vector<std::vector<Matrix>>& gains_k, int player) {
    const int T = spec.horizon;
    const size_t pi = static_cast<size_t>(player);

    BestResponse out;
    out.gains.resize(static_cast<size_t>(T));
    out.values.resize(static_cast<size_t>(T) + 1);
    Matrix p = spec.terminal_cost_q[pi];
    out.values[static_cast<size_t>(T)] = p;

    for (int stage = T - 1; stage >= 0; --stage) {
        const size_t t = static_cast<size_t>(stage);
        const Matrix& bi = spec.dynamics_b[pi][t];
        const Matrix bmi = stacked_opponent_b(spec, player, stage);
        const Matrix& k = gains_k[pi][t];
        std::vector<Matrix> opp;
        for (int j = 0; j < spec.n_players; ++j)
            if (j != player) opp.push_back(gains_k[static_cast<size_t>(j)][t]);
        const Matrix pinned = vstack(opp);
        const Matrix a_hat = spec.dynamics_a[t] + bi * k;

        Matrix l;
        if (robustness.is_robust(player)) {
            const Matrix& m = robustness.penalty_of(player)[t];
            const Matrix h_dd = m + spec.opponent_cost_s[pi][t] - congruence(p, bmi);
            if (min_eig_of_block(h_dd) <= definiteness_threshold(h_dd))
                fail(SolverFailure::AdversaryUnbounded, stage, player);
            const Matrix rhs = m * pinned + mul_tn(bmi, p * a_hat);
            l = *linalg::try_solve(h_dd, rhs);
        } else {
            l = pinned;
        }

        const Matrix closed = a_hat + bmi * l;
        Matrix next = spec.state_cost_q[pi][t] + congruence(spec.input_cost_r[pi][t], k) -
                      congruence(spec.opponent_cost_s[pi][t], l) + congruence(p, closed);
        if (robustness.is_robust(player)) {
            const Matrix deviation = l - pinned;
            next -= congruence(robustness.penalty_of(player)[t], deviation);
        }
        symmetrize(next);
        p = std::move(next);
        out.gains[t] = std::move(l);
        out.values[t] = p;
    }
    return out;
}

BoundaryResult find_existence_boundary(const GameSpec& spec, RobustnessPattern pattern,
                                       const std::vector<double>& scale_grid, int player) {
    auto config_at = [&](double scale) {
        std::vector<std::optional<double>> level(static_cast<size_t>(spec.n_players), std::nullopt);
        if (pattern == RobustnessPattern::AllPlayers) {
            for (auto& entry : level) entry = 1.0 / scale;
        } else {
            level[static_cast<size_t>(player)] = 1.0 / scale;
        }
        return RobustnessConfig::scaled_identity(spec, level);
    };
    auto solvable = [&](double scale) {
        if (scale <= 0.0) return true;  // inverse penalty zero is the Nash limit
        try {
            solve_strategically_robust(spec, config_at(scale));
            return true;
        } catch (const SolverError&) {
            return false;
        }
    };

    BoundaryResult result;
    double last_good = 0.0;
    double first_bad = 0.0;
    bool found = false;
    for (const double s : scale_grid) {
        if (solvable(s)) {
            last_good = s;
        } else {
            first_bad = s;
            found = true;
            break;
        }
    }
    if (!found) {
        result.critical_scale = scale_grid.empty() ? 0.0 : scale_grid.back();
        result.bracket_low = result.critical_scale;
        result.bracket_high = result.critical_scale;
        result.failure_found = false;
        return result;
    }
    double lo = last_good;
    double hi = first_bad;
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (solvable(mid))
            lo = mid;
        else
            hi = mid;
    }
    result.critical_scale = lo;
    result.bracket_low = lo;
    result.bracket_high = hi;
    result.failure_found = true;
    return result;
}

SocialOptimum solve_social_optimum(const GameSpec& spec) {
    const int N = spec.n_players;
    const int T = spec.horizon;
    const int total = spec.total_input_dim();

    std::vector<int> offsets(static_cast<size_t>(N), 0);
    for (int i = 1; i < N; ++i)
        offsets[static_cast<size_t>(i)] =
            offsets[static_cast<size_t>(i - 1)] + spec.input_dims[static_cast<size_t>(i - 1)];

    SocialOptimum out;
    out.gains.resize(static_cast<size_t>(T));
    out.values.resize(static_cast<size_t>(T) + 1);

    Matrix p(spec.state_dim, spec.state_dim);
    for (int i = 0; i < N; ++i) p += spec.terminal_cost_q[static_cast<size_t>(i)];
    out.values[static_cast<size_t>(T)] = p;

    for (int stage = T - 1; stage >= 0; --stage) {
        const size_t t = static_cast<size_t>(stage);

        std::vector<Matrix> b_blocks;
        b_blocks.reserve(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) b_blocks.push_back(spec.dynamics_b[static_cast<size_t>(i)][t]);
        const Matrix b = hstack(b_blocks);

        // Block-diagonal R minus every player's S contribution on the
        // stacked opponent coordinates.
        Matrix r_total(total, total);
        for (int j = 0; j < N; ++j)
            set_block(r_total, offsets[static_cast<size_t>(j)], offsets[static_cast<size_t>(j)],
                      spec.input_cost_r[static_cast<size_t>(j)][t]);
        for (int i = 0; i < N; ++i) {
            const auto map = stacked_index_map(spec, i);
            const Matrix& s = spec.opponent_cost_s[static_cast<size_t>(i)][t];
            for (const auto& row_blk : map.blocks)
                for (const auto& col_blk : map.blocks)
                    for (int r = 0; r < row_blk.width; ++r)
                        for (int c = 0; c < col_blk.width; ++c)
                            r_total(offsets[static_cast<size_t>(row_blk.player)] + r,
                                    offsets[static_cast<size_t>(col_blk.player)] + c) -=
                                s(row_blk.offset + r, col_blk.offset + c);
        }
        if (min_eig_of_block(r_total) <= kPdEigenThreshold)
            fail(SolverFailure::IndefiniteSocialCost, stage);

        Matrix q_total(spec.state_dim, spec.state_dim);
        for (int i = 0; i < N; ++i) q_total += spec.state_cost_q[static_cast<size_t>(i)][t];

        const Matrix h_uu = r_total + congruence(p, b);
        if (min_eig_of_block(h_uu) <= definiteness_threshold(h_uu))
            fail(SolverFailure::IndefiniteSocialCost, stage);
        const Matrix rhs = mul_tn(b, p * spec.dynamics_a[t]);
        Matrix k = *linalg::try_solve(h_uu, rhs);
        k *= -1.0;

        const Matrix closed = spec.dynamics_a[t] + b * k;
        p = q_total + congruence(r_total, k) + congruence(p, closed);
        symmetrize(p);
        out.gains[t] = std::move(k);
        out.values[t] = p;
    }
    out.optimal_cost = quad_form(out.values[0], spec.initial_state);
    return out;
}

nlohmann::json solution_to_json(const EquilibriumSolution& solution) {
    using nlohmann::json;
    auto matrix_json = [](const Matrix& m) {
        json rows = json::array();
        for (int i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    const int N = static_cast<int>(solution.player_gains_k.size());
    const int T = N > 0 ? static_cast<int>(solution.player_gains_k.front().size()) : 0;

    json doc;
    // Stage-major nesting: K[t][i], L[t][i], P[t][i].
    json k = json::array();
    json l = json::array();
    for (int t = 0; t < T; ++t) {
        json kt = json::array();
        json lt = json::array();
        for (int i = 0; i < N; ++i) {
            kt.push_back(matrix_json(solution.player_gains_k[static_cast<size_t>(i)][static_cast<size_t>(t)]));
            lt.push_back(matrix_json(solution.adversary_gains_l[static_cast<size_t>(i)][static_cast<size_t>(t)]));
        }
        k.push_back(std::move(kt));
        l.push_back(std::move(lt));
    }
    json p = json::array();
    for (int t = 0; t <= T; ++t) {
        json pt = json::array();
        for (int i = 0; i < N; ++i)
            pt.push_back(matrix_json(solution.value_matrices_p[static_cast<size_t>(i)][static_cast<size_t>(t)]));
        p.push_back(std::move(pt));
    }
    json conditions = json::array();
    for (const auto& log : solution.condition_log) {
        json entry;
        entry["u_block_min_eig"] = log.u_block_min_eig;
        json d = json::array();
        for (const double v : log.d_block_min_eig) {
            if (std::isinf(v))
                d.push_back("inf");
            else
                d.push_back(v);
        }
        entry["d_block_min_eig"] = std::move(d);
        entry["condition"] = log.condition;
        entry["foc_residual"] = log.foc_residual;
        entry["g_norm"] = log.g_norm;
        conditions.push_back(std::move(entry));
    }
    doc["K"] = std::move(k);
    doc["L"] = std::move(l);
    doc["P"] = std::move(p);
    doc["conditions"] = std::move(conditions);
    return doc;
}

}  // namespace srlq
