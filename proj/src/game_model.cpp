#include "srlq/game_model.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "srlq/linalg.hpp"

namespace srlq {

using nlohmann::json;

int GameSpec::total_input_dim() const {
    return std::accumulate(input_dims.begin(), input_dims.end(), 0);
}

int GameSpec::opponent_dim(int player) const {
    return total_input_dim() - input_dims[static_cast<size_t>(player)];
}

RobustnessConfig RobustnessConfig::all_infinite(int n_players) {
    RobustnessConfig config;
    config.penalty.resize(static_cast<size_t>(n_players));
    return config;
}

RobustnessConfig RobustnessConfig::scaled_identity(const GameSpec& spec,
                                                   const std::vector<std::optional<double>>& level) {
    if (static_cast<int>(level.size()) != spec.n_players)
        throw std::invalid_argument("scaled_identity: one level per player required");
    RobustnessConfig config;
    config.penalty.resize(level.size());
    for (int i = 0; i < spec.n_players; ++i) {
        if (!level[static_cast<size_t>(i)]) continue;
        config.penalty[static_cast<size_t>(i)] = std::vector<Matrix>(
            static_cast<size_t>(spec.horizon),
            Matrix::diagonal(spec.opponent_dim(i), *level[static_cast<size_t>(i)]));
    }
    return config;
}

const StackedBlock& StackedIndexMap::block_of(int opponent) const {
    for (const auto& b : blocks)
        if (b.player == opponent) return b;
    throw std::out_of_range("StackedIndexMap: no block for requested opponent");
}

StackedIndexMap stacked_index_map(const GameSpec& spec, int player) {
    if (player < 0 || player >= spec.n_players)
        throw std::out_of_range("stacked_index_map: player index out of range");
    StackedIndexMap map;
    map.player = player;
    int at = 0;
    for (int j = 0; j < spec.n_players; ++j) {
        if (j == player) continue;
        map.blocks.push_back({j, at, spec.input_dims[static_cast<size_t>(j)]});
        at += spec.input_dims[static_cast<size_t>(j)];
    }
    map.total_width = at;
    return map;
}

Matrix stacked_opponent_b(const GameSpec& spec, int player, int stage) {
    std::vector<Matrix> blocks;
    blocks.reserve(static_cast<size_t>(spec.n_players) - 1);
    for (int j = 0; j < spec.n_players; ++j)
        if (j != player) blocks.push_back(spec.dynamics_b[static_cast<size_t>(j)][static_cast<size_t>(stage)]);
    return hstack(blocks);
}

namespace {

std::string at_player_stage(int player, int stage) {
    std::ostringstream os;
    os << "(player " << player + 1 << ", t=" << stage << ")";
    return os.str();
}

bool symmetric_within_tolerance(const Matrix& m) {
    return max_asymmetry(m) <= kSymmetryTolerance * (1.0 + max_abs(m));
}

// One definiteness probe used everywhere in validation; symmetrizes before
// the eigenvalue computation so near-symmetric inputs are judged by their
// symmetric part.
double probe_min_eigenvalue(Matrix m) {
    symmetrize(m);
    return linalg::min_eigenvalue(m);
}

class Validator {
  public:
    explicit Validator(ValidationReport& report) : report_(report) {}

    void fail(const std::string& message) { report_.violations.push_back(message); }

    bool check_dims(const Matrix& m, int rows, int cols, const std::string& name,
                    const std::string& where) {
        if (m.rows() == rows && m.cols() == cols) return true;
        std::ostringstream os;
        os << "dimension mismatch: " << name << " at " << where << " is " << m.rows() << "x"
           << m.cols() << ", expected " << rows << "x" << cols;
        fail(os.str());
        return false;
    }

    void check_symmetric(const Matrix& m, const std::string& name, const std::string& where) {
        if (!symmetric_within_tolerance(m))
            fail(name + " asymmetric beyond tolerance at " + where);
    }

    void check_psd(const Matrix& m, const std::string& name, const std::string& where) {
        check_symmetric(m, name, where);
        if (probe_min_eigenvalue(m) <= kPsdEigenThreshold)
            fail(name + " not positive semidefinite at " + where);
    }

    void check_pd(const Matrix& m, const std::string& name, const std::string& where) {
        check_symmetric(m, name, where);
        if (probe_min_eigenvalue(m) <= kPdEigenThreshold)
            fail(name + " not positive definite at " + where);
    }

  private:
    ValidationReport& report_;
};

}  // namespace

ValidationReport validate_game(const GameSpec& spec, const RobustnessConfig& robustness) {
    ValidationReport report;
    Validator v(report);

    if (spec.n_players <= 0) v.fail("n_players must be positive");
    if (spec.horizon <= 0) v.fail("horizon must be positive");
    if (spec.state_dim <= 0) v.fail("state_dim must be positive");
    if (static_cast<int>(spec.input_dims.size()) != spec.n_players)
        v.fail("input_dims must list one dimension per player");
    for (size_t i = 0; i < spec.input_dims.size(); ++i)
        if (spec.input_dims[i] <= 0) v.fail("input_dims must be positive (player " + std::to_string(i + 1) + ")");
    if (!report.ok()) return report;

    const int n = spec.state_dim;
    const int N = spec.n_players;
    const int T = spec.horizon;

    if (static_cast<int>(spec.initial_state.size()) != n) v.fail("x0 length does not match state_dim");
    if (static_cast<int>(spec.dynamics_a.size()) != T) v.fail("A must have horizon entries");
    auto check_per_player_length = [&](const auto& seq, const std::string& name) {
        if (static_cast<int>(seq.size()) != N) {
            v.fail(name + " must have one sequence per player");
            return false;
        }
        for (int i = 0; i < N; ++i)
            if (static_cast<int>(seq[static_cast<size_t>(i)].size()) != T) {
                v.fail(name + " sequence of player " + std::to_string(i + 1) + " must have horizon entries");
                return false;
            }
        return true;
    };
    bool shapes_ok = static_cast<int>(spec.dynamics_a.size()) == T;
    shapes_ok &= check_per_player_length(spec.dynamics_b, "B");
    shapes_ok &= check_per_player_length(spec.state_cost_q, "Q");
    shapes_ok &= check_per_player_length(spec.input_cost_r, "R");
    shapes_ok &= check_per_player_length(spec.opponent_cost_s, "S");
    if (static_cast<int>(spec.terminal_cost_q.size()) != N)
        v.fail("Q_terminal must have one matrix per player");
    if (static_cast<int>(robustness.penalty.size()) != N)
        v.fail("M must have one entry per player");
    if (!report.ok() || !shapes_ok) return report;

    for (int t = 0; t < T; ++t)
        v.check_dims(spec.dynamics_a[static_cast<size_t>(t)], n, n, "A", "t=" + std::to_string(t));
    for (int i = 0; i < N; ++i) {
        const int di = spec.input_dims[static_cast<size_t>(i)];
        const int odi = spec.opponent_dim(i);
        for (int t = 0; t < T; ++t) {
            const auto where = at_player_stage(i, t);
            if (v.check_dims(spec.dynamics_b[static_cast<size_t>(i)][static_cast<size_t>(t)], n, di, "B", where)) {
            }
            if (v.check_dims(spec.state_cost_q[static_cast<size_t>(i)][static_cast<size_t>(t)], n, n, "Q", where))
                v.check_psd(spec.state_cost_q[static_cast<size_t>(i)][static_cast<size_t>(t)], "Q", where);
            if (v.check_dims(spec.input_cost_r[static_cast<size_t>(i)][static_cast<size_t>(t)], di, di, "R", where))
                v.check_pd(spec.input_cost_r[static_cast<size_t>(i)][static_cast<size_t>(t)], "R", where);
            if (v.check_dims(spec.opponent_cost_s[static_cast<size_t>(i)][static_cast<size_t>(t)], odi, odi, "S", where))
                v.check_psd(spec.opponent_cost_s[static_cast<size_t>(i)][static_cast<size_t>(t)], "S", where);
        }
        const auto where_T = "(player " + std::to_string(i + 1) + ", terminal)";
        if (v.check_dims(spec.terminal_cost_q[static_cast<size_t>(i)], n, n, "Q_terminal", where_T))
            v.check_psd(spec.terminal_cost_q[static_cast<size_t>(i)], "Q_terminal", where_T);

        if (robustness.is_robust(i)) {
            const auto& ms = robustness.penalty_of(i);
            if (static_cast<int>(ms.size()) != T) {
                v.fail("M sequence of player " + std::to_string(i + 1) + " must have horizon entries");
                continue;
            }
            for (int t = 0; t < T; ++t) {
                const auto where = at_player_stage(i, t);
                if (v.check_dims(ms[static_cast<size_t>(t)], odi, odi, "M", where))
                    v.check_pd(ms[static_cast<size_t>(t)], "M", where);
            }
        }
    }
    return report;
}

AffineTarget coordinate_target(int coordinate, double offset, int state_dim) {
    if (coordinate < 0 || coordinate >= state_dim)
        throw std::out_of_range("coordinate_target: coordinate out of range");
    AffineTarget target;
    target.selector.assign(static_cast<size_t>(state_dim), 0.0);
    target.selector[static_cast<size_t>(coordinate)] = 1.0;
    target.offset = offset;
    return target;
}

GameSpec augment_affine_target(const GameSpec& spec,
                               const std::vector<std::optional<AffineTarget>>& targets) {
    if (static_cast<int>(targets.size()) != spec.n_players)
        throw std::invalid_argument("augment_affine_target: one (optional) target per player required");
    const int n = spec.state_dim;
    for (const auto& t : targets)
        if (t && static_cast<int>(t->selector.size()) != n)
            throw std::out_of_range("augment_affine_target: selector references out-of-range coordinates");

    GameSpec out = spec;
    out.state_dim = n + 1;
    out.initial_state.push_back(1.0);

    for (auto& a : out.dynamics_a) {
        Matrix aug(n + 1, n + 1);
        set_block(aug, 0, 0, a);
        aug(n, n) = 1.0;
        a = std::move(aug);
    }
    for (auto& per_player : out.dynamics_b)
        for (auto& b : per_player) {
            Matrix aug(n + 1, b.cols());
            set_block(aug, 0, 0, b);
            b = std::move(aug);
        }
    for (auto& per_player : out.state_cost_q)
        for (auto& q : per_player) {
            Matrix aug(n + 1, n + 1);
            set_block(aug, 0, 0, q);
            q = std::move(aug);
        }
    for (int i = 0; i < spec.n_players; ++i) {
        Matrix aug(n + 1, n + 1);
        const auto& target = targets[static_cast<size_t>(i)];
        if (target) {
            // (s.x - r)^2 expands to x's s'x - 2 r s'x + r^2 on (x, 1).
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    aug(a, b) = target->selector[static_cast<size_t>(a)] *
                                target->selector[static_cast<size_t>(b)];
            for (int a = 0; a < n; ++a) {
                aug(a, n) = -target->offset * target->selector[static_cast<size_t>(a)];
                aug(n, a) = aug(a, n);
            }
            aug(n, n) = target->offset * target->offset;
        } else {
            set_block(aug, 0, 0, spec.terminal_cost_q[static_cast<size_t>(i)]);
        }
        out.terminal_cost_q[static_cast<size_t>(i)] = std::move(aug);
    }
    return out;
}

GameSpec build_star_network_game(int n_nodes, int horizon, double target) {
    if (n_nodes < 2) throw std::invalid_argument("build_star_network_game: need at least 2 nodes");
    if (horizon <= 0) throw std::invalid_argument("build_star_network_game: horizon must be positive");

    GameSpec spec;
    spec.n_players = n_nodes;
    spec.horizon = horizon;
    spec.state_dim = n_nodes;
    spec.input_dims.assign(static_cast<size_t>(n_nodes), 1);
    spec.initial_state.assign(static_cast<size_t>(n_nodes), 0.0);

    Matrix a(n_nodes, n_nodes);
    for (int i = 0; i < n_nodes; ++i) a(i, i) = 2.0 / 3.0;
    for (int j = 1; j < n_nodes; ++j) {
        a(0, j) = 1.0 / (3.0 * (n_nodes - 1));  // center averages its leaves
        a(j, 0) = 1.0 / 3.0;                    // each leaf sees only the center
    }
    spec.dynamics_a.assign(static_cast<size_t>(horizon), a);

    spec.dynamics_b.resize(static_cast<size_t>(n_nodes));
    spec.state_cost_q.resize(static_cast<size_t>(n_nodes));
    spec.terminal_cost_q.resize(static_cast<size_t>(n_nodes));
    spec.input_cost_r.resize(static_cast<size_t>(n_nodes));
    spec.opponent_cost_s.resize(static_cast<size_t>(n_nodes));
    for (int i = 0; i < n_nodes; ++i) {
        Matrix b(n_nodes, 1);
        b(i, 0) = 1.0;
        spec.dynamics_b[static_cast<size_t>(i)].assign(static_cast<size_t>(horizon), b);
        spec.state_cost_q[static_cast<size_t>(i)].assign(static_cast<size_t>(horizon),
                                                         Matrix::zero(n_nodes, n_nodes));
        spec.terminal_cost_q[static_cast<size_t>(i)] = Matrix::zero(n_nodes, n_nodes);
        spec.input_cost_r[static_cast<size_t>(i)].assign(static_cast<size_t>(horizon),
                                                         Matrix::identity(1));
        spec.opponent_cost_s[static_cast<size_t>(i)].assign(
            static_cast<size_t>(horizon), Matrix::zero(n_nodes - 1, n_nodes - 1));
    }

    std::vector<std::optional<AffineTarget>> targets;
    targets.reserve(static_cast<size_t>(n_nodes));
    for (int i = 0; i < n_nodes; ++i)
        targets.push_back(coordinate_target(i, target, n_nodes));
    return augment_affine_target(spec, targets);
}

GameSpec build_two_player_scalar_game(double a, int horizon) {
    if (horizon <= 0) throw std::invalid_argument("build_two_player_scalar_game: horizon must be positive");
    GameSpec spec;
    spec.n_players = 2;
    spec.horizon = horizon;
    spec.state_dim = 1;
    spec.input_dims = {1, 1};
    spec.initial_state = {1.0};
    spec.dynamics_a.assign(static_cast<size_t>(horizon), Matrix{{a}});
    for (int i = 0; i < 2; ++i) {
        spec.dynamics_b.push_back(std::vector<Matrix>(static_cast<size_t>(horizon), Matrix{{1.0}}));
        spec.state_cost_q.push_back(std::vector<Matrix>(static_cast<size_t>(horizon), Matrix{{0.0}}));
        spec.terminal_cost_q.push_back(Matrix{{1.0}});
        spec.input_cost_r.push_back(std::vector<Matrix>(static_cast<size_t>(horizon), Matrix{{1.0}}));
        spec.opponent_cost_s.push_back(std::vector<Matrix>(static_cast<size_t>(horizon), Matrix{{0.0}}));
    }
    return spec;
}

// ---------------------------------------------------------------------------
// JSON ingestion

namespace {

Matrix parse_matrix(const json& node, const std::string& name) {
    if (!node.is_array() || node.empty() || !node.front().is_array())
        throw std::invalid_argument("game json: " + name + " must be a nested array of numbers");
    const int rows = static_cast<int>(node.size());
    const int cols = static_cast<int>(node.front().size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const auto& row = node[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("game json: " + name + " has ragged rows");
        for (int j = 0; j < cols; ++j) {
            const auto& cell = row[static_cast<size_t>(j)];
            if (!cell.is_number())
                throw std::invalid_argument("game json: " + name + " has a non-numeric entry");
            m(i, j) = cell.get<double>();
        }
    }
    return m;
}

bool is_matrix_node(const json& node) {
    return node.is_array() && !node.empty() && node.front().is_array() &&
           (node.front().empty() || node.front().front().is_number());
}

// A value is either one matrix (broadcast across stages) or a list of
// per-stage matrices.
std::vector<Matrix> parse_stage_matrices(const json& node, int horizon, const std::string& name) {
    std::vector<Matrix> out;
    if (is_matrix_node(node)) {
        out.assign(static_cast<size_t>(horizon), parse_matrix(node, name));
        return out;
    }
    if (!node.is_array() || static_cast<int>(node.size()) != horizon)
        throw std::invalid_argument("game json: " + name + " must be a matrix or a list of horizon matrices");
    out.reserve(static_cast<size_t>(horizon));
    for (int t = 0; t < horizon; ++t)
        out.push_back(parse_matrix(node[static_cast<size_t>(t)], name + "[" + std::to_string(t) + "]"));
    return out;
}

// Symmetrize when within tolerance; leave asymmetric inputs untouched so
// validate_game reports them.
void ingest_symmetric(Matrix& m) {
    if (m.square() && symmetric_within_tolerance(m)) symmetrize(m);
}

Matrix parse_penalty_matrix(const json& node, const GameSpec& spec, int player,
                            const std::string& name) {
    const int odi = spec.opponent_dim(player);
    if (node.is_number()) return Matrix::diagonal(odi, node.get<double>());
    if (node.is_object()) {
        // Per-opponent block map {"<1-based j>": matrix | scalar}.
        const auto map = stacked_index_map(spec, player);
        Matrix m(odi, odi);
        for (const auto& [key, value] : node.items()) {
            int j = 0;
            try {
                j = std::stoi(key) - 1;
            } catch (const std::exception&) {
                throw std::invalid_argument("game json: " + name + " block key '" + key +
                                            "' is not a player index");
            }
            if (j == player || j < 0 || j >= spec.n_players)
                throw std::invalid_argument("game json: " + name + " block key '" + key +
                                            "' is not an opponent of player " + std::to_string(player + 1));
            const auto& blk = map.block_of(j);
            Matrix sub = value.is_number() ? Matrix::diagonal(blk.width, value.get<double>())
                                           : parse_matrix(value, name + "[" + key + "]");
            if (sub.rows() != blk.width || sub.cols() != blk.width)
                throw std::invalid_argument("game json: " + name + " block '" + key + "' has wrong size");
            set_block(m, blk.offset, blk.offset, sub);
        }
        return m;
    }
    return parse_matrix(node, name);
}

std::optional<std::vector<Matrix>> parse_penalty(const json& node, const GameSpec& spec,
                                                 int player) {
    const std::string name = "M[" + std::to_string(player + 1) + "]";
    if (node.is_string()) {
        if (node.get<std::string>() == "inf") return std::nullopt;
        throw std::invalid_argument("game json: " + name + " string value must be \"inf\"");
    }
    // Per-stage list of penalty entries, or a single entry broadcast.
    if (node.is_array() && !node.empty() && !is_matrix_node(node)) {
        if (static_cast<int>(node.size()) != spec.horizon)
            throw std::invalid_argument("game json: " + name + " list must have horizon entries");
        std::vector<Matrix> out;
        out.reserve(node.size());
        for (const auto& entry : node) out.push_back(parse_penalty_matrix(entry, spec, player, name));
        for (auto& m : out) ingest_symmetric(m);
        return out;
    }
    std::vector<Matrix> out(static_cast<size_t>(spec.horizon),
                            parse_penalty_matrix(node, spec, player, name));
    for (auto& m : out) ingest_symmetric(m);
    return out;
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Collapses a constant per-stage sequence back to the broadcast shorthand.
json stage_matrices_to_json(const std::vector<Matrix>& seq) {
    const bool constant =
        std::all_of(seq.begin(), seq.end(), [&](const Matrix& m) { return m == seq.front(); });
    if (constant) return matrix_to_json(seq.front());
    json out = json::array();
    for (const auto& m : seq) out.push_back(matrix_to_json(m));
    return out;
}

}  // namespace

GameDocument parse_game_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("game json: document must be an object");
    for (const char* key : {"n_players", "horizon", "state_dim", "input_dims", "x0", "A", "B", "Q",
                            "Q_terminal", "R"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("game json: missing key '") + key + "'");

    GameDocument out;
    GameSpec& spec = out.spec;
    spec.n_players = doc.at("n_players").get<int>();
    spec.horizon = doc.at("horizon").get<int>();
    spec.state_dim = doc.at("state_dim").get<int>();
    spec.input_dims = doc.at("input_dims").get<std::vector<int>>();
    spec.initial_state = doc.at("x0").get<Vector>();
    if (spec.n_players <= 0 || spec.horizon <= 0 || spec.state_dim <= 0)
        throw std::invalid_argument("game json: n_players, horizon and state_dim must be positive");
    if (static_cast<int>(spec.input_dims.size()) != spec.n_players)
        throw std::invalid_argument("game json: input_dims must have n_players entries");

    spec.dynamics_a = parse_stage_matrices(doc.at("A"), spec.horizon, "A");

    auto parse_per_player = [&](const json& node, const std::string& name) {
        if (!node.is_array() || static_cast<int>(node.size()) != spec.n_players)
            throw std::invalid_argument("game json: " + name + " must list one entry per player");
        std::vector<std::vector<Matrix>> out_seq;
        out_seq.reserve(node.size());
        for (int i = 0; i < spec.n_players; ++i)
            out_seq.push_back(parse_stage_matrices(node[static_cast<size_t>(i)], spec.horizon,
                                                   name + "[" + std::to_string(i + 1) + "]"));
        return out_seq;
    };

    spec.dynamics_b = parse_per_player(doc.at("B"), "B");
    spec.state_cost_q = parse_per_player(doc.at("Q"), "Q");
    spec.input_cost_r = parse_per_player(doc.at("R"), "R");

    const json& qt = doc.at("Q_terminal");
    if (!qt.is_array() || static_cast<int>(qt.size()) != spec.n_players)
        throw std::invalid_argument("game json: Q_terminal must list one matrix per player");
    for (int i = 0; i < spec.n_players; ++i)
        spec.terminal_cost_q.push_back(
            parse_matrix(qt[static_cast<size_t>(i)], "Q_terminal[" + std::to_string(i + 1) + "]"));

    if (doc.contains("S")) {
        spec.opponent_cost_s = parse_per_player(doc.at("S"), "S");
    } else {
        for (int i = 0; i < spec.n_players; ++i)
            spec.opponent_cost_s.push_back(std::vector<Matrix>(
                static_cast<size_t>(spec.horizon),
                Matrix::zero(spec.opponent_dim(i), spec.opponent_dim(i))));
    }

    for (auto& per_player : spec.state_cost_q)
        for (auto& m : per_player) ingest_symmetric(m);
    for (auto& m : spec.terminal_cost_q) ingest_symmetric(m);
    for (auto& per_player : spec.input_cost_r)
        for (auto& m : per_player) ingest_symmetric(m);
    for (auto& per_player : spec.opponent_cost_s)
        for (auto& m : per_player) ingest_symmetric(m);

    out.robustness = RobustnessConfig::all_infinite(spec.n_players);
    if (doc.contains("M")) {
        const json& m = doc.at("M");
        if (!m.is_array() || static_cast<int>(m.size()) != spec.n_players)
            throw std::invalid_argument("game json: M must list one entry per player");
        for (int i = 0; i < spec.n_players; ++i)
            out.robustness.penalty[static_cast<size_t>(i)] =
                parse_penalty(m[static_cast<size_t>(i)], spec, i);
    }
    return out;
}

GameDocument load_game_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open game spec file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("game json: parse error in " + path + ": " + e.what());
    }
    return parse_game_json(doc);
}

nlohmann::json game_to_json(const GameSpec& spec, const RobustnessConfig& robustness) {
    json doc;
    doc["n_players"] = spec.n_players;
    doc["horizon"] = spec.horizon;
    doc["state_dim"] = spec.state_dim;
    doc["input_dims"] = spec.input_dims;
    doc["x0"] = spec.initial_state;
    doc["A"] = stage_matrices_to_json(spec.dynamics_a);
    auto per_player = [](const std::vector<std::vector<Matrix>>& seq) {
        json out = json::array();
        for (const auto& s : seq) out.push_back(stage_matrices_to_json(s));
        return out;
    };
    doc["B"] = per_player(spec.dynamics_b);
    doc["Q"] = per_player(spec.state_cost_q);
    json qt = json::array();
    for (const auto& m : spec.terminal_cost_q) qt.push_back(matrix_to_json(m));
    doc["Q_terminal"] = std::move(qt);
    doc["R"] = per_player(spec.input_cost_r);
    doc["S"] = per_player(spec.opponent_cost_s);
    json m = json::array();
    for (size_t i = 0; i < robustness.penalty.size(); ++i) {
        if (!robustness.penalty[i])
            m.push_back("inf");
        else
            m.push_back(stage_matrices_to_json(*robustness.penalty[i]));
    }
    doc["M"] = std::move(m);
    return doc;
}

}  // namespace srlq
