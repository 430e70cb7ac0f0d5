#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "oracles.hpp"
#include "srlq/experiments.hpp"
#include "srlq/philox.hpp"
#include "srlq/simulate.hpp"

using namespace srlq;

namespace {

GameSpec collaborative() { return build_two_player_scalar_game(1.0, 3); }

EquilibriumSolution robust_solution(const GameSpec& spec, double m) {
    return solve_strategically_robust(spec,
                                      RobustnessConfig::scaled_identity(spec, {m, std::nullopt}));
}

}  // namespace

TEST_CASE("percentile uses linear interpolation on the sorted sample") {
    std::vector<double> one_to_hundred;
    for (int i = 1; i <= 100; ++i) one_to_hundred.push_back(i);
    CHECK(percentile(one_to_hundred, 0.5) == doctest::Approx(50.5));
    CHECK(percentile({7.0}, 0.0) == doctest::Approx(7.0));
    CHECK(percentile({7.0}, 0.77) == doctest::Approx(7.0));
    CHECK(percentile({0.0, 10.0}, 0.95) == doctest::Approx(9.5));
    CHECK(percentile({3.0, 1.0, 2.0}, 1.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(percentile({}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(percentile({1.0}, 1.5), std::invalid_argument);
}

TEST_CASE("monte carlo bias study is deterministic and seed-sensitive") {
    const GameSpec spec = collaborative();
    const auto nash = solve_nash(spec);
    const auto robust = robust_solution(spec, 1.2);
    const auto a = monte_carlo_bias(spec, nash, robust, 500, 11);
    const auto b = monte_carlo_bias(spec, nash, robust, 500, 11);
    CHECK(a.rows == b.rows);
    const auto c = monte_carlo_bias(spec, nash, robust, 500, 12);
    CHECK(a.rows != c.rows);
    REQUIRE(a.rows.size() == 5);
    CHECK(a.columns == std::vector<std::string>{"percentile", "ne_cost", "sr_cost"});
}

TEST_CASE("forcing the bias to zero collapses the distribution") {
    const GameSpec spec = collaborative();
    const auto nash = solve_nash(spec);
    const auto robust = robust_solution(spec, 1.2);
    MonteCarloOptions options;
    options.forced_bias = 0.0;
    const auto result = monte_carlo_bias(spec, nash, robust, 200, 1, options);

    const Policy p2 = linear_policy(1, nash.player_gains_k[1]);
    const double ne_cost =
        rollout(spec, {linear_policy(0, nash.player_gains_k[0]), p2}).per_player_costs[0];
    const double sr_cost =
        rollout(spec, {linear_policy(0, robust.player_gains_k[0]), p2}).per_player_costs[0];
    for (const auto& row : result.rows) {
        CHECK(row[1] == doctest::Approx(ne_cost).epsilon(1e-12));
        CHECK(row[2] == doctest::Approx(sr_cost).epsilon(1e-12));
    }
}

TEST_CASE("sampled percentiles sit inside the exact quantile oracle bands") {
    const GameSpec spec = collaborative();
    const auto nash = solve_nash(spec);
    const auto robust = robust_solution(spec, 1.2);
    const int n = 20000;
    const auto result = monte_carlo_bias(spec, nash, robust, n, 7);

    // The cost is exactly quadratic in the bias; fit it from three rollouts.
    const Policy p2 = linear_policy(1, nash.player_gains_k[1]);
    auto cost_at = [&](const std::vector<std::vector<Matrix>>& k1, double b) {
        return rollout(spec, {linear_policy(0, k1[0]), biased_policy(p2, {b})})
            .per_player_costs[0];
    };
    for (int column = 1; column <= 2; ++column) {
        const auto& gains = column == 1 ? nash.player_gains_k : robust.player_gains_k;
        const auto fit =
            test::QuadraticBiasCost::fit(cost_at(gains, -1.0), cost_at(gains, 0.0),
                                         cost_at(gains, 1.0));
        for (const auto& row : result.rows) {
            const double q = row[0] / 100.0;
            const double exact = fit.quantile(q);
            const double band = 3.0 * fit.quantile_standard_error(q, n);
            CHECK(std::abs(row[static_cast<size_t>(column)] - exact) <= band);
        }
    }
}

TEST_CASE("adversarial budget sweep reproduces the expected curve shapes") {
    const GameSpec spec = collaborative();
    std::vector<double> budgets;
    for (double c = 0.0; c <= 2.0001; c += 0.1) budgets.push_back(c);
    const auto result =
        adversarial_budget_sweep(spec, {std::nullopt, 1.2, 1.4, 2.5}, budgets, 1.2);
    REQUIRE(result.columns.size() == 5);
    CHECK(result.columns[1] == "cost_ne");
    CHECK(result.columns[2] == "cost_m1.2");

    // at c = 0 every curve is its unperturbed cost and Nash is the smallest
    const auto& first = result.rows.front();
    for (size_t j = 2; j < first.size(); ++j) CHECK(first[1] < first[j]);

    // curves never decrease in the budget
    for (size_t j = 1; j < result.columns.size(); ++j)
        for (size_t r = 1; r < result.rows.size(); ++r)
            CHECK(result.rows[r][j] >= result.rows[r - 1][j] - 1e-12);

    // at the largest budget the Nash curve dominates every robust curve
    const auto& last = result.rows.back();
    for (size_t j = 2; j < last.size(); ++j) CHECK(last[1] > last[j]);
}

TEST_CASE("social cost sweep endpoints and failure bookkeeping") {
    const GameSpec spec = collaborative();
    std::vector<double> grid{0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 1.1, 1.2};
    const auto result = social_cost_sweep(spec, SweepMode::AllRobust, grid);
    REQUIRE(result.rows.size() == grid.size());

    // s = 0 equals the independently computed Nash social cost
    const auto nash = solve_nash(spec);
    const auto traj = rollout(spec, {linear_policy(0, nash.player_gains_k[0]),
                                     linear_policy(1, nash.player_gains_k[1])});
    CHECK(result.rows[0][1] == doctest::Approx(traj.social_cost).epsilon(1e-12));
    CHECK(result.rows[0][2] == 1.0);

    // points beyond the boundary (inverse penalty > 1) are recorded, not fatal
    CHECK(result.rows[6][2] == 0.0);
    CHECK(std::isnan(result.rows[6][1]));
    CHECK(result.rows[7][2] == 0.0);
    CHECK(result.metadata.at("first_failure_inv_m").get<double>() == doctest::Approx(1.1));
    CHECK(result.metadata.at("social_optimum").get<double>() ==
          doctest::Approx(2.0 / 13.0).epsilon(1e-9));
    CHECK(result.metadata.at("boundary_inv_m").get<double>() ==
          doctest::Approx(1.0).epsilon(2e-4));
}

TEST_CASE("network scenario table matches the reference values") {
    const GameSpec star = build_star_network_game(5, 20, 5.0);
    const auto result = network_scenarios(star, 0.16);
    REQUIRE(result.rows.size() == 4);
    REQUIRE(result.row_labels ==
            std::vector<std::string>{"NE", "SR", "NE_adv", "SR_adv"});

    // Frozen reference values for the default finite-pin convention.
    CHECK(result.rows[0][0] == doctest::Approx(4.316838532620).epsilon(1e-9));
    CHECK(result.rows[0][1] == doctest::Approx(2.389636158891).epsilon(1e-9));
    CHECK(result.rows[1][0] == doctest::Approx(4.769494770652).epsilon(1e-9));
    CHECK(result.rows[1][1] == doctest::Approx(6.231041078182).epsilon(1e-9));
    CHECK(result.rows[2][0] == doctest::Approx(2.241569620155).epsilon(1e-9));
    CHECK(result.rows[2][1] == doctest::Approx(25.998708203865).epsilon(1e-9));
    CHECK(result.rows[3][0] == doctest::Approx(4.010568553553).epsilon(1e-9));
    CHECK(result.rows[3][1] == doctest::Approx(14.806895511302).epsilon(1e-9));
}

TEST_CASE("network scenarios with exact elimination of non-robust players") {
    const GameSpec star = build_star_network_game(5, 20, 5.0);
    NetworkScenarioOptions options;
    options.nonrobust_pin = std::nullopt;
    const auto result = network_scenarios(star, 0.16, options);
    CHECK(result.rows[0][0] == doctest::Approx(4.316233088829).epsilon(1e-9));
    CHECK(result.rows[0][1] == doctest::Approx(2.392029208743).epsilon(1e-9));
    CHECK(result.rows[1][0] == doctest::Approx(4.769921013535).epsilon(1e-9));
}

TEST_CASE("an infinite center penalty degenerates the robust scenarios") {
    const GameSpec star = build_star_network_game(5, 10, 5.0);
    const auto result = network_scenarios(star, std::nullopt);
    CHECK(result.rows[0] == result.rows[1]);
    CHECK(result.rows[2] == result.rows[3]);
}

TEST_CASE("csv and metadata writers emit the documented layout") {
    ExperimentResult result;
    result.name = "unit";
    result.columns = {"a", "b"};
    result.row_labels = {"r1", "r2"};
    result.rows = {{1.0, 2.5}, {std::nan(""), 4.0}};
    result.metadata["note"] = 42;

    namespace fs = std::filesystem;
    const auto csv_path = fs::temp_directory_path() / "srlq_experiment_test.csv";
    const auto meta_path = fs::temp_directory_path() / "srlq_experiment_test.json";
    write_csv(result, csv_path.string());
    write_metadata_json(result, meta_path.string());

    std::ifstream in(csv_path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "scenario,a,b");
    std::getline(in, line);
    CHECK(line == "r1,1,2.5");
    std::getline(in, line);
    CHECK(line == "r2,nan,4");

    std::ifstream meta(meta_path);
    nlohmann::json doc;
    meta >> doc;
    CHECK(doc.at("name") == "unit");
    CHECK(doc.at("note") == 42);
    fs::remove(csv_path);
    fs::remove(meta_path);
}
