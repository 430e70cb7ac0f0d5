#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli_app.hpp"

namespace {

namespace fs = std::filesystem;

int run_cli(std::initializer_list<const char*> args) {
    std::vector<const char*> argv{"srlq"};
    argv.insert(argv.end(), args.begin(), args.end());
    return srlq::cli::run(static_cast<int>(argv.size()), argv.data());
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str(const std::string& sub = "") const {
        return sub.empty() ? path.string() : (path / sub).string();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("dump-spec then solve round trip") {
    TempDir dir("srlq_cli_roundtrip");
    CHECK(run_cli({"dump-spec", "collaborative", "--out", dir.str().c_str()}) == 0);
    const std::string spec = dir.str("collaborative.json");
    REQUIRE(fs::exists(spec));

    CHECK(run_cli({"solve", "--spec", spec.c_str(), "--out", dir.str().c_str(), "--m", "1=1.2"}) ==
          0);
    const std::string solution = dir.str("solution.json");
    REQUIRE(fs::exists(solution));
    nlohmann::json doc;
    std::ifstream(solution) >> doc;
    CHECK(doc.at("K").size() == 3);
    CHECK(doc.at("K")[0].size() == 2);
    CHECK(doc.at("P").size() == 4);
    CHECK(doc.at("conditions").size() == 3);
}

TEST_CASE("rollout writes a trajectory") {
    TempDir dir("srlq_cli_rollout");
    REQUIRE(run_cli({"dump-spec", "collaborative", "--out", dir.str().c_str()}) == 0);
    const std::string spec = dir.str("collaborative.json");
    CHECK(run_cli({"rollout", "--spec", spec.c_str(), "--out", dir.str().c_str()}) == 0);
    CHECK(fs::exists(dir.str("trajectory.csv")));
}

TEST_CASE("exit code 2 on validation and parse failures") {
    TempDir dir("srlq_cli_validation");
    {
        std::ofstream bad(dir.str("broken.json"));
        bad << "{ not json";
    }
    CHECK(run_cli({"solve", "--spec", dir.str("broken.json").c_str(), "--out",
                   dir.str().c_str()}) == 2);

    // structurally fine, semantically invalid: R = 0
    REQUIRE(run_cli({"dump-spec", "collaborative", "--out", dir.str().c_str()}) == 0);
    nlohmann::json doc;
    std::ifstream(dir.str("collaborative.json")) >> doc;
    doc["R"][0] = nlohmann::json::parse("[[0.0]]");
    {
        std::ofstream out(dir.str("invalid.json"));
        out << doc.dump();
    }
    CHECK(run_cli({"solve", "--spec", dir.str("invalid.json").c_str(), "--out",
                   dir.str().c_str()}) == 2);

    CHECK(run_cli({"reproduce", "does-not-exist", "--out", dir.str().c_str()}) == 2);
    CHECK(run_cli({"solve", "--spec", dir.str("collaborative.json").c_str(), "--m", "7=1.0",
                   "--out", dir.str().c_str()}) == 2);
}

TEST_CASE("exit code 3 when the solver fails") {
    TempDir dir("srlq_cli_solver");
    REQUIRE(run_cli({"dump-spec", "collaborative", "--out", dir.str().c_str()}) == 0);
    const std::string spec = dir.str("collaborative.json");
    // far beyond the existence boundary
    CHECK(run_cli({"solve", "--spec", spec.c_str(), "--out", dir.str().c_str(), "--m", "1=0.2",
                   "--m", "2=0.2"}) == 3);
}

TEST_CASE("exit code 4 on unwritable output") {
    TempDir dir("srlq_cli_io");
    REQUIRE(run_cli({"dump-spec", "collaborative", "--out", dir.str().c_str()}) == 0);
    const std::string spec = dir.str("collaborative.json");
    CHECK(run_cli({"solve", "--spec", spec.c_str(), "--out", "/dev/null/nope"}) == 4);
}

TEST_CASE("reproduce targets write their documented files") {
    TempDir dir("srlq_cli_repro");
    CHECK(run_cli({"reproduce", "motivating", "--out", dir.str().c_str()}) == 0);
    CHECK(fs::exists(dir.str("motivating.csv")));
    CHECK(fs::exists(dir.str("motivating_meta.json")));

    CHECK(run_cli({"reproduce", "network-scenarios", "--out", dir.str().c_str()}) == 0);
    CHECK(fs::exists(dir.str("table2_network.csv")));

    CHECK(run_cli({"reproduce", "collab-mc", "--out", dir.str().c_str(), "--samples", "2000",
                   "--seed", "3"}) == 0);
    CHECK(fs::exists(dir.str("table1.csv")));

    CHECK(run_cli({"reproduce", "collab-adversarial", "--out", dir.str().c_str(), "--grid",
                   "0:2:0.5"}) == 0);
    CHECK(fs::exists(dir.str("fig1_adversarial.csv")));

    CHECK(run_cli({"reproduce", "collab-social", "--out", dir.str().c_str(), "--grid",
                   "0:1:0.1"}) == 0);
    CHECK(fs::exists(dir.str("fig2_social_collab.csv")));

    CHECK(run_cli({"reproduce", "network-social", "--out", dir.str().c_str(), "--grid",
                   "0:8:1.0"}) == 0);
    CHECK(fs::exists(dir.str("fig4_social_network.csv")));

    // --scenario spelling works too
    CHECK(run_cli({"reproduce", "--scenario", "motivating", "--out", dir.str().c_str()}) == 0);
}

TEST_CASE("outputs are byte-identical across reruns with the same arguments") {
    TempDir a("srlq_cli_bytes_a");
    TempDir b("srlq_cli_bytes_b");
    REQUIRE(run_cli({"reproduce", "collab-mc", "--out", a.str().c_str(), "--samples", "2000",
                     "--seed", "9"}) == 0);
    REQUIRE(run_cli({"reproduce", "collab-mc", "--out", b.str().c_str(), "--samples", "2000",
                     "--seed", "9"}) == 0);
    CHECK(slurp(a.str("table1.csv")) == slurp(b.str("table1.csv")));
    CHECK(slurp(a.str("table1_meta.json")) == slurp(b.str("table1_meta.json")));

    REQUIRE(run_cli({"reproduce", "motivating", "--out", a.str().c_str()}) == 0);
    REQUIRE(run_cli({"reproduce", "motivating", "--out", b.str().c_str()}) == 0);
    CHECK(slurp(a.str("motivating.csv")) == slurp(b.str("motivating.csv")));
}

TEST_CASE("sweep and mc subcommands run on a spec file") {
    TempDir dir("srlq_cli_sweep");
    REQUIRE(run_cli({"dump-spec", "collaborative", "--out", dir.str().c_str()}) == 0);
    const std::string spec = dir.str("collaborative.json");
    CHECK(run_cli({"sweep", "--spec", spec.c_str(), "--mode", "all", "--grid", "0:1:0.25",
                   "--out", dir.str().c_str()}) == 0);
    CHECK(fs::exists(dir.str("sweep_all.csv")));
    CHECK(run_cli({"mc", "--spec", spec.c_str(), "--samples", "1000", "--out",
                   dir.str().c_str()}) == 0);
    CHECK(fs::exists(dir.str("table1.csv")));
}
