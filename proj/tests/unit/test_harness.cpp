#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "twoclub/errors.hpp"
#include "twoclub/graph_io.hpp"
#include "twoclub/harness.hpp"
#include "twoclub/reduction.hpp"
#include "twoclub/report.hpp"

using namespace twoclub;
namespace fs = std::filesystem;

namespace {

const EquivalenceRow &row_for(const SweepReport &r, std::uint64_t h_id, std::int64_t k) {
    for (const auto &row : r.rows) {
        if (row.h_id == h_id && row.k == k) {
            return row;
        }
    }
    throw std::runtime_error("row not found");
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("twoclub_test_" + std::to_string(::getpid()));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string &name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

int run_cli(const std::string &args) {
    const std::string cmd = std::string(TWOCLUB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

void write(const std::string &path, const std::string &text) { std::ofstream(path, std::ios::binary) << text; }

} // namespace

TEST_CASE("labeled graph masks") {
    CHECK(graph_from_mask(3, 0b101).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        CHECK(mask_of(graph_from_mask(4, mask)) == mask);
        CHECK(graph_from_mask(4, mask) == oracle::labeled_graph(4, mask));
    }
    CHECK_THROWS_AS(graph_from_mask(12, 0), TooLarge);
}

TEST_CASE("sweep with the brute-force engine at n = 2") {
    SweepOptions options;
    options.engine = Engine::Brute;
    const SweepReport r = run_equivalence_sweep(2, options);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.ok());

    const EquivalenceRow &k2 = row_for(r, 1, 2);
    CHECK(k2.clique_yes);
    CHECK(k2.max_2club == 18);
    CHECK(k2.target == 18);
    CHECK(k2.agree);

    const EquivalenceRow &empty = row_for(r, 0, 2);
    CHECK_FALSE(empty.clique_yes);
    CHECK(empty.max_2club == 15);
    CHECK(empty.max_2club == target_size(2, 1));
    CHECK_FALSE(empty.club_yes);
    CHECK(empty.agree);

    for (std::size_t i = 1; i < r.rows.size(); ++i) {
        CHECK(std::make_pair(r.rows[i - 1].h_id, r.rows[i - 1].k) < std::make_pair(r.rows[i].h_id, r.rows[i].k));
    }
}

TEST_CASE("sweep with the branching engine at n = 3") {
    const SweepReport r = run_equivalence_sweep(3, {});
    REQUIRE(r.rows.size() == 24);
    CHECK(r.ok());
    CHECK(row_for(r, 7, 3).max_2club == 47);
    CHECK(row_for(r, 0, 1).max_2club == 39);
    CHECK(row_for(r, 1, 3).max_2club == 43);
    CHECK_FALSE(row_for(r, 1, 3).club_yes);

    SUBCASE("thread count does not change rows") {
        SweepOptions options;
        options.threads = 4;
        const SweepReport parallel = run_equivalence_sweep(3, options);
        REQUIRE(parallel.rows.size() == r.rows.size());
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            CHECK(to_json(parallel.rows[i]) == to_json(r.rows[i]));
        }
    }
}

TEST_CASE("sweep guards, k outside [1, n] and the failure hook") {
    CHECK_THROWS_AS(run_equivalence_sweep(4, {}), TooLarge);
    SweepOptions brute;
    brute.engine = Engine::Brute;
    CHECK_THROWS_AS(run_equivalence_sweep(3, brute), TooLarge);

    SweepOptions wide;
    wide.k_min = 0;
    wide.k_max = 4;
    const SweepReport r = run_equivalence_sweep(3, wide);
    CHECK(r.rows.size() == 8 * 5);
    CHECK(r.ok());
    CHECK(row_for(r, 7, 0).clique_yes);
    CHECK(row_for(r, 7, 0).club_yes);
    CHECK_FALSE(row_for(r, 7, 4).clique_yes);
    CHECK_FALSE(row_for(r, 7, 4).club_yes);

    SweepOptions broken;
    broken.target_offset = 1;
    CHECK_FALSE(run_equivalence_sweep(2, broken).ok());
}

TEST_CASE("run_verify") {
    const Graph p3 = graph_from_mask(3, 0b101);
    for (std::int64_t k = -1; k <= 5; ++k) {
        const VerifyReport r = run_verify(p3, k);
        CHECK(r.ok());
        CHECK(r.certificate_ok);
        CHECK(r.clique_yes == (k <= 2));
    }
    const VerifyReport r = run_verify(p3, 2);
    CHECK(r.omega == 2);
    CHECK(r.target == 43);
    CHECK(r.forward_set.size() == 43);
    CHECK(r.forward_ok);
    CHECK(r.club_yes);
}

TEST_CASE("oracle check") {
    const OracleCheckReport exhaustive = run_oracle_check_exhaustive(4, {1, 2, 3}, 2);
    CHECK(exhaustive.graphs == 64);
    CHECK(exhaustive.mismatches == 0);
    CHECK(exhaustive.comparisons == 64 * 5);

    const OracleCheckReport random = run_oracle_check_random(30, 5, 12, 9, {2}, 1);
    CHECK(random.graphs == 30);
    CHECK(random.mismatches == 0);
    CHECK(run_oracle_check_random(30, 5, 12, 9, {2}, 3).stats.nodes_explored == random.stats.nodes_explored);
}

TEST_CASE("report schema") {
    const SweepReport r = run_equivalence_sweep(2, {});
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : r.rows) {
        rows.push_back(to_json(row));
    }
    const nlohmann::json report = make_report("sweep", rows, {{13, 12}}, r.stats, false);
    CHECK(report["command"] == "sweep");
    CHECK(report["rows"].size() == 4);
    CHECK(report["certificates"] == nlohmann::json::parse("[[12, 13]]"));
    CHECK(report["stats"]["elapsed_ms"] == 0.0);
    CHECK(report["stats"].contains("nodes_explored"));
    for (const char *key : {"h_id", "n", "k", "omega", "target", "max_2club", "clique_yes", "club_yes", "agree"}) {
        CHECK(report["rows"][0].contains(key));
    }
}

TEST_CASE("cli") {
    TempDir dir;
    const std::string h = dir.file("h.col");
    write(h, "c path on three vertices\np edge 3 2\ne 1 2\ne 2 3\n");

    SUBCASE("reduce writes the gadget and the role sidecar") {
        REQUIRE(run_cli("reduce --in " + h + " --out " + dir.file("g.col") + " --roles " + dir.file("g.roles")) == 0);
        const Graph g = read_graph_file(dir.file("g.col"));
        CHECK(g.num_vertices() == 48);
        CHECK(g.num_edges() == 2 + 81 + 36 + 1);
        CHECK(slurp(dir.file("g.roles")) == emit_roles(GadgetLayout(3)));

        REQUIRE(run_cli("reduce --in " + h + " --out " + dir.file("g.txt") + " --format edgelist") == 0);
        CHECK(read_graph_file(dir.file("g.txt")) == g);
    }
    SUBCASE("verify, sweep and solvers succeed") {
        CHECK(run_cli("verify --in " + h + " --k 2") == 0);
        CHECK(run_cli("verify --in " + h + " --k 4") == 0);
        CHECK(run_cli("sweep --n 2 --engine brute") == 0);
        CHECK(run_cli("solve-clique --in " + h) == 0);
        CHECK(run_cli("solve-2club --in " + h + " --s 1") == 0);
        CHECK(run_cli("distance --in " + h + " --s 1 --dmax 1") == 0);
        CHECK(run_cli("oracle-check --exhaustive 4") == 0);
        CHECK(run_cli("oracle-check --count 5 --min-n 4 --max-n 8 --seed 3 --s 1,2") == 0);
    }
    SUBCASE("an off-by-one target makes sweep fail") {
        CHECK(run_cli("sweep --n 2 --engine brute --target-offset 1") == 1);
        // Consecutive targets differ by n + 1, so only a shift of that size
        // lets an omega = k - 1 gadget reach the k target.
        CHECK(run_cli("sweep --n 3 --target-offset -3") == 0);
        CHECK(run_cli("sweep --n 3 --target-offset -4") == 1);
    }
    SUBCASE("usage and input errors") {
        CHECK(run_cli("frobnicate") == 2);
        CHECK(run_cli("sweep --n 2 --bogus") == 2);
        CHECK(run_cli("sweep --n 4") == 2);
        CHECK(run_cli("verify --in " + dir.file("missing.col") + " --k 1") == 2);
        write(dir.file("bad.col"), "p edge 3 5\ne 1 2\n");
        CHECK(run_cli("solve-clique --in " + dir.file("bad.col")) == 2);
    }
    SUBCASE("reports are byte-identical without timing") {
        const std::string args = "sweep --n 3 --no-timing --json ";
        REQUIRE(run_cli(args + dir.file("a.json")) == 0);
        REQUIRE(run_cli(args + dir.file("b.json")) == 0);
        CHECK(slurp(dir.file("a.json")) == slurp(dir.file("b.json")));
        const auto report = nlohmann::json::parse(slurp(dir.file("a.json")));
        CHECK(report["rows"].size() == 24);

        REQUIRE(run_cli("distance --in " + h + " --dmax 1 --json " + dir.file("d.json")) == 0);
        const auto distance = nlohmann::json::parse(slurp(dir.file("d.json")));
        CHECK(distance["command"] == "distance");
        CHECK(distance["certificates"] == nlohmann::json::parse("[[]]"));
    }
}
