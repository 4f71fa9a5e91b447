#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "dirac/run.hpp"
#include "dirac/table.hpp"

using namespace dirac;
using namespace dirac::cli;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream out;
    out << file.rdbuf();
    return out.str();
}

int run_binary(const std::string& args) {
    const std::string command =
        std::string(DIRAC_ANTIDOT_BIN) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("to_csv: golden fixture is byte-exact") {
    Table table;
    table.columns = {"n", "chi", "eta"};
    table.rows = {{0.0, 1.4142135623730951, 0.5}};
    CHECK(to_csv(table) == "n,chi,eta\n0,1.4142135623730951,0.5\n");
}

TEST_CASE("to_csv: empty record set is header-only") {
    Table table;
    table.columns = {"m", "energy"};
    CHECK(to_csv(table) == "m,energy\n");
}

TEST_CASE("to_csv: non-finite cells are rejected before write") {
    Table table;
    table.columns = {"x"};
    table.rows = {{std::nan("")}};
    CHECK_THROWS_AS(to_csv(table), std::invalid_argument);
    table.rows = {{1.0 / 0.0}};
    CHECK_THROWS_AS(to_csv(table), std::invalid_argument);
}

TEST_CASE("csv round-trip: parse(to_csv(x)) == x") {
    Table table;
    table.columns = {"m", "value", "tiny"};
    table.rows = {{-20.0, 10.903124237432849, 1.2345678901234567e-117},
                  {7.0, -0.3333333333333333, 4.9406564584124654e-324},
                  {0.0, 1.7976931348623157e308, -5.5e-1}};
    const Table round = parse_csv(to_csv(table));
    REQUIRE(round.columns == table.columns);
    REQUIRE(round.rows.size() == table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            CHECK(round.rows[r][c] == table.rows[r][c]);

    CHECK_THROWS_AS(parse_csv("a,b\n1,2,3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("a,b\n1,zap\n"), std::invalid_argument);
}

TEST_CASE("json mirrors the csv schema") {
    Table table;
    table.columns = {"m", "energy"};
    table.rows = {{-2.0, 0.5}, {3.0, 10.903124237432849}};
    const auto parsed = nlohmann::json::parse(to_json(table));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["m"].get<double>() == -2.0);
    CHECK(parsed[0]["energy"].get<double>() == 0.5);
    CHECK(parsed[1]["energy"].get<double>() == 10.903124237432849);
}

TEST_CASE("make_figure1: paper-parameter properties") {
    const Table table = make_figure1(8.0, 10.0, 0, {-20, 5});
    REQUIRE(table.columns == std::vector<std::string>{"m", "landau", "shifted", "antidot"});
    REQUIRE(table.rows.size() == 26);
    double previous = -1.0;
    for (const auto& row : table.rows) {
        const double m = row[0];
        if (m <= 0.0)
            CHECK(row[1] == doctest::Approx(0.5).epsilon(1e-14));
        if (m <= -8.0)
            CHECK(row[2] == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(row[3] > previous);
        previous = row[3];
    }
}

TEST_CASE("make_spectrum_table: landau ground row") {
    const auto cfg = params::dimensionless_from_alpha_b_w(0.0, 0.0, 1.0);
    const Table table =
        make_spectrum_table(cfg, {0, 0}, {0, 0}, spectrum::Regime::landau);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0][2] == 0.5);
}

TEST_CASE("make_verify_quantization: benchmark rows") {
    const Table table = make_verify_quantization(0.0625, 0.9375, 2);
    REQUIRE(table.rows.size() == 3);
    for (const auto& row : table.rows)
        CHECK(row[3] <= 1e-5);
}

TEST_CASE("make_figure2: degeneracy splitting in eta") {
    const Table table = make_figure2(8.0, 10.0, 1.0, 0, {-10, 2});
    double previous_full = -1.0;
    for (const auto& row : table.rows) {
        // the landau branch (alpha = 0, b = 0) stays flat for m <= 0, the
        // full branch splits strictly
        if (row[0] <= 0.0)
            CHECK(row[1] == doctest::Approx(table.rows[0][1]).epsilon(1e-12));
        CHECK(row[2] > previous_full);
        previous_full = row[2];
    }
}

TEST_CASE("run: deterministic bytes across runs and thread caps") {
    RunConfig config;
    config.command = Command::spectrum;
    config.regime = spectrum::Regime::relativistic;
    config.dimensionless = DimensionlessParams{8.0, 10.0, 1.0};
    config.n_range = {0, 2};
    config.m_range = {-30, 30};
    config.out_path = "cli_determinism_a.csv";

    setenv("DIRAC_ANTIDOT_THREADS", "1", 1);
    REQUIRE(run(config) == exit_ok);
    config.out_path = "cli_determinism_b.csv";
    setenv("DIRAC_ANTIDOT_THREADS", "4", 1);
    REQUIRE(run(config) == exit_ok);
    unsetenv("DIRAC_ANTIDOT_THREADS");

    CHECK(slurp("cli_determinism_a.csv") == slurp("cli_determinism_b.csv"));
}

TEST_CASE("run: exactly one parameter block is enforced") {
    RunConfig config;
    config.command = Command::spectrum;
    config.regime = spectrum::Regime::relativistic;
    config.n_range = {0, 0};
    config.m_range = {0, 0};
    CHECK(run(config) == exit_domain); // neither block present

    config.dimensionless = DimensionlessParams{0.0, 0.0, 1.0};
    config.physical = params::PhysicalConfig{};
    CHECK(run(config) == exit_domain); // both present
}

TEST_CASE("binary: exit codes") {
    CHECK(run_binary("bogus-subcommand") == exit_usage);
    CHECK(run_binary("spectrum --regime nonsense --n 0 --m 0") == exit_usage);
    CHECK(run_binary("density --alpha 1 --n 0 --m 0 --grid 0.1:20:50") ==
          exit_usage); // missing required --w
    CHECK(run_binary("spectrum --regime rel --w -1 --n 0 --m 0") == exit_domain);
    CHECK(run_binary("spectrum --regime landau --n 0 --m 0") == exit_ok);
    CHECK(run_binary("spectrum --regime rel --w 1 --n 0:1 --m -2:2 --out "
                     "cli_exit_probe.csv") == exit_ok);
    CHECK(run_binary("figure1 --alpha 8 --b 10 --m-range -20:5 --out "
                     "/nonexistent-dir/foo.csv") == exit_io);
}

TEST_CASE("binary: figure1 artifact parses and satisfies its properties") {
    REQUIRE(run_binary("figure1 --alpha 8 --b 10 --m-range -20:5 --out "
                       "cli_figure1.csv") == exit_ok);
    const Table table = parse_csv(slurp("cli_figure1.csv"));
    REQUIRE(table.columns ==
            std::vector<std::string>{"m", "landau", "shifted", "antidot"});
    REQUIRE(table.rows.size() == 26);
    for (const auto& row : table.rows)
        if (row[0] <= 0.0)
            CHECK(row[1] == 0.5);
}

TEST_CASE("binary: density and figure3 artifacts") {
    REQUIRE(run_binary("density --alpha 8 --b 10 --w 1 --n 0 --m 0 "
                       "--grid 0.01:16:400 --out cli_density.csv") == exit_ok);
    const Table density = parse_csv(slurp("cli_density.csv"));
    REQUIRE(density.columns ==
            std::vector<std::string>{"rho", "upper", "lower", "density"});
    REQUIRE(density.rows.size() == 400);
    for (const auto& row : density.rows)
        CHECK(row[3] >= 0.0);

    REQUIRE(run_binary("density --alpha 8 --b 10 --w 1 --n 0 --m 0 "
                       "--include-lower false --grid 0.01:16:400 --out "
                       "cli_density_upper.csv") == exit_ok);
    const Table upper_only = parse_csv(slurp("cli_density_upper.csv"));
    REQUIRE(upper_only.columns ==
            std::vector<std::string>{"rho", "upper", "density"});

    REQUIRE(run_binary("figure3 --alpha 8 --b 10 --w 1 --n 0 --m 0 "
                       "--grid 0.01:16:400 --out cli_figure3.csv") == exit_ok);
    const Table figure3 = parse_csv(slurp("cli_figure3.csv"));
    REQUIRE(figure3.columns ==
            std::vector<std::string>{"rho", "density_free", "density_antidot"});
    // the antidot curve turns on later than the free one
    double onset_free = 0.0, onset_antidot = 0.0;
    double peak_free = 0.0, peak_antidot = 0.0;
    for (const auto& row : figure3.rows) {
        peak_free = std::max(peak_free, row[1]);
        peak_antidot = std::max(peak_antidot, row[2]);
    }
    for (const auto& row : figure3.rows) {
        if (onset_free == 0.0 && row[1] > 0.01 * peak_free)
            onset_free = row[0];
        if (onset_antidot == 0.0 && row[2] > 0.01 * peak_antidot)
            onset_antidot = row[0];
    }
    CHECK(onset_antidot > onset_free);
}

TEST_CASE("binary: verify in both modes, plus json output") {
    REQUIRE(run_binary("verify --lambda1 0.0625 --lambda3 0.9375 --n-max 2 "
                       "--out cli_verify_quant.csv") == exit_ok);
    const Table quant = parse_csv(slurp("cli_verify_quant.csv"));
    REQUIRE(quant.columns ==
            std::vector<std::string>{"n", "numeric", "analytic", "relative_error"});
    for (const auto& row : quant.rows)
        CHECK(row[3] <= 1e-5);

    REQUIRE(run_binary("verify --alpha 0 --b 10 --w 1 --n 0 --m 0 --out "
                       "cli_verify_rel.csv") == exit_ok);
    const Table rel = parse_csv(slurp("cli_verify_rel.csv"));
    REQUIRE(rel.columns == std::vector<std::string>{"n", "m", "chi_claimed",
                                                    "chi_numeric", "defect",
                                                    "iterations"});
    REQUIRE(rel.rows.size() == 1);
    CHECK(rel.rows[0][4] <= 1e-4);

    REQUIRE(run_binary("spectrum --regime landau --n 0 --m -2:0 --format json "
                       "--out cli_landau.json") == exit_ok);
    const std::string json_text = slurp("cli_landau.json");
    CHECK(json_text.find("\"energy\": 0.5") != std::string::npos);
    CHECK(json_text.find("\"m\": -2.0") != std::string::npos);
}
