#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cqed/errors.hpp"
#include "cqed/experiments/config.hpp"
#include "cqed/experiments/csv.hpp"
#include "cqed/experiments/knee.hpp"
#include "cqed/experiments/scenario.hpp"

using namespace cqed;
using namespace cqed::experiments;

namespace {

const std::vector<Scenario> kAllScenarios = {Scenario::Fig1, Scenario::Fig2, Scenario::Fig3,
                                             Scenario::Fig5, Scenario::Fig6, Scenario::Custom};

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("cqed_test_" + name);
}

ScenarioConfig small_custom(int count = 3)
{
    ScenarioConfig c = ScenarioConfig::defaults(Scenario::Custom);
    c.sweep = {"j1", 0.1, 0.5, count};
    return c;
}

} // namespace

TEST_CASE("config text round trip reproduces defaults")
{
    for (auto s : kAllScenarios) {
        CAPTURE(to_string(s));
        const ScenarioConfig defaults = ScenarioConfig::defaults(s);
        CHECK_NOTHROW(defaults.validate());
        const auto path = temp_path("roundtrip.cfg");
        write_config(defaults, path);
        const ScenarioConfig back = read_config(path);
        CHECK(format_config(back) == format_config(defaults));
        CHECK(back.params.g == defaults.params.g);
        CHECK(back.params.nu_c == defaults.params.nu_c);
        CHECK(back.series == defaults.series);
        CHECK(back.sweep.count == defaults.sweep.count);
        std::filesystem::remove(path);
    }
}

TEST_CASE("config parsing")
{
    const auto c = parse_config("# comment\nscenario = fig5\n j1 = 2.5  \nseries = 1, 2.5\nz_epsilon = 1e-4\n");
    CHECK(c.scenario == Scenario::Fig5);
    CHECK(c.params.j1 == 2.5);
    CHECK(c.series == std::vector<double>{1.0, 2.5});
    REQUIRE(c.params.cf.z_epsilon.has_value());
    CHECK(*c.params.cf.z_epsilon == 1e-4);
    CHECK(c.params.kappa == 17.0); // fig5 default survives

    try {
        parse_config("scenario = fig1\nkapa = 3\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("kapa") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("g = thirty\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("g 30\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("scenario = fig4\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("drive_target = laser\n"), ConfigError);
    CHECK_THROWS_AS(read_config(temp_path("missing.cfg")), ConfigError);
}

TEST_CASE("config validation names the field")
{
    const auto expect_field = [](ScenarioConfig c, const std::string& field) {
        try {
            c.validate();
            FAIL("expected ConfigError for " << field);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find(field) != std::string::npos);
        }
    };
    ScenarioConfig c = small_custom();
    c.sweep.count = 1;
    expect_field(c, "sweep.count");
    c = small_custom();
    c.sweep.variable = "temperature";
    expect_field(c, "sweep.variable");
    c = small_custom();
    c.params.kappa = -2.0;
    expect_field(c, "kappa");
    c = ScenarioConfig::defaults(Scenario::Fig1);
    c.series.clear();
    expect_field(c, "series");
    c = ScenarioConfig::defaults(Scenario::Fig1);
    c.sweep.variable = "delta";
    expect_field(c, "sweep.variable");
}

TEST_CASE("sweep grid reproduces its endpoints")
{
    const SweepSpec spec{"delta", -10.0, 10.0, 201};
    const auto grid = spec.grid();
    REQUIRE(grid.size() == 201);
    CHECK(grid.front() == -10.0);
    CHECK(grid.back() == 10.0);
    CHECK(grid[100] == doctest::Approx(0.0).scale(1.0));
    CHECK(grid[1] - grid[0] == doctest::Approx(0.1));
}

TEST_CASE("CSV output")
{
    const ScenarioConfig config = small_custom();
    const ResultTable table = run_scenario(config);
    CHECK(table.rows.size() == 3);
    CHECK(table.columns == std::vector<std::string>{"j1", "intensity"});

    const std::string text = format_csv(table);
    std::istringstream in(text);
    std::string line;
    int header = 0, data = 0, comments = 0;
    while (std::getline(in, line)) {
        if (line.rfind("#", 0) == 0) ++comments;
        else if (line == "j1,intensity") ++header;
        else ++data;
    }
    CHECK(header == 1);
    CHECK(data == 3);
    CHECK(comments == static_cast<int>(table.provenance.size()));

    SUBCASE("provenance lists every resolved key")
    {
        for (const auto& key : config_keys()) {
            bool found = false;
            for (const auto& p : table.provenance) found = found || p.rfind("config." + key + " = ", 0) == 0;
            CHECK_MESSAGE(found, key);
        }
    }

    SUBCASE("file round trip is exact")
    {
        const auto path = temp_path("table.csv");
        write_csv(table, path);
        const ResultTable back = read_csv(path);
        CHECK(back.columns == table.columns);
        CHECK(back.rows == table.rows);
        CHECK(back.provenance == table.provenance);
        std::filesystem::remove(path);
    }

    CHECK_THROWS_AS(ResultTable{}.column("missing"), InvalidArgument);
}

TEST_CASE("scenario runs are deterministic across threads")
{
    ScenarioConfig config = small_custom(6);
    config.sweep = {"delta", -3.0, 3.0, 6};
    const auto serial = format_csv(run_scenario(config, {1}));
    CHECK(serial == format_csv(run_scenario(config, {1})));
    CHECK(serial == format_csv(run_scenario(config, {3})));
}

TEST_CASE("custom sweeps over probe offsets track the pump")
{
    ScenarioConfig config = ScenarioConfig::defaults(Scenario::Custom);
    config.pump_at_lower_polariton = true;
    config.sweep = {"probe_offset", 29.5, 30.5, 5};
    const auto table = run_scenario(config);
    CHECK(table.rows.size() == 5);
    for (double v : table.column("intensity")) CHECK(v > 0.0);
}

TEST_CASE("lower polariton pump placement")
{
    const ScenarioConfig config = ScenarioConfig::defaults(Scenario::Fig1);
    SystemParams p = config.params;
    p.j1 = 0.1;
    CHECK(lower_polariton_pump(p) == doctest::Approx(-30.05).epsilon(2e-4));
    p.j1 = 3.0;
    CHECK(lower_polariton_pump(p) < lower_polariton_pump(p, true));
}

TEST_CASE("knee detection")
{
    std::vector<KneePoint> hinge;
    for (double x = 1.0; x <= 8.0; x += 0.5) hinge.push_back({x, 2.0 + 0.1 * x + 1.4 * std::max(0.0, x - 5.0)});
    const auto knee = detect_knee(hinge);
    REQUIRE(knee.has_value());
    CHECK(knee->location == doctest::Approx(5.0).epsilon(0.002));
    CHECK(knee->slope_before == doctest::Approx(0.1).epsilon(1e-6));
    CHECK(knee->slope_after == doctest::Approx(1.5).epsilon(1e-6));

    std::vector<KneePoint> line;
    for (double x = 0.0; x < 10.0; x += 1.0) line.push_back({x, 3.0 - 0.7 * x});
    CHECK_FALSE(detect_knee(line).has_value());

    std::vector<KneePoint> bent_line = line;
    bent_line[4].y += 1e-9;
    CHECK_FALSE(detect_knee(bent_line).has_value());

    CHECK_THROWS_AS(detect_knee(std::vector<KneePoint>(5, KneePoint{1.0, 1.0})), InvalidArgument);
}

TEST_CASE("peak asymmetry of a deviation curve")
{
    std::vector<double> x, y;
    for (int i = 0; i <= 200; ++i) {
        const double d = -10.0 + 0.1 * i;
        x.push_back(d);
        y.push_back(1.0 / (1.0 + (d + 4) * (d + 4)) + 1.2 / (1.0 + (d - 4) * (d - 4)));
    }
    const auto a = peak_asymmetry(x, y);
    CHECK(a.right_height > a.left_height);
    CHECK(a.difference == doctest::Approx(a.right_height - a.left_height));
    CHECK(a.excess_ratio == doctest::Approx(a.right_height / a.left_height - 1.0));
    CHECK(a.difference == doctest::Approx(0.2).epsilon(0.02));

    std::vector<double> single;
    for (double d : x) single.push_back(1.0 / (1.0 + d * d));
    CHECK_THROWS_AS(peak_asymmetry(x, single), NoSplitting);
}

TEST_CASE("solver errors carry the sweep point")
{
    ScenarioConfig config = ScenarioConfig::defaults(Scenario::Custom);
    config.params.kappa = 0.0;
    config.params.g = 0.0;
    config.params.drive_target = DriveTarget::QD;
    config.sweep = {"j1", 0.5, 1.0, 2};
    try {
        run_scenario(config);
        FAIL("expected a solver error");
    } catch (const SolverError& e) {
        CHECK(std::string(e.what()).find("j1=0.5") != std::string::npos);
    }
}
