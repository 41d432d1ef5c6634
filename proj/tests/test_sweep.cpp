#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "entdist/sweep.hpp"

using namespace entdist;

TEST_CASE("axis values") {
    SweepAxis q{"q", 0.0, 1.0, 0.01};
    CHECK(q.values().size() == 101);
    SweepAxis fine{"q", 0.0, 1.0, 0.005};
    CHECK(fine.values().size() == 201);
    CHECK_THROWS_AS((SweepAxis{"q", 0.0, 1.0, 0.0}.values()), std::invalid_argument);
    CHECK_THROWS_AS((SweepAxis{"q", 1.0, 0.0, 0.1}.values()), std::invalid_argument);
}

TEST_CASE("ame sweep") {
    SweepGrid grid;
    grid.axes = {{"q", 0.0, 1.0, 0.01}};
    SweepResult res = sweep(grid, Scenario::Ame);
    REQUIRE(res.rows.size() == 101);
    for (const SweepRow& row : res.rows)
        CHECK(row.record.e_in <= 1e-9); // fig3 grouping has no lab entanglement
}

TEST_CASE("two-axis grid shape") {
    SweepGrid grid;
    grid.axes = {{"s", 0.0, 1.0, 0.25}, {"delta", 0.0, 1.0, 0.5}};
    grid.fixed["p"] = 0.34;
    grid.channel_spec = "dephasing";
    SweepResult res = sweep(grid, Scenario::Indirect);
    CHECK(res.rows.size() == 5 * 3);
    // row-major: the second axis varies fastest
    CHECK(res.rows[0].coords == std::vector<double>{0.0, 0.0});
    CHECK(res.rows[1].coords == std::vector<double>{0.0, 0.5});
    CHECK(res.rows[3].coords == std::vector<double>{0.25, 0.0});
}

TEST_CASE("serial and parallel sweeps agree bitwise") {
    SweepGrid grid;
    grid.axes = {{"p", 0.0, 1.0, 0.1}, {"delta", 0.0, 1.0, 0.2}};
    grid.fixed["s"] = 2.0 / 3.0;
    grid.channel_spec = "depolarizing";
    SweepResult a = sweep(grid, Scenario::DirectThenIndirect, ExecPolicy::Parallel);
    SweepResult b = sweep(grid, Scenario::DirectThenIndirect, ExecPolicy::Serial);
    std::ostringstream sa, sb;
    write_sweep_csv(sa, a);
    write_sweep_csv(sb, b);
    CHECK(sa.str() == sb.str());
}

TEST_CASE("csv output") {
    SweepGrid grid;
    grid.axes = {{"q", 0.0, 0.02, 0.01}};
    SweepResult res = sweep(grid, Scenario::Catalysis);
    std::ostringstream os;
    write_sweep_csv(os, res);
    std::string text = os.str();
    CHECK(text.rfind("scenario,axis1,axis2,e_in,e_com,e_fin,delta_e,classification\n", 0) == 0);
    CHECK(text.find("catalysis,0.01,,") != std::string::npos); // empty axis2 column

    SUBCASE("reruns are byte-identical") {
        std::ostringstream again;
        write_sweep_csv(again, sweep(grid, Scenario::Catalysis));
        CHECK(again.str() == text);
    }
}

TEST_CASE("channel resolution") {
    SweepGrid grid;
    grid.axes = {{"delta", 0.0, 1.0, 0.5}};
    grid.fixed["p"] = 0.34;
    grid.fixed["s"] = 1.0;

    SUBCASE("family picked from the spec, delta from the axis") {
        grid.channel_spec = "ad";
        CHECK(sweep(grid, Scenario::Indirect).rows.size() == 3);
    }

    SUBCASE("an attached parameter is superseded by the swept delta") {
        grid.channel_spec = "ad:0.9";
        SweepGrid plain = grid;
        plain.channel_spec = "ad";
        std::ostringstream a, b;
        write_sweep_csv(a, sweep(grid, Scenario::Indirect));
        write_sweep_csv(b, sweep(plain, Scenario::Indirect));
        CHECK(a.str() == b.str());
    }

    SUBCASE("parameterless families cannot be swept in delta") {
        grid.channel_spec = "identity";
        CHECK_THROWS_AS(sweep(grid, Scenario::Indirect), std::invalid_argument);
    }

    SUBCASE("missing channel spec") {
        grid.channel_spec = "";
        CHECK_THROWS_AS(sweep(grid, Scenario::Indirect), std::invalid_argument);
    }
}

TEST_CASE("grid validation") {
    SweepGrid grid;
    grid.axes = {{"delta", 0.0, 1.0, 0.5}};
    CHECK_THROWS_AS(sweep(grid, Scenario::Ame), std::invalid_argument);

    SweepGrid dup;
    dup.axes = {{"q", 0.0, 1.0, 0.5}, {"q", 0.0, 1.0, 0.5}};
    CHECK_THROWS_AS(sweep(dup, Scenario::Ame), std::invalid_argument);

    SweepGrid missing;
    missing.axes = {{"s", 0.0, 1.0, 0.5}};
    missing.channel_spec = "dephasing:0.1";
    CHECK_THROWS_AS(sweep(missing, Scenario::Indirect), std::invalid_argument); // no p anywhere

    CHECK_THROWS_AS(scenario_from_name("bogus"), std::invalid_argument);
    CHECK(scenario_from_name("noisy_labs") == Scenario::NoisyLabs);
}

TEST_CASE("noisy labs sweep axes") {
    SweepGrid grid;
    grid.axes = {{"local_delta", 0.0, 1.0, 0.5}, {"delta", 0.0, 1.0, 0.5}};
    grid.fixed["p"] = 0.34;
    grid.channel_spec = "ad";
    SweepResult res = sweep(grid, Scenario::NoisyLabs);
    CHECK(res.rows.size() == 9);
}
