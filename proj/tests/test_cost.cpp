#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>

#include "qrcost/cost.hpp"

using namespace qrcost;

namespace {

FixedParams vbg_fixed(Generation gen, double gate_error) {
    FixedParams f;
    f.generation = gen;
    f.total_distance_km = 10000.0;
    f.gate_error = gate_error;
    f.channel = ChannelModel::vacuum_beam_guide(0.9);
    return f;
}

}  // namespace

TEST_CASE("cost coefficient definition") {
    RepeaterConfig c;
    c.generation = Generation::G1;
    c.total_distance_km = 400.0;
    c.nesting_level = 1;
    c.purification_schedule.rounds_per_level = {0, 0};
    c.channel = ChannelModel::vacuum_beam_guide(0.9);
    c.memory_qubits_per_half_node = 3;

    const auto report = cost_coefficient(c);
    const auto& perf = report.performance;
    CHECK(report.viable());
    CHECK(report.cost_coefficient ==
          doctest::Approx(perf.qubits_per_repeater * (perf.repeater_count + 1) /
                          (perf.rate_secret_bits_per_s * 400.0))
              .epsilon(1e-12));
    CHECK(report.eq1_form ==
          doctest::Approx(perf.rate_secret_bits_per_s *
                          perf.qubits_per_repeater / 200.0)
              .epsilon(1e-12));

    SUBCASE("zero-rate configs cost infinity and are not viable") {
        auto dead = c;
        dead.channel = ChannelModel::fiber(0.5);
        dead.total_distance_km = 20000.0;
        const auto r = cost_coefficient(dead);
        CHECK(std::isinf(r.cost_coefficient));
        CHECK_FALSE(r.viable());
    }
}

TEST_CASE("grid size matches the enumerated candidate count") {
    const auto channel = ChannelModel::vacuum_beam_guide(0.9);
    for (auto gen : {Generation::G1, Generation::G2, Generation::G3}) {
        auto space = SearchSpace::defaults(gen, channel, 10000.0);
        FixedParams fixed = vbg_fixed(gen, 1e-3);
        auto result = optimize(space, fixed, 1);
        CHECK(result.evaluated == space.grid_size(gen));
    }
}

TEST_CASE("optimizer returns the true grid minimum") {
    // Small grid, brute force cross-check.
    SearchSpace space;
    space.nesting_levels = {0, 1, 2};
    space.purification_rounds = {0, 1};
    space.memory_qubits = {1, 10};
    space.attempts = {1, 10};
    FixedParams fixed = vbg_fixed(Generation::G1, 1e-2);
    fixed.total_distance_km = 2000.0;

    const auto result = optimize(space, fixed, 5);
    REQUIRE(result.best.has_value());

    double brute = std::numeric_limits<double>::infinity();
    for (int n : space.nesting_levels) {
        // Uniform per-level schedules only must not beat the optimizer,
        // which also explores non-uniform assignments.
        for (int rounds : space.purification_rounds) {
            for (int m : space.memory_qubits) {
                for (int att : space.attempts) {
                    RepeaterConfig c;
                    c.generation = Generation::G1;
                    c.total_distance_km = fixed.total_distance_km;
                    c.nesting_level = n;
                    c.purification_schedule.rounds_per_level.assign(n + 1,
                                                                    rounds);
                    c.memory_qubits_per_half_node = m;
                    c.attempts_per_round = att;
                    c.gate_error = fixed.gate_error;
                    c.channel = fixed.channel;
                    brute = std::min(brute,
                                     cost_coefficient(c).cost_coefficient);
                }
            }
        }
    }
    CHECK(result.best->cost_coefficient <= brute + 1e-12);
    CHECK(result.top_k.size() <= 5);
    for (std::size_t i = 1; i < result.top_k.size(); ++i)
        CHECK(result.top_k[i - 1].cost_coefficient <=
              result.top_k[i].cost_coefficient);
    CHECK(result.top_k.front().cost_coefficient ==
          result.best->cost_coefficient);
}

TEST_CASE("optimize is deterministic") {
    const auto channel = ChannelModel::vacuum_beam_guide(0.85);
    auto space = SearchSpace::defaults(Generation::G2, channel, 10000.0);
    FixedParams fixed = vbg_fixed(Generation::G2, 1e-3);
    fixed.channel = channel;
    const auto a = optimize(space, fixed, 3);
    const auto b = optimize(space, fixed, 3);
    REQUIRE(a.best.has_value());
    REQUIRE(b.best.has_value());
    CHECK(a.best->cost_coefficient == b.best->cost_coefficient);
    CHECK(a.best->config.spacing_km == b.best->config.spacing_km);
    CHECK(a.best->config.memory_qubits_per_half_node ==
          b.best->config.memory_qubits_per_half_node);
}

TEST_CASE("no viable architecture yields an empty optimum") {
    // G2 at gate error above threshold: every candidate has zero rate.
    auto fixed = vbg_fixed(Generation::G2, 2e-2);
    auto space = SearchSpace::defaults(Generation::G2, fixed.channel, 10000.0);
    const auto result = optimize(space, fixed, 1);
    CHECK_FALSE(result.best.has_value());
    CHECK(result.top_k.empty());
    CHECK(result.evaluated == space.grid_size(Generation::G2));
}

TEST_CASE("optimal cost is monotone along physical sweeps") {
    SUBCASE("coupling efficiency") {
        FixedParams fixed = vbg_fixed(Generation::G2, 1e-3);
        fixed.channel.coupling_efficiency = 1.0;  // overridden per value
        auto space = SearchSpace::defaults(Generation::G2, fixed.channel,
                                           fixed.total_distance_km);
        const std::vector<double> etas{0.3, 0.5, 0.7, 0.9};
        const auto rows = sweep(SweepAxis::CouplingEfficiency, etas, fixed,
                                space);
        REQUIRE(rows.size() == etas.size());
        double prev = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(rows[i].axis_value == etas[i]);
            REQUIRE(rows[i].result.best.has_value());
            const double cost = rows[i].result.best->cost_coefficient;
            CHECK(cost <= prev * (1.0 + 1e-12));
            prev = cost;
        }
    }

    SUBCASE("gate error") {
        FixedParams fixed = vbg_fixed(Generation::G2, 0.0);
        auto space = SearchSpace::defaults(Generation::G2, fixed.channel,
                                           fixed.total_distance_km);
        const std::vector<double> eps{1e-5, 1e-4, 1e-3, 5e-3};
        const auto rows = sweep(SweepAxis::GateError, eps, fixed, space);
        double prev = 0.0;
        for (const auto& row : rows) {
            REQUIRE(row.result.best.has_value());
            CHECK(row.result.best->cost_coefficient >= prev * (1.0 - 1e-12));
            prev = row.result.best->cost_coefficient;
        }
    }
}

TEST_CASE("spacing grid spans 1 km to the attenuation length") {
    const auto grid =
        default_spacing_grid(ChannelModel::fiber(0.9), 10000.0, 20);
    REQUIRE(grid.size() == 20);
    CHECK(grid.front() == doctest::Approx(1.0));
    CHECK(grid.back() == doctest::Approx(20.0));
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(grid[i] > grid[i - 1]);
        // Log spacing: constant ratio.
        if (i > 1)
            CHECK(grid[i] / grid[i - 1] ==
                  doctest::Approx(grid[1] / grid[0]).epsilon(1e-9));
    }
    const auto short_grid =
        default_spacing_grid(ChannelModel::vacuum_beam_guide(0.9), 500.0, 10);
    CHECK(short_grid.back() == doctest::Approx(500.0));
}

TEST_CASE("sweep axis names round-trip") {
    for (auto axis : {SweepAxis::CouplingEfficiency, SweepAxis::TotalDistance,
                      SweepAxis::GateError})
        CHECK(sweep_axis_from_string(to_string(axis)) == axis);
    CHECK_THROWS_AS(sweep_axis_from_string("temperature"),
                    std::invalid_argument);
}
