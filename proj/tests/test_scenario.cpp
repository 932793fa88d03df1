#include <doctest.h>

#include <stdexcept>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <unistd.h>

#include "qrcost/scenario.hpp"

using namespace qrcost;
namespace fs = std::filesystem;

namespace {

const char* kSmallConfig = R"JSON({
  "name": "smoke",
  "output_prefix": "smoke",
  "seed": 7,
  "sweeps": [
    {
      "label": "g2_vbg", "generation": "G2", "medium": "vbg",
      "total_distance_km": 1000.0, "gate_error": 0.001,
      "axis": "coupling_efficiency",
      "values": [0.5, 0.9],
      "search": {"spacing_km": [100.0, 250.0],
                 "memory_qubits": [1, 10], "attempts": [1, 10]}
    }
  ]
})JSON";

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("qrcost_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("config parsing") {
    const auto config = RunConfig::from_json_text(kSmallConfig);
    CHECK(config.name == "smoke");
    CHECK(config.seed == 7);
    REQUIRE(config.sweeps.size() == 1);
    const auto& sweep = config.sweeps[0];
    CHECK(sweep.fixed.generation == Generation::G2);
    CHECK(sweep.fixed.channel.medium == Medium::VacuumBeamGuide);
    CHECK(sweep.fixed.channel.attenuation_length_km == 42000.0);
    CHECK(sweep.fixed.gate_error == 0.001);
    CHECK(sweep.values == std::vector<double>{0.5, 0.9});
    CHECK(sweep.space.spacing_grid_km == std::vector<double>{100.0, 250.0});
    CHECK(sweep.space.memory_qubits == std::vector<int>{1, 10});

    SUBCASE("rejects unknown keys with a location") {
        const std::string bad = R"({"name": "x", "sweeps": [
            {"generation": "G2", "medium": "vbg", "total_distance_km": 1.0,
             "values": [0.5], "spaceing": {}}]})";
        CHECK_THROWS_WITH_AS(RunConfig::from_json_text(bad),
                             "sweeps[0]: unknown key 'spaceing'",
                             std::invalid_argument);
    }
    SUBCASE("rejects malformed JSON and missing fields") {
        CHECK_THROWS_AS(RunConfig::from_json_text("{oops"),
                        std::invalid_argument);
        CHECK_THROWS_AS(RunConfig::from_json_text(R"({"name": "x"})"),
                        std::invalid_argument);
        CHECK_THROWS_AS(RunConfig::from_json_text(
                            R"({"name": "x", "sweeps": [
                                {"medium": "vbg", "total_distance_km": 1.0,
                                 "values": [0.5]}]})"),
                        std::invalid_argument);
    }
    SUBCASE("rejects unsorted axis values") {
        const std::string bad = R"({"name": "x", "sweeps": [
            {"generation": "G2", "medium": "vbg", "total_distance_km": 1.0,
             "values": [0.9, 0.5]}]})";
        CHECK_THROWS_AS(RunConfig::from_json_text(bad),
                        std::invalid_argument);
    }
}

TEST_CASE("validate_config lists resolved parameters") {
    const auto config = RunConfig::from_json_text(kSmallConfig);
    const auto text = validate_config(config);
    CHECK(text.find("scenario: smoke") != std::string::npos);
    CHECK(text.find("G2") != std::string::npos);
    CHECK(text.find("42000") != std::string::npos);
    CHECK(text.find("grid points per value") != std::string::npos);
}

TEST_CASE("CSV formatting rules") {
    CHECK(format_csv_value(0.0) == "0");
    CHECK(format_csv_value(1.0) == "1");
    CHECK(format_csv_value(0.25) == "0.25");
    CHECK(format_csv_value(1234.5) == "1234.5");
    CHECK(format_csv_value(1e-4) == "1.000000000e-04");
    CHECK(format_csv_value(-2.5e-7) == "-2.500000000e-07");
    const auto inf = std::numeric_limits<double>::infinity();
    CHECK(format_csv_value(inf) == "inf");
    CHECK(format_csv_value(0.123456789123) == "0.123456789");
}

TEST_CASE("run_scenario writes one CSV per sweep") {
    TempDir dir;
    const auto config = RunConfig::from_json_text(kSmallConfig);
    std::ostringstream log;
    const auto output = run_scenario(config, dir.path.string(), log);
    REQUIRE(output.csv_paths.size() == 1);
    CHECK(fs::path(output.csv_paths[0]).filename() == "smoke_g2_vbg.csv");

    const auto text = read_file(output.csv_paths[0]);
    std::istringstream lines(text);
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "axis,axis_value,generation,medium,cost_coefficient,eq1_form,"
          "rate_secret_bits_per_s,end_fidelity,secret_fraction,nesting,"
          "purification_schedule,spacing_km,memory_qubits,attempts,"
          "repeater_count");
    int rows = 0;
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 2);
    CHECK(text.find("coupling_efficiency,0.5,G2,vbg,") != std::string::npos);
    CHECK(log.str().find("g2_vbg") != std::string::npos);

    SUBCASE("re-running produces byte-identical output") {
        const auto first = read_file(output.csv_paths[0]);
        std::ostringstream log2;
        const auto again = run_scenario(config, dir.path.string(), log2);
        CHECK(read_file(again.csv_paths[0]) == first);
    }
}

TEST_CASE("run_scenario leaves no partial outputs on failure") {
    TempDir dir;
    auto config = RunConfig::from_json_text(kSmallConfig);
    // Second sweep with an invalid (negative) spacing triggers a failure
    // after the first sweep has been staged.
    auto bad = config.sweeps[0];
    bad.label = "bad";
    bad.space.spacing_grid_km = {-5.0};
    config.sweeps.push_back(bad);
    std::ostringstream log;
    CHECK_THROWS(run_scenario(config, dir.path.string(), log));
    CHECK(fs::is_empty(dir.path));
}

TEST_CASE("builtin scenarios parse and validate") {
    const auto names = builtin_scenario_names();
    REQUIRE(names == std::vector<std::string>{"fig3", "fig4", "fig5"});
    for (const auto& name : names) {
        CHECK(is_builtin_scenario(name));
        const auto config =
            RunConfig::from_json_text(builtin_scenario_text(name));
        CHECK(config.name == name);
        CHECK_FALSE(config.sweeps.empty());
        CHECK_FALSE(validate_config(config).empty());
    }
    CHECK_FALSE(is_builtin_scenario("fig9"));
    CHECK_THROWS_AS(builtin_scenario_text("fig9"), std::invalid_argument);
}

TEST_CASE("checked-in scenario files match the builtin definitions") {
    const fs::path root = fs::path(QRCOST_SOURCE_DIR) / "scenarios";
    for (const auto& name : builtin_scenario_names()) {
        const auto path = root / (name + ".json");
        REQUIRE(fs::exists(path));
        CHECK(read_file(path) == builtin_scenario_text(name) + "\n");
    }
}
