#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qrcost/cost.hpp"
#include "qrcost/monte_carlo.hpp"
#include "qrcost/scenario.hpp"

namespace py = pybind11;
using namespace qrcost;

PYBIND11_MODULE(_qrcost, m) {
    m.doc() =
        "Cost-coefficient analysis of quantum repeater architectures over "
        "fiber and vacuum-beam-guide channels";

    py::enum_<Medium>(m, "Medium")
        .value("FIBER", Medium::Fiber)
        .value("VACUUM_BEAM_GUIDE", Medium::VacuumBeamGuide)
        .value("CUSTOM", Medium::Custom);

    py::class_<ChannelModel>(m, "ChannelModel")
        .def(py::init<>())
        .def_readwrite("medium", &ChannelModel::medium)
        .def_readwrite("attenuation_length_km",
                       &ChannelModel::attenuation_length_km)
        .def_readwrite("coupling_efficiency", &ChannelModel::coupling_efficiency)
        .def_readwrite("signal_speed_km_per_s",
                       &ChannelModel::signal_speed_km_per_s)
        .def_static("fiber", &ChannelModel::fiber,
                    py::arg("coupling_efficiency") = 1.0)
        .def_static("vacuum_beam_guide", &ChannelModel::vacuum_beam_guide,
                    py::arg("coupling_efficiency") = 1.0)
        .def_static("custom", &ChannelModel::custom,
                    py::arg("attenuation_length_km"),
                    py::arg("coupling_efficiency") = 1.0,
                    py::arg("signal_speed_km_per_s") = 2e5);

    m.def("transmissivity", &transmissivity, py::arg("distance_km"),
          py::arg("channel"));
    m.def("link_success_prob", &link_success_prob, py::arg("distance_km"),
          py::arg("channel"));
    m.def("multiplexed_success", &multiplexed_success, py::arg("p"),
          py::arg("memory_qubits"), py::arg("attempts"));
    m.def("plob_capacity", &plob_capacity, py::arg("transmissivity"));

    py::class_<BellDiagonalState>(m, "BellDiagonalState")
        .def(py::init<>())
        .def_readwrite("weights", &BellDiagonalState::weights)
        .def("fidelity", &BellDiagonalState::fidelity)
        .def_static("perfect", &BellDiagonalState::perfect);

    m.def("werner_state", &werner_state, py::arg("fidelity"));
    m.def("depolarize", &depolarize, py::arg("state"), py::arg("q"));
    m.def("secret_fraction", &secret_fraction, py::arg("state"));

    py::enum_<PurificationProtocol>(m, "PurificationProtocol")
        .value("BBPSSW", PurificationProtocol::BBPSSW)
        .value("DEJMPS", PurificationProtocol::DEJMPS);

    py::class_<PurificationOutcome>(m, "PurificationOutcome")
        .def_readonly("output_state", &PurificationOutcome::output_state)
        .def_readonly("success_prob", &PurificationOutcome::success_prob);

    m.def("bbpssw_round", &bbpssw_round, py::arg("state"));
    m.def("dejmps_round", &dejmps_round, py::arg("state"));
    m.def("swap_links", &swap_links, py::arg("left"), py::arg("right"),
          py::arg("gate_error") = 0.0,
          py::arg("measurement_efficiency") = 1.0);

    py::enum_<Generation>(m, "Generation")
        .value("G1", Generation::G1)
        .value("G2", Generation::G2)
        .value("G3", Generation::G3);

    py::class_<CodeParams>(m, "CodeParams")
        .def(py::init<>())
        .def_readwrite("block_size", &CodeParams::block_size)
        .def_readwrite("loss_threshold", &CodeParams::loss_threshold)
        .def_readwrite("fault_threshold", &CodeParams::fault_threshold)
        .def_readwrite("suppression_exponent", &CodeParams::suppression_exponent)
        .def("logical_error", &CodeParams::logical_error, py::arg("gate_error"));

    py::class_<PurificationSchedule>(m, "PurificationSchedule")
        .def(py::init<>())
        .def_readwrite("rounds_per_level", &PurificationSchedule::rounds_per_level);

    py::class_<RepeaterConfig>(m, "RepeaterConfig")
        .def(py::init<>())
        .def_readwrite("generation", &RepeaterConfig::generation)
        .def_readwrite("total_distance_km", &RepeaterConfig::total_distance_km)
        .def_readwrite("nesting_level", &RepeaterConfig::nesting_level)
        .def_readwrite("spacing_km", &RepeaterConfig::spacing_km)
        .def_readwrite("purification_schedule",
                       &RepeaterConfig::purification_schedule)
        .def_readwrite("protocol", &RepeaterConfig::protocol)
        .def_readwrite("memory_qubits_per_half_node",
                       &RepeaterConfig::memory_qubits_per_half_node)
        .def_readwrite("attempts_per_round", &RepeaterConfig::attempts_per_round)
        .def_readwrite("gate_error", &RepeaterConfig::gate_error)
        .def_readwrite("local_gate_time_s", &RepeaterConfig::local_gate_time_s)
        .def_readwrite("code", &RepeaterConfig::code)
        .def_readwrite("channel", &RepeaterConfig::channel)
        .def("validate", &RepeaterConfig::validate)
        .def("link_count", &RepeaterConfig::link_count)
        .def("link_length_km", &RepeaterConfig::link_length_km);

    py::class_<PerformanceReport>(m, "PerformanceReport")
        .def_readonly("rate_secret_bits_per_s",
                      &PerformanceReport::rate_secret_bits_per_s)
        .def_readonly("end_state", &PerformanceReport::end_state)
        .def_readonly("secret_fraction_per_pair",
                      &PerformanceReport::secret_fraction_per_pair)
        .def_readonly("qubits_per_repeater",
                      &PerformanceReport::qubits_per_repeater)
        .def_readonly("repeater_count", &PerformanceReport::repeater_count)
        .def_readonly("total_time_per_pair_s",
                      &PerformanceReport::total_time_per_pair_s)
        .def_readonly("above_threshold", &PerformanceReport::above_threshold)
        .def_readonly("below_loss_tolerance",
                      &PerformanceReport::below_loss_tolerance)
        .def_readonly("degenerate", &PerformanceReport::degenerate)
        .def_readonly("time_ci_halfwidth_s",
                      &PerformanceReport::time_ci_halfwidth_s)
        .def_readonly("fidelity_estimate", &PerformanceReport::fidelity_estimate)
        .def_readonly("fidelity_ci_halfwidth",
                      &PerformanceReport::fidelity_ci_halfwidth);

    m.def("evaluate_performance", &evaluate_performance, py::arg("config"));
    m.def("simulate_chain_monte_carlo", &simulate_chain_monte_carlo,
          py::arg("config"), py::arg("trials"), py::arg("seed"));

    py::class_<CostReport>(m, "CostReport")
        .def_readonly("cost_coefficient", &CostReport::cost_coefficient)
        .def_readonly("eq1_form", &CostReport::eq1_form)
        .def_readonly("config", &CostReport::config)
        .def_readonly("performance", &CostReport::performance)
        .def("viable", &CostReport::viable);

    m.def("cost_coefficient", &cost_coefficient, py::arg("config"));

    py::class_<SearchSpace>(m, "SearchSpace")
        .def(py::init<>())
        .def_readwrite("nesting_levels", &SearchSpace::nesting_levels)
        .def_readwrite("purification_rounds", &SearchSpace::purification_rounds)
        .def_readwrite("spacing_grid_km", &SearchSpace::spacing_grid_km)
        .def_readwrite("memory_qubits", &SearchSpace::memory_qubits)
        .def_readwrite("attempts", &SearchSpace::attempts)
        .def_readwrite("protocol", &SearchSpace::protocol)
        .def("grid_size", &SearchSpace::grid_size, py::arg("generation"))
        .def_static("defaults", &SearchSpace::defaults, py::arg("generation"),
                    py::arg("channel"), py::arg("total_distance_km"));

    py::class_<FixedParams>(m, "FixedParams")
        .def(py::init<>())
        .def_readwrite("generation", &FixedParams::generation)
        .def_readwrite("total_distance_km", &FixedParams::total_distance_km)
        .def_readwrite("gate_error", &FixedParams::gate_error)
        .def_readwrite("local_gate_time_s", &FixedParams::local_gate_time_s)
        .def_readwrite("code", &FixedParams::code)
        .def_readwrite("channel", &FixedParams::channel);

    py::class_<OptimizeResult>(m, "OptimizeResult")
        .def_readonly("best", &OptimizeResult::best)
        .def_readonly("top_k", &OptimizeResult::top_k)
        .def_readonly("evaluated", &OptimizeResult::evaluated);

    m.def("optimize", &optimize, py::arg("space"), py::arg("fixed"),
          py::arg("top_k") = 1);

    m.def("default_spacing_grid", &default_spacing_grid, py::arg("channel"),
          py::arg("total_distance_km"), py::arg("points") = 20);

    m.def(
        "run_scenario_file",
        [](const std::string& path, const std::string& output_dir) {
            const auto config = RunConfig::from_file(path);
            std::ostringstream log;
            const auto out = run_scenario(config, output_dir, log);
            return py::make_tuple(out.csv_paths, log.str());
        },
        py::arg("config_path"), py::arg("output_dir"));
    m.def("builtin_scenario_names", &builtin_scenario_names);
    m.def("builtin_scenario_text", &builtin_scenario_text, py::arg("name"));
}
