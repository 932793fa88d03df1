#include "qrcost/channel.hpp"

#include <cmath>
#include <limits>

namespace qrcost {

void ChannelModel::validate() const {
    if (!(attenuation_length_km > 0.0))
        throw std::domain_error("attenuation_length_km must be positive");
    if (!(coupling_efficiency > 0.0 && coupling_efficiency <= 1.0))
        throw std::domain_error("coupling_efficiency must be in (0, 1]");
    if (!(signal_speed_km_per_s > 0.0))
        throw std::domain_error("signal_speed_km_per_s must be positive");
}

ChannelModel ChannelModel::fiber(double coupling_efficiency) {
    ChannelModel c{Medium::Fiber, 20.0, coupling_efficiency, 2.0e5};
    c.validate();
    return c;
}

ChannelModel ChannelModel::vacuum_beam_guide(double coupling_efficiency) {
    ChannelModel c{Medium::VacuumBeamGuide, 42000.0, coupling_efficiency, 3.0e5};
    c.validate();
    return c;
}

ChannelModel ChannelModel::custom(double attenuation_length_km,
                                  double coupling_efficiency,
                                  double signal_speed_km_per_s) {
    ChannelModel c{Medium::Custom, attenuation_length_km, coupling_efficiency,
                   signal_speed_km_per_s};
    c.validate();
    return c;
}

std::string to_string(Medium m) {
    switch (m) {
        case Medium::Fiber: return "fiber";
        case Medium::VacuumBeamGuide: return "vbg";
        case Medium::Custom: return "custom";
    }
    return "custom";
}

Medium medium_from_string(const std::string& name) {
    if (name == "fiber") return Medium::Fiber;
    if (name == "vbg") return Medium::VacuumBeamGuide;
    if (name == "custom") return Medium::Custom;
    throw std::invalid_argument("unknown medium '" + name +
                                "' (expected fiber, vbg, or custom)");
}

double transmissivity(double length_km, const ChannelModel& channel) {
    channel.validate();
    if (length_km < 0.0)
        throw std::domain_error("length_km must be nonnegative");
    return std::exp(-length_km / channel.attenuation_length_km);
}

double link_success_prob(double spacing_km, const ChannelModel& channel) {
    if (!(spacing_km > 0.0))
        throw std::domain_error("spacing_km must be positive");
    return 0.5 * channel.coupling_efficiency * transmissivity(spacing_km, channel);
}

double multiplexed_success(double p, int memory_qubits, int attempts) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("p must be in [0, 1]");
    if (memory_qubits < 1) throw std::domain_error("memory_qubits must be >= 1");
    if (attempts < 1) throw std::domain_error("attempts must be >= 1");
    const double trials =
        static_cast<double>(memory_qubits) * static_cast<double>(attempts);
    // -expm1(k log1p(-p)) keeps precision for small p.
    return -std::expm1(trials * std::log1p(-p));
}

double plob_capacity(double transmissivity) {
    if (!(transmissivity >= 0.0 && transmissivity <= 1.0))
        throw std::domain_error("transmissivity must be in [0, 1)");
    if (transmissivity == 1.0)
        return std::numeric_limits<double>::infinity();
    return -std::log2(1.0 - transmissivity);
}

}  // namespace qrcost
