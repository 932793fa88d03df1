#pragma once

#include <stdexcept>
#include <string>

namespace qrcost {

enum class Medium { Fiber, VacuumBeamGuide, Custom };

// Transmission medium for photonic links. Presets: fiber (L_att = 20 km,
// signal at 2e5 km/s) and vacuum beam guide (L_att = 42,000 km, 3e5 km/s).
struct ChannelModel {
    Medium medium = Medium::Custom;
    double attenuation_length_km = 20.0;
    double coupling_efficiency = 1.0;
    double signal_speed_km_per_s = 2.0e5;

    void validate() const;

    static ChannelModel fiber(double coupling_efficiency = 1.0);
    static ChannelModel vacuum_beam_guide(double coupling_efficiency = 1.0);
    static ChannelModel custom(double attenuation_length_km,
                               double coupling_efficiency = 1.0,
                               double signal_speed_km_per_s = 2.0e5);
};

std::string to_string(Medium m);
Medium medium_from_string(const std::string& name);

// exp(-L / L_att)
double transmissivity(double length_km, const ChannelModel& channel);

// Single-trial heralded link success: p = (1/2) eta_c exp(-L0 / L_att).
double link_success_prob(double spacing_km, const ChannelModel& channel);

// P_success = 1 - (1 - p)^(M * n_EG)
double multiplexed_success(double p, int memory_qubits, int attempts);

// Repeaterless benchmark: -log2(1 - eta) secret bits per mode.
// Returns +infinity at eta = 1.
double plob_capacity(double transmissivity);

}  // namespace qrcost
