#pragma once

#include <cstdint>

#include "qrcost/generations.hpp"

namespace qrcost {

// Discrete-event validation of the G1 analytic waiting-time recursion.
// Samples link attempts geometrically, applies explicit classical delays,
// retries failed purification, and schedules swaps over the nesting tree.
// Deterministic for a fixed (config, trials, seed) triple.
PerformanceReport simulate_chain_monte_carlo(const RepeaterConfig& config,
                                             long trials, std::uint64_t seed);

}  // namespace qrcost
