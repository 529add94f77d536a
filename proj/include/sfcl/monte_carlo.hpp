#pragma once

#include <cstdint>

#include "sfcl/state_diagram.hpp"

namespace sfcl {

struct McConfig {
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    double max_sim_hours = 1e12;  // trials running past this are censored
    // Worker threads (0 = pick from hardware). Has no effect on the result:
    // every trial draws from its own random stream and the reduction runs in
    // trial order.
    unsigned workers = 0;
};

struct McResult {
    double mean_ttf_h = 0.0;   // over uncensored trials
    double std_error_h = 0.0;
    std::uint64_t censored = 0;
    std::uint64_t trials = 0;
};

/// Simulates the diagram as a continuous-time chain: exponential holding
/// times with each state's total exit rate, successors chosen proportionally
/// to rate, until absorption or the cutoff. Deterministic for a given seed.
///
/// Randomness: per-trial SplitMix64 streams keyed by (seed, trial index), so
/// any partition of the trial range across workers reproduces the same
/// result bit for bit. Censored trials are excluded from the mean and
/// reported, never imputed. A cutoff of 100x the analytic MTTF censors fewer
/// than 1e-40 of trials in the single-exponential case, so censoring bias
/// only matters for deliberately tight horizons.
///
/// Throws when every trial is censored ("cutoff too small").
McResult simulate_mttf(const StateDiagram& d, const McConfig& cfg);

}  // namespace sfcl
