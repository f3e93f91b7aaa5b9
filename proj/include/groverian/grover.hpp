#pragma once

#include <cstdint>
#include <span>

#include "groverian/state.hpp"

namespace groverian {

struct GroverRun {
    int n = 0;
    MarkedElement marked;
    int iterations = 0;
    Amplitudes final_state;
    double success_probability = 0.0;
};

/// floor(π/4 · sqrt(2^n)).
int optimal_iterations(int n);

/// One Grover iteration in place: flip the sign of the marked amplitude, then
/// reflect every amplitude about the mean.
void grover_iterate(std::span<Complex> amplitudes, std::uint64_t marked);

/// Throws DomainError if the marked index is out of range or iterations < 0.
GroverRun grover_run(const PureState& initial, MarkedElement marked, int iterations);

/// |P_s − |<η|ψ>|²| at the optimal iteration count.
double overlap_law_deviation(const PureState& psi, MarkedElement marked);

struct OverlapLawReport {
    int n = 0;
    int trials = 0;
    double max_deviation = 0.0;
    double coefficient = 0.0;  // max_deviation · 2^n
};

/// Runs overlap_law_deviation on `trials` random states drawn from `seed`.
OverlapLawReport validate_overlap_law(int n, MarkedElement marked, int trials,
                                      std::uint64_t seed);

/// Least-squares slope of log(max deviation) against log N.
double log_log_slope(std::span<const OverlapLawReport> reports);

}  // namespace groverian
