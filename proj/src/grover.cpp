#include "groverian/grover.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "groverian/errors.hpp"

namespace groverian {

int optimal_iterations(int n) {
    const double root_n = std::sqrt(std::ldexp(1.0, n));
    return static_cast<int>(std::floor(std::numbers::pi / 4 * root_n));
}

void grover_iterate(std::span<Complex> amplitudes, std::uint64_t marked) {
    amplitudes[marked] = -amplitudes[marked];
    const Complex mean = std::accumulate(amplitudes.begin(), amplitudes.end(), Complex{}) /
                         static_cast<double>(amplitudes.size());
    for (auto& a : amplitudes) a = 2.0 * mean - a;
}

GroverRun grover_run(const PureState& initial, MarkedElement marked, int iterations) {
    if (marked.index >= initial.dim()) {
        throw DomainError("marked index " + std::to_string(marked.index) + " out of range");
    }
    if (iterations < 0) throw DomainError("iteration count must be non-negative");
    GroverRun run{.n = initial.n(), .marked = marked, .iterations = iterations};
    run.final_state.assign(initial.amplitudes().begin(), initial.amplitudes().end());
    for (int k = 0; k < iterations; ++k) grover_iterate(run.final_state, marked.index);
    run.success_probability = std::norm(run.final_state[marked.index]);
    return run;
}

double overlap_law_deviation(const PureState& psi, MarkedElement marked) {
    const auto run = grover_run(psi, marked, optimal_iterations(psi.n()));
    const Complex sum = std::accumulate(psi.amplitudes().begin(), psi.amplitudes().end(), Complex{});
    const double eta_overlap = std::norm(sum) / static_cast<double>(psi.dim());
    return std::abs(run.success_probability - eta_overlap);
}

OverlapLawReport validate_overlap_law(int n, MarkedElement marked, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be at least 1");
    OverlapLawReport report{.n = n, .trials = trials};
    std::mt19937_64 seeds(seed);
    for (int t = 0; t < trials; ++t) {
        const auto psi = make_random_state(n, seeds());
        report.max_deviation = std::max(report.max_deviation, overlap_law_deviation(psi, marked));
    }
    report.coefficient = report.max_deviation * std::ldexp(1.0, n);
    return report;
}

double log_log_slope(std::span<const OverlapLawReport> reports) {
    if (reports.size() < 2) throw DomainError("slope needs at least two sizes");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : reports) {
        const double x = r.n * std::log(2.0);
        const double y = std::log(r.max_deviation);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double k = static_cast<double>(reports.size());
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace groverian
