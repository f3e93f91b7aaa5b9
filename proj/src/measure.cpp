#include "groverian/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "groverian/errors.hpp"
#include "groverian/oracles.hpp"

namespace groverian {

const char* to_string(Method m) {
    switch (m) {
        case Method::optimizer: return "optimizer";
        case Method::spectral: return "spectral";
        case Method::analytic: return "analytic";
    }
    return "unknown";
}

double groverian_from_pmax(double pmax) {
    return std::sqrt(1.0 - std::clamp(pmax, 0.0, 1.0));
}

namespace {

std::optional<double> analytic_pmax(const PureState& state, const Partition& partition) {
    if (partition.parties() == 1) return 1.0;
    switch (state.family()) {
        case StateFamily::ghz: return ghz_pmax(state.ghz_a0(), state.ghz_a1());
        case StateFamily::w:
            if (state.n() >= 2 && partition.is_full_split()) return w_pmax(state.n(), w_kind::Full{});
            return std::nullopt;
        case StateFamily::generic: return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

MeasureResult measure(const PureState& state, const Partition& partition,
                      const OptimizerConfig& config, Routing routing) {
    if (state.n() != partition.n()) throw DomainError("partition and state sizes differ");
    MeasureResult r{.partition = partition};
    bool done = false;
    if (routing == Routing::cheapest) {
        if (auto p = analytic_pmax(state, partition)) {
            r.pmax = *p;
            r.method = Method::analytic;
            done = true;
        } else if (partition.parties() == 2) {
            r.pmax = bipartite_pmax(state, partition);
            r.method = Method::spectral;
            done = true;
        }
    }
    if (!done) {
        auto opt = optimize(state, partition, config);
        r.pmax = opt.pmax;
        r.method = Method::optimizer;
        r.trace = std::move(opt);
    }
    r.pmax = std::clamp(r.pmax, 0.0, 1.0);
    r.g = groverian_from_pmax(r.pmax);
    return r;
}

GmValue g_m(const PureState& state, int m, const OptimizerConfig& config, std::uint64_t budget,
            Routing routing) {
    if (m < 1 || m > state.n()) throw DomainError("party count must be in [1, n]");
    const std::uint64_t count = stirling2(state.n(), m);
    if (count > budget) {
        throw BudgetError("enumerating " + std::to_string(count) + " partitions of " +
                              std::to_string(state.n()) + " qubits into " + std::to_string(m) +
                              " parties exceeds the budget of " + std::to_string(budget),
                          count);
    }
    std::optional<GmValue> best;
    for (const auto& partition : enumerate_partitions(state.n(), m)) {
        auto r = measure(state, partition, config, routing);
        if (!best || r.g > best->g) best = GmValue{r.g, std::move(r)};
    }
    return *best;
}

bool GmProfile::monotone(double tol) const {
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        if (values[i].g > values[i + 1].g + tol) return false;
    }
    return true;
}

GmProfile gm_profile(const PureState& state, const OptimizerConfig& config, std::uint64_t budget,
                     Routing routing) {
    GmProfile profile{.n = state.n()};
    for (int m = 1; m <= state.n(); ++m) {
        profile.values.push_back(g_m(state, m, config, budget, routing));
    }
    for (int m = 1; m < state.n(); ++m) {
        const double a = profile.at(m).g;
        const double b = profile.at(m + 1).g;
        if (a > b + 1e-6) {
            std::ostringstream msg;
            msg << "G_" << m << " = " << a << " exceeds G_" << (m + 1) << " = " << b
                << "; increase restarts";
            profile.warnings.push_back(msg.str());
        }
    }
    return profile;
}

}  // namespace groverian
