#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groverian/optimizer.hpp"
#include "groverian/partition.hpp"
#include "groverian/state.hpp"

namespace groverian {

enum class Method { optimizer, spectral, analytic };

const char* to_string(Method m);

enum class Routing {
    cheapest,        // analytic / spectral shortcuts when they apply
    optimizer_only,  // always run the coordinate-ascent optimizer
};

struct MeasureResult {
    double pmax = 0.0;
    double g = 0.0;
    Partition partition;
    Method method = Method::optimizer;
    std::optional<OptResult> trace;  // set when method == optimizer
};

/// G = sqrt(1 − P_max), with P_max clamped to [0, 1].
double groverian_from_pmax(double pmax);

/// P_max and G for one partition, by the cheapest applicable method unless
/// `routing` forces the optimizer.
MeasureResult measure(const PureState& state, const Partition& partition,
                      const OptimizerConfig& config = {}, Routing routing = Routing::cheapest);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100000;

struct GmValue {
    double g = 0.0;
    MeasureResult best;
};

/// Maximum of G over every partition into m parties. Ties go to the earlier
/// partition in canonical order. BudgetError if S(n, m) > budget.
GmValue g_m(const PureState& state, int m, const OptimizerConfig& config = {},
            std::uint64_t budget = kDefaultEnumerationBudget,
            Routing routing = Routing::cheapest);

struct GmProfile {
    int n = 0;
    std::vector<GmValue> values;        // values[m - 1] for m = 1..n
    std::vector<std::string> warnings;  // monotonicity violations beyond 1e-6

    const GmValue& at(int m) const { return values.at(static_cast<std::size_t>(m - 1)); }
    bool monotone(double tol = 1e-6) const;
};

GmProfile gm_profile(const PureState& state, const OptimizerConfig& config = {},
                     std::uint64_t budget = kDefaultEnumerationBudget,
                     Routing routing = Routing::cheapest);

}  // namespace groverian
