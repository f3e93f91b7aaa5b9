#include "groverian/oracles.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "groverian/errors.hpp"

namespace groverian {

double bipartite_pmax(const PureState& state, const Partition& partition) {
    if (partition.parties() != 2) throw DomainError("bipartite_pmax needs exactly two parties");
    if (partition.n() != state.n()) throw DomainError("partition and state sizes differ");
    const PartyIndexer idx(partition);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(partition.party_dim(0)),
                                                static_cast<Eigen::Index>(partition.party_dim(1)));
    for (std::size_t i = 0; i < state.dim(); ++i) m(idx.local(0, i), idx.local(1, i)) = state[i];
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const double s = svd.singularValues()(0);
    return s * s;
}

namespace {

constexpr std::size_t kMaxPartyGrid = 10'000'000;

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
}

// Grid points of one party: θ_k on steps points spanning [0, π/2] inclusive,
// γ_k (k ≥ 1) on steps points spanning [0, 2π). γ_0 is a global phase and fixed at 0.
// Stored conjugated, ready for contraction.
std::vector<Amplitudes> party_grid(std::size_t dim, int steps) {
    const std::size_t n_theta = dim - 1;
    const std::size_t n_gamma = dim - 1;
    const std::size_t axes = n_theta + n_gamma;
    const auto s = static_cast<std::size_t>(steps);
    const std::size_t count = ipow(s, axes);
    std::vector<Amplitudes> grid;
    grid.reserve(count);
    std::vector<std::size_t> digit(axes, 0);
    for (std::size_t g = 0; g < count; ++g) {
        std::size_t rem = g;
        for (std::size_t a = 0; a < axes; ++a) {
            digit[a] = rem % s;
            rem /= s;
        }
        Amplitudes v(dim);
        double prefix = 1.0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double gamma =
                k == 0 ? 0.0 : 2.0 * std::numbers::pi * static_cast<double>(digit[n_theta + k - 1]) / steps;
            double mag = prefix;
            if (k + 1 < dim) {
                const double theta = (std::numbers::pi / 2) * static_cast<double>(digit[k]) / (steps - 1);
                mag *= std::cos(theta);
                prefix *= std::sin(theta);
            }
            v[k] = std::conj(std::polar(mag, gamma));
        }
        grid.push_back(std::move(v));
    }
    return grid;
}

// tensor has party-major layout (party 0 slowest); contracts the leading party
// with every grid vector and recurses.
double grid_max(std::span<const Complex> tensor, const std::vector<std::vector<Amplitudes>>& grids,
                std::size_t party) {
    const auto& grid = grids[party];
    const std::size_t dim = grid.front().size();
    const std::size_t rest = tensor.size() / dim;
    double best = 0.0;
    if (party + 1 == grids.size()) {
        for (const auto& phi : grid) {
            Complex f{};
            for (std::size_t j = 0; j < dim; ++j) f += phi[j] * tensor[j];
            best = std::max(best, std::norm(f));
        }
        return best;
    }
    Amplitudes reduced(rest);
    for (const auto& phi : grid) {
        std::fill(reduced.begin(), reduced.end(), Complex{});
        for (std::size_t j = 0; j < dim; ++j) {
            const Complex w = phi[j];
            const Complex* row = tensor.data() + j * rest;
            for (std::size_t r = 0; r < rest; ++r) reduced[r] += w * row[r];
        }
        best = std::max(best, grid_max(reduced, grids, party + 1));
    }
    return best;
}

}  // namespace

double grid_search_pmax(const PureState& state, const Partition& partition, int steps) {
    if (partition.n() != state.n()) throw DomainError("partition and state sizes differ");
    if (steps < 8) throw DomainError("grid search needs at least 8 steps per axis");
    std::size_t params = 0;
    for (int p = 0; p < partition.parties(); ++p) params += 2 * partition.party_dim(p) - 1;
    if (params > 12) {
        throw BudgetError("grid search refused: " + std::to_string(params) +
                              " parameters exceed the budget of 12",
                          params);
    }
    std::vector<std::vector<Amplitudes>> grids;
    for (int p = 0; p < partition.parties(); ++p) {
        const std::size_t dim = partition.party_dim(p);
        const double points = std::pow(static_cast<double>(steps), 2.0 * static_cast<double>(dim - 1));
        if (points > static_cast<double>(kMaxPartyGrid)) {
            throw BudgetError("grid search refused: party " + std::to_string(p) + " needs " +
                                  std::to_string(static_cast<unsigned long long>(points)) + " grid points",
                              static_cast<unsigned long long>(points));
        }
        grids.push_back(party_grid(dim, steps));
    }

    // Reorder ψ so that the index is (j_0, j_1, ..., j_{m-1}) with party 0 slowest.
    const PartyIndexer idx(partition);
    Amplitudes tensor(state.dim());
    for (std::size_t i = 0; i < state.dim(); ++i) {
        std::size_t t = 0;
        for (int p = 0; p < partition.parties(); ++p) {
            t = t * partition.party_dim(p) + idx.local(p, i);
        }
        tensor[t] = state[i];
    }
    return grid_max(tensor, grids, 0);
}

double ghz_pmax(Complex a0, Complex a1) {
    const double p0 = std::norm(a0);
    const double p1 = std::norm(a1);
    if (!(std::abs(p0 + p1 - 1.0) <= kNormTolerance)) {
        throw NormalizationError("GHZ coefficients must satisfy |a0|^2 + |a1|^2 = 1");
    }
    return std::max(p0, p1);
}

namespace {

// Cells of the W-state table (one-qubit parties plus a remainder party) that are
// printed as exact fractions, for 2 < m < n ≤ 7. Remaining cells in that range
// are only known numerically.
std::optional<double> tabulated_w_cell(int n, int m) {
    struct Cell {
        int n, m, num;
    };
    static constexpr Cell cells[] = {
        {4, 3, 2}, {5, 3, 3}, {6, 3, 4}, {7, 3, 5}, {6, 4, 3}, {7, 4, 4},
    };
    for (const auto& c : cells) {
        if (c.n == n && c.m == m) return static_cast<double>(c.num) / n;
    }
    return std::nullopt;
}

}  // namespace

std::optional<double> w_pmax(int n, const WPartitionKind& kind) {
    if (n < 2) throw DomainError("w_pmax needs n >= 2");
    const double nd = n;
    if (std::holds_alternative<w_kind::Full>(kind)) {
        return std::pow(1.0 - 1.0 / nd, n - 1);
    }
    if (const auto* kv = std::get_if<w_kind::KVsRest>(&kind)) {
        if (kv->k < 1 || kv->k >= n) throw DomainError("k must satisfy 1 <= k < n");
        return std::max(kv->k / nd, 1.0 - kv->k / nd);
    }
    const int m = std::get<w_kind::OneQubitParties>(kind).m;
    if (m < 1 || m > n) throw DomainError("party count must be in [1, n]");
    if (m == 1) return 1.0;
    if (m == 2) return (nd - 1.0) / nd;
    if (m == n) return std::pow(1.0 - 1.0 / nd, n - 1);
    return tabulated_w_cell(n, m);
}

}  // namespace groverian
