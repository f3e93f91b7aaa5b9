#include "oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace groverian::ref {

Complex naive_overlap(std::span<const Complex> phi, std::span<const Complex> psi) {
    Complex s{};
    for (std::size_t i = 0; i < psi.size(); ++i) s += std::conj(phi[i]) * psi[i];
    return s;
}

Amplitudes naive_product_state(const Partition& partition, const std::vector<Amplitudes>& party_states) {
    const int n = partition.n();
    Amplitudes out(std::size_t{1} << n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        Complex v{1.0, 0.0};
        for (int p = 0; p < partition.parties(); ++p) {
            const auto& block = partition.block(p);
            std::size_t local = 0;
            for (std::size_t k = 0; k < block.size(); ++k) {
                const int bit = static_cast<int>((i >> (n - 1 - block[k])) & 1U);
                local += static_cast<std::size_t>(bit) << (block.size() - 1 - k);
            }
            v *= party_states[static_cast<std::size_t>(p)][local];
        }
        out[i] = v;
    }
    return out;
}

Amplitudes random_unit(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Amplitudes v(dim);
    double s = 0;
    for (auto& x : v) {
        x = {normal(rng), normal(rng)};
        s += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

PartyParams random_party_params(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    PartyParams p = PartyParams::identity(dim);
    for (auto& t : p.thetas) t = angle(rng);
    for (auto& g : p.gammas) g = angle(rng);
    std::shuffle(p.order.begin(), p.order.end(), rng);
    return p;
}

std::vector<Complex> random_unitary(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd g(d, d);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) g(r, c) = {normal(rng), normal(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    std::vector<Complex> out(dim * dim);
    for (Eigen::Index r = 0; r < d; ++r)
        for (Eigen::Index c = 0; c < d; ++c) out[static_cast<std::size_t>(r * d + c)] = q(r, c);
    return out;
}

PureState apply_party_unitaries(const PureState& state, const Partition& partition,
                                const std::vector<std::vector<Complex>>& unitaries) {
    const int n = state.n();
    Amplitudes cur(state.amplitudes().begin(), state.amplitudes().end());
    for (int p = 0; p < partition.parties(); ++p) {
        const auto& block = partition.block(p);
        const auto& u = unitaries[static_cast<std::size_t>(p)];
        const std::size_t d = std::size_t{1} << block.size();
        std::size_t mask = 0;
        for (int q : block) mask |= std::size_t{1} << (n - 1 - q);
        auto local_of = [&](std::size_t i) {
            std::size_t l = 0;
            for (int q : block) l = (l << 1) | ((i >> (n - 1 - q)) & 1U);
            return l;
        };
        auto with_local = [&](std::size_t base, std::size_t l) {
            std::size_t i = base & ~mask;
            for (std::size_t k = 0; k < block.size(); ++k) {
                const std::size_t bit = (l >> (block.size() - 1 - k)) & 1U;
                i |= bit << (n - 1 - block[k]);
            }
            return i;
        };
        Amplitudes next(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const std::size_t row = local_of(i);
            Complex s{};
            for (std::size_t col = 0; col < d; ++col) s += u[row * d + col] * cur[with_local(i, col)];
            next[i] = s;
        }
        cur = std::move(next);
    }
    return PureState::normalized(n, std::move(cur));
}

std::uint64_t brute_force_stirling(int n, int m) {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(m);
    std::uint64_t surjective = 0;
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (int i = 0; i < n; ++i) {
            used[c % static_cast<std::uint64_t>(m)] = true;
            c /= static_cast<std::uint64_t>(m);
        }
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) ++surjective;
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
    return surjective / fact;
}

Partition random_partition(int n, int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> label(0, m - 1);
    while (true) {
        std::vector<Block> blocks(static_cast<std::size_t>(m));
        for (int q = 0; q < n; ++q) blocks[static_cast<std::size_t>(label(rng))].push_back(q);
        if (std::none_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.empty(); })) {
            return Partition(n, std::move(blocks));
        }
    }
}

Partition merge_blocks(const Partition& p, int a, int b) {
    std::vector<Block> blocks;
    Block merged = p.block(a);
    merged.insert(merged.end(), p.block(b).begin(), p.block(b).end());
    for (int i = 0; i < p.parties(); ++i) {
        if (i == a) blocks.push_back(merged);
        else if (i != b) blocks.push_back(p.block(i));
    }
    return Partition(p.n(), std::move(blocks));
}

double grover_eta_success(int n, int k) {
    const double theta = std::asin(1.0 / std::sqrt(std::ldexp(1.0, n)));
    const double s = std::sin((2 * k + 1) * theta);
    return s * s;
}

}  // namespace groverian::ref
