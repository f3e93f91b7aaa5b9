#include "groverian/product_params.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "groverian/errors.hpp"

namespace groverian {

namespace {

bool is_permutation_of_range(const std::vector<std::size_t>& order) {
    std::vector<bool> seen(order.size(), false);
    for (auto k : order) {
        if (k >= order.size() || seen[k]) return false;
        seen[k] = true;
    }
    return true;
}

}  // namespace

PartyParams PartyParams::identity(std::size_t dim) {
    if (dim < 1) throw DomainError("party dimension must be positive");
    PartyParams p;
    p.thetas.assign(dim - 1, 0.0);
    p.gammas.assign(dim, 0.0);
    p.order.resize(dim);
    std::iota(p.order.begin(), p.order.end(), std::size_t{0});
    return p;
}

void validate(const PartyParams& p) {
    const auto d = p.gammas.size();
    if (d < 1 || p.thetas.size() + 1 != d || p.order.size() != d) {
        throw DomainError("party params: inconsistent vector lengths");
    }
    if (!is_permutation_of_range(p.order)) throw DomainError("party params: order is not a permutation");
}

Amplitudes to_amplitudes(const PartyParams& p) {
    const auto d = p.dim();
    Amplitudes out(d);
    double prefix = 1.0;  // Π_{j<k} sin θ_j
    for (std::size_t k = 0; k + 1 < d; ++k) {
        out[p.order[k]] = std::polar(prefix * std::cos(p.thetas[k]), p.gammas[k]);
        prefix *= std::sin(p.thetas[k]);
    }
    out[p.order[d - 1]] = std::polar(prefix, p.gammas[d - 1]);
    return out;
}

PartyParams from_amplitudes(std::span<const Complex> v, std::vector<std::size_t> order) {
    const auto d = v.size();
    if (d < 1 || order.size() != d || !is_permutation_of_range(order)) {
        throw DomainError("from_amplitudes: order must be a permutation of the vector's indices");
    }
    // tail[k] = Σ_{j≥k} |v_{order j}|²
    std::vector<double> tail(d + 1, 0.0);
    for (std::size_t k = d; k-- > 0;) tail[k] = tail[k + 1] + std::norm(v[order[k]]);
    if (!(tail[0] > 0.0)) throw DomainError("from_amplitudes: zero vector");

    PartyParams p;
    p.thetas.assign(d - 1, 0.0);
    p.gammas.assign(d, 0.0);
    p.order = std::move(order);
    for (std::size_t k = 0; k < d; ++k) {
        const Complex a = v[p.order[k]];
        if (a != Complex{}) p.gammas[k] = std::arg(a);
        if (k + 1 < d && tail[k] > 0.0) {
            p.thetas[k] = std::atan2(std::sqrt(tail[k + 1]), std::abs(a));
        }
    }
    return p;
}

PartyParams rotate_leftmost(const PartyParams& p, std::size_t basis_index) {
    validate(p);
    auto it = std::find(p.order.begin(), p.order.end(), basis_index);
    if (it == p.order.end()) {
        throw DomainError("rotate_leftmost: basis index " + std::to_string(basis_index) +
                          " out of range for party dimension " + std::to_string(p.dim()));
    }
    if (it == p.order.begin()) return p;
    std::vector<std::size_t> rotated(p.order.size());
    std::rotate_copy(p.order.begin(), it, p.order.end(), rotated.begin());
    return from_amplitudes(to_amplitudes(p), std::move(rotated));
}

ProductParams::ProductParams(Partition part) : partition(std::move(part)) {
    for (int i = 0; i < partition.parties(); ++i) {
        parties.push_back(PartyParams::identity(partition.party_dim(i)));
    }
}

ProductParams::ProductParams(Partition part, std::vector<PartyParams> params)
    : partition(std::move(part)), parties(std::move(params)) {
    if (static_cast<int>(parties.size()) != partition.parties()) {
        throw DomainError("product params: one PartyParams per party required");
    }
    for (int i = 0; i < partition.parties(); ++i) {
        validate(parties[static_cast<std::size_t>(i)]);
        if (parties[static_cast<std::size_t>(i)].dim() != partition.party_dim(i)) {
            throw DomainError("product params: party " + std::to_string(i) +
                              " has the wrong dimension");
        }
    }
}

ProductParams ProductParams::from_party_states(Partition part, const std::vector<Amplitudes>& states) {
    std::vector<PartyParams> params;
    for (const auto& s : states) {
        std::vector<std::size_t> order(s.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        params.push_back(from_amplitudes(s, std::move(order)));
    }
    return ProductParams(std::move(part), std::move(params));
}

Amplitudes ProductParams::product_amplitudes() const {
    PartyIndexer idx(partition);
    std::vector<Amplitudes> local;
    for (const auto& p : parties) local.push_back(to_amplitudes(p));
    Amplitudes out(idx.size(), Complex{1.0, 0.0});
    for (std::size_t i = 0; i < idx.size(); ++i) {
        for (int p = 0; p < idx.parties(); ++p) out[i] *= local[static_cast<std::size_t>(p)][idx.local(p, i)];
    }
    return out;
}

}  // namespace groverian
