#include "groverian/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "groverian/errors.hpp"

namespace groverian {

namespace {

void check_sizes(const PureState& state, const Partition& partition) {
    if (state.n() != partition.n()) {
        throw DomainError("partition is over " + std::to_string(partition.n()) +
                          " qubits but the state has " + std::to_string(state.n()));
    }
}

void check_party(const Partition& partition, int party) {
    if (party < 0 || party >= partition.parties()) throw DomainError("party index out of range");
}

std::vector<Amplitudes> party_states(const ProductParams& params) {
    std::vector<Amplitudes> out;
    out.reserve(params.parties.size());
    for (const auto& p : params.parties) out.push_back(to_amplitudes(p));
    return out;
}

Amplitudes contract_except(const PureState& state, const PartyIndexer& idx,
                           const std::vector<Amplitudes>& local, int party) {
    Amplitudes m(local[static_cast<std::size_t>(party)].size());
    const auto psi = state.amplitudes();
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (psi[i] == Complex{}) continue;
        Complex w = psi[i];
        for (int p = 0; p < idx.parties(); ++p) {
            if (p != party) w *= std::conj(local[static_cast<std::size_t>(p)][idx.local(p, i)]);
        }
        m[idx.local(party, i)] += w;
    }
    return m;
}

Complex bra_dot(std::span<const Complex> phi, std::span<const Complex> v) {
    Complex s{};
    for (std::size_t j = 0; j < phi.size(); ++j) s += std::conj(phi[j]) * v[j];
    return s;
}

// Party state with θ_0 = π/2 exactly: the factor multiplying sin θ_0, zero on order[0].
Amplitudes sine_branch(const PartyParams& p) {
    const auto d = p.dim();
    Amplitudes out(d);
    if (d == 1) return out;
    double prefix = 1.0;
    for (std::size_t k = 1; k + 1 < d; ++k) {
        out[p.order[k]] = std::polar(prefix * std::cos(p.thetas[k]), p.gammas[k]);
        prefix *= std::sin(p.thetas[k]);
    }
    out[p.order[d - 1]] = std::polar(prefix, p.gammas[d - 1]);
    return out;
}

LinearCoefficients coefficients_from_contraction(const PartyParams& p, std::span<const Complex> m) {
    const Amplitudes tail = sine_branch(p);
    return {bra_dot(tail, m), m[p.order[0]]};
}

Amplitudes random_unit_vector(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> normal;
    Amplitudes v(dim);
    double s = 0.0;
    do {
        for (auto& x : v) {
            const double re = normal(rng);
            const double im = normal(rng);
            x = {re, im};
        }
        s = norm_squared(v);
    } while (!(s > 0.0));
    const double inv = 1.0 / std::sqrt(s);
    for (auto& x : v) x *= inv;
    return v;
}

// Mutable state of one ascent. Caches each party's partial contraction until
// another party changes.
class Ascent {
public:
    Ascent(const PureState& state, const PartyIndexer& idx, ProductParams params)
        : state_(state), idx_(idx), params_(std::move(params)), local_(party_states(params_)),
          cache_(local_.size()), cache_valid_(local_.size(), false) {}

    const ProductParams& params() const { return params_; }
    int parties() const { return idx_.parties(); }

    double value() const {
        const Amplitudes& m = contraction(0);
        return std::norm(bra_dot(local_[0], m));
    }

    // One closed-form (θ, γ) update on basis state `basis` of `party`.
    // Returns |f|² afterwards, or a negative number when the coordinate was degenerate.
    double coordinate_step(int party, std::size_t basis) {
        auto& pp = params_.parties[static_cast<std::size_t>(party)];
        pp = rotate_leftmost(pp, basis);
        const Amplitudes& m = contraction(party);
        const auto coeffs = coefficients_from_contraction(pp, m);
        const auto step = coordinate_update(coeffs, pp.thetas.empty() ? 0.0 : pp.thetas[0], pp.gammas[0]);
        if (step.degenerate) return -1.0;
        if (!pp.thetas.empty()) pp.thetas[0] = step.theta;
        pp.gammas[0] = step.gamma;
        set_party(party, to_amplitudes(pp));
        return std::norm(bra_dot(local_[static_cast<std::size_t>(party)], m));
    }

    double party_step(int party) {
        const Amplitudes m = contraction(party);
        const double norm = std::sqrt(norm_squared(m));
        if (!(norm > 0.0)) return -1.0;
        auto& pp = params_.parties[static_cast<std::size_t>(party)];
        Amplitudes phi(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) phi[j] = m[j] / norm;
        pp = from_amplitudes(phi, pp.order);
        set_party(party, to_amplitudes(pp));
        return std::norm(bra_dot(local_[static_cast<std::size_t>(party)], m));
    }

private:
    const Amplitudes& contraction(int party) const {
        const auto p = static_cast<std::size_t>(party);
        if (!cache_valid_[p]) {
            cache_[p] = contract_except(state_, idx_, local_, party);
            cache_valid_[p] = true;
        }
        return cache_[p];
    }

    void set_party(int party, Amplitudes amps) {
        local_[static_cast<std::size_t>(party)] = std::move(amps);
        for (std::size_t p = 0; p < cache_valid_.size(); ++p) {
            if (p != static_cast<std::size_t>(party)) cache_valid_[p] = false;
        }
    }

    const PureState& state_;
    const PartyIndexer& idx_;
    ProductParams params_;
    std::vector<Amplitudes> local_;
    mutable std::vector<Amplitudes> cache_;
    mutable std::vector<bool> cache_valid_;
};

struct RestartOutcome {
    double value = 0.0;
    ProductParams params;
    int sweeps = 0;
    bool converged = false;
};

RestartOutcome run_restart(const PureState& state, const Partition& partition,
                           const PartyIndexer& idx, const OptimizerConfig& config,
                           std::mt19937_64& rng, std::vector<double>* trace) {
    const int m = partition.parties();
    std::vector<Amplitudes> init;
    for (int p = 0; p < m; ++p) init.push_back(random_unit_vector(partition.party_dim(p), rng));
    Ascent ascent(state, idx, ProductParams::from_party_states(partition, init));

    std::size_t updates_per_sweep = 0;
    for (int p = 0; p < m; ++p) updates_per_sweep += partition.party_dim(p);

    auto record = [&](double v) {
        if (trace && v >= 0.0) trace->push_back(v);
    };

    auto coordinate_sweep = [&] {
        if (config.cyclic) {
            for (int p = 0; p < m; ++p) {
                for (std::size_t b = 0; b < partition.party_dim(p); ++b) record(ascent.coordinate_step(p, b));
            }
            return;
        }
        std::uniform_int_distribution<int> pick_party(0, m - 1);
        for (std::size_t u = 0; u < updates_per_sweep; ++u) {
            const int p = pick_party(rng);
            std::uniform_int_distribution<std::size_t> pick_basis(0, partition.party_dim(p) - 1);
            record(ascent.coordinate_step(p, pick_basis(rng)));
        }
    };
    auto party_sweep = [&] {
        for (int p = 0; p < m; ++p) record(ascent.party_step(p));
    };

    int sweeps = 0;
    bool converged = false;
    double prev = ascent.value();
    record(prev);
    for (int sweep = 1; sweep <= config.max_sweeps; ++sweep) {
        switch (config.mode) {
            case UpdateMode::coordinate: coordinate_sweep(); break;
            case UpdateMode::party: party_sweep(); break;
            case UpdateMode::hybrid:
                party_sweep();
                coordinate_sweep();
                break;
        }
        const double now = ascent.value();
        sweeps = sweep;
        const double rel = (now - prev) / std::max(prev, 1e-300);
        prev = now;
        if (rel < config.tol) {
            converged = true;
            break;
        }
    }
    return {prev, ascent.params(), sweeps, converged};
}

}  // namespace

Complex LinearCoefficients::evaluate(double theta, double gamma) const {
    return c0 * std::sin(theta) + std::polar(1.0, -gamma) * d0 * std::cos(theta);
}

void validate(const OptimizerConfig& config) {
    if (config.restarts < 1) throw DomainError("restarts must be at least 1");
    if (config.max_sweeps < 1) throw DomainError("max_sweeps must be at least 1");
    if (!(config.tol > 0.0)) throw DomainError("tol must be positive");
}

Complex overlap(const PureState& state, const ProductParams& params) {
    check_sizes(state, params.partition);
    const PartyIndexer idx(params.partition);
    const auto local = party_states(params);
    const Amplitudes m = contract_except(state, idx, local, 0);
    return bra_dot(local[0], m);
}

Amplitudes partial_contraction(const PureState& state, const ProductParams& params, int party) {
    check_sizes(state, params.partition);
    check_party(params.partition, party);
    const PartyIndexer idx(params.partition);
    return contract_except(state, idx, party_states(params), party);
}

LinearCoefficients extract_coefficients(const PureState& state, const ProductParams& params,
                                        int party) {
    const Amplitudes m = partial_contraction(state, params, party);
    return coefficients_from_contraction(params.parties[static_cast<std::size_t>(party)], m);
}

CoordinateStep coordinate_update(const LinearCoefficients& coeffs, double theta, double gamma) {
    const double c = std::abs(coeffs.c0);
    const double d = std::abs(coeffs.d0);
    const double value = c * c + d * d;
    if (!(value > 0.0)) return {theta, gamma, 0.0, true};
    CoordinateStep step;
    step.theta = std::atan2(c, d);
    step.gamma = std::remainder(std::arg(coeffs.d0) - std::arg(coeffs.c0), 2.0 * std::numbers::pi);
    step.value = value;
    return step;
}

PartyUpdate party_update(const PureState& state, const ProductParams& params, int party) {
    check_sizes(state, params.partition);
    check_party(params.partition, party);
    const PartyIndexer idx(params.partition);
    Ascent ascent(state, idx, params);
    const double v = ascent.party_step(party);
    if (v < 0.0) return {params, 0.0, true};
    return {ascent.params(), v, false};
}

OptResult optimize(const PureState& state, const Partition& partition, const OptimizerConfig& config) {
    check_sizes(state, partition);
    validate(config);
    const PartyIndexer idx(partition);

    OptResult result{.pmax = -1.0, .argmax = ProductParams(partition)};
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                      static_cast<std::uint32_t>(config.seed >> 32)};
    std::mt19937_64 master(seq);
    for (int r = 0; r < config.restarts; ++r) {
        std::mt19937_64 rng(master());
        std::vector<double>* trace = (config.record_trace && r == 0) ? &result.trace : nullptr;
        auto outcome = run_restart(state, partition, idx, config, rng, trace);
        result.sweeps_used += outcome.sweeps;
        result.restart_values.push_back(outcome.value);
        result.restart_converged.push_back(outcome.converged);
        result.converged = result.converged || outcome.converged;
        if (outcome.value > result.pmax) {
            result.pmax = outcome.value;
            result.argmax = std::move(outcome.params);
        }
    }
    return result;
}

}  // namespace groverian
