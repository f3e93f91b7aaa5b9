#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "groverian/partition.hpp"
#include "groverian/state.hpp"

namespace groverian {

/// Nested hyperspherical parametrization of one party's pure state.
///
/// With nesting order (o_0, ..., o_{d-1}) the amplitude on basis state o_k is
///   e^{iγ_k} cos θ_k Π_{j<k} sin θ_j     for k < d-1,
///   e^{iγ_{d-1}} Π_{j<d-1} sin θ_j        for k = d-1.
/// Any angle values give a unit vector.
struct PartyParams {
    std::vector<double> thetas;          // d - 1 angles
    std::vector<double> gammas;          // d phases
    std::vector<std::size_t> order;      // permutation of 0..d-1

    std::size_t dim() const noexcept { return gammas.size(); }

    /// All angles zero and identity order: the basis state |0>.
    static PartyParams identity(std::size_t dim);
};

/// Throws DomainError if the vector lengths disagree or `order` is not a permutation.
void validate(const PartyParams& p);

Amplitudes to_amplitudes(const PartyParams& p);

/// Inverse of to_amplitudes for a given nesting order. Angles land in [0, π/2];
/// phases carry the signs. Angles past a vanishing prefix of sines are set to 0.
/// Throws DomainError on the zero vector or an invalid order. `v` need not be
/// exactly unit-norm; it is treated as its own direction.
PartyParams from_amplitudes(std::span<const Complex> v, std::vector<std::size_t> order);

/// Same state, nesting order cyclically rotated so that `basis_index` comes first.
PartyParams rotate_leftmost(const PartyParams& p, std::size_t basis_index);

/// One PartyParams per block of the partition.
struct ProductParams {
    Partition partition;
    std::vector<PartyParams> parties;

    explicit ProductParams(Partition part);
    ProductParams(Partition part, std::vector<PartyParams> params);

    /// Per-party states from explicit amplitude vectors (identity nesting order).
    static ProductParams from_party_states(Partition part, const std::vector<Amplitudes>& states);

    /// Full 2^n amplitude vector of |φ_1> ⊗ ... ⊗ |φ_m>, mapped through the partition.
    Amplitudes product_amplitudes() const;
};

}  // namespace groverian
