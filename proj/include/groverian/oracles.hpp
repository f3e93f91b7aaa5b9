#pragma once

#include <complex>
#include <optional>
#include <variant>

#include "groverian/partition.hpp"
#include "groverian/state.hpp"

namespace groverian {

/// Largest squared singular value of ψ reshaped as (block 0) × (block 1),
/// i.e. the largest eigenvalue of either reduced density matrix.
/// Throws DomainError unless the partition has exactly two blocks.
double bipartite_pmax(const PureState& state, const Partition& partition);

/// Exhaustive grid maximum of |f|² with `steps` points per angle and phase.
/// Always a lower bound on the true P_max.
/// Refuses (BudgetError) when Σ_parties (2·dim − 1) > 12 or a single party's
/// grid would exceed 10^7 points; DomainError when steps < 8.
double grid_search_pmax(const PureState& state, const Partition& partition, int steps);

/// max(|a0|², |a1|²): generalized GHZ states, any n, any partition.
double ghz_pmax(Complex a0, Complex a1);

namespace w_kind {
struct Full {};
/// One party with k qubits, the other with n − k.
struct KVsRest { int k; };
/// m − 1 single-qubit parties plus one party with the remaining qubits.
struct OneQubitParties { int m; };
}  // namespace w_kind

using WPartitionKind = std::variant<w_kind::Full, w_kind::KVsRest, w_kind::OneQubitParties>;

/// Closed-form or tabulated P_max of the n-qubit W state. Returns nullopt for
/// one-qubit-party cells that are only known numerically.
std::optional<double> w_pmax(int n, const WPartitionKind& kind);

}  // namespace groverian
