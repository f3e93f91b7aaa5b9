#pragma once

#include <cstdint>
#include <vector>

#include "groverian/partition.hpp"
#include "groverian/product_params.hpp"
#include "groverian/state.hpp"

namespace groverian {

/// f as a function of one party's leftmost coordinate pair, everything else fixed:
///   f(θ, γ) = c0 sin θ + e^{-iγ} d0 cos θ.
/// The phase enters conjugated because f = <φ|ψ> conjugates the party amplitude
/// e^{iγ} cos θ.
struct LinearCoefficients {
    Complex c0;
    Complex d0;

    Complex evaluate(double theta, double gamma) const;
};

/// Closed-form maximizer of |f(θ, γ)|² for one coordinate pair.
struct CoordinateStep {
    double theta = 0.0;
    double gamma = 0.0;
    double value = 0.0;      // |c0|² + |d0|²
    bool degenerate = false; // c0 = d0 = 0, angles left as given
};

enum class UpdateMode { coordinate, party, hybrid };

struct OptimizerConfig {
    int restarts = 20;
    int max_sweeps = 10000;
    double tol = 1e-12;
    std::uint64_t seed = 1;
    UpdateMode mode = UpdateMode::coordinate;
    /// Visit (party, basis state) pairs in a fixed cyclic order instead of at random.
    bool cyclic = false;
    /// Keep |f|² after every single update in OptResult::trace (first restart only).
    bool record_trace = false;
};

/// Throws DomainError unless restarts ≥ 1, max_sweeps ≥ 1 and tol > 0.
void validate(const OptimizerConfig& config);

struct OptResult {
    double pmax = 0.0;
    ProductParams argmax;
    int sweeps_used = 0;             // total over all restarts
    std::vector<double> restart_values;
    std::vector<bool> restart_converged;
    bool converged = false;          // at least one restart met tol
    std::vector<double> trace;
};

/// f = (<φ_1| ⊗ ... ⊗ <φ_m|) |ψ>.
Complex overlap(const PureState& state, const ProductParams& params);

/// ψ contracted with the conjugated states of every party except `party`;
/// a vector over that party's basis. f = Σ_j conj(φ_party[j]) M[j].
Amplitudes partial_contraction(const PureState& state, const ProductParams& params, int party);

/// Coefficients for the leftmost coordinate (order[0]) of `party`.
LinearCoefficients extract_coefficients(const PureState& state, const ProductParams& params,
                                        int party);

/// Maximizes |c0 sin θ + e^{-iγ} d0 cos θ|² in closed form:
/// γ = arg d0 − arg c0, cos θ = |d0|/r, sin θ = |c0|/r with r² = |c0|² + |d0|².
CoordinateStep coordinate_update(const LinearCoefficients& coeffs, double theta = 0.0,
                                 double gamma = 0.0);

struct PartyUpdate {
    ProductParams params;
    double value = 0.0;  // |f|² after the update
    bool degenerate = false;
};

/// Replaces the party's state with its normalized partial contraction, the
/// optimal choice with all other parties fixed.
PartyUpdate party_update(const PureState& state, const ProductParams& params, int party);

/// Randomized coordinate ascent of |f|² over product states of `partition`.
OptResult optimize(const PureState& state, const Partition& partition,
                   const OptimizerConfig& config = {});

}  // namespace groverian
