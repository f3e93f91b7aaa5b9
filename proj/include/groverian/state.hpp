#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace groverian {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Absolute tolerance on Σ|a_i|² − 1 for a state to count as normalized.
inline constexpr double kNormTolerance = 1e-12;

/// Dense states are limited to this many qubits.
inline constexpr int kMaxQubits = 14;

/// Which constructor produced a state. Only states built by make_ghz / make_w
/// carry a family tag; everything else (files, random, arithmetic) is `generic`.
enum class StateFamily { generic, ghz, w };

/// Normalized pure state of an n-qubit register.
///
/// Basis index convention: qubit 0 is the most significant bit, so
/// |x_0 x_1 ... x_{n-1}> has index Σ x_q 2^{n-1-q}.
class PureState {
public:
    /// Throws NormalizationError unless Σ|a|² = 1 within kNormTolerance,
    /// DomainError if the length is not 2^n.
    PureState(int n, Amplitudes amplitudes);

    /// Rescales `amplitudes` to unit norm. DomainError on the zero vector.
    static PureState normalized(int n, Amplitudes amplitudes);

    int n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    StateFamily family() const noexcept { return family_; }
    /// GHZ coefficients (a0, a1); meaningful only when family() == ghz.
    Complex ghz_a0() const noexcept { return ghz_a0_; }
    Complex ghz_a1() const noexcept { return ghz_a1_; }

private:
    friend PureState make_ghz(int, Complex, Complex);
    friend PureState make_w(int);

    int n_;
    Amplitudes amplitudes_;
    StateFamily family_ = StateFamily::generic;
    Complex ghz_a0_{};
    Complex ghz_a1_{};
};

/// Basis-state index flagged by the Grover oracle.
struct MarkedElement {
    std::uint64_t index = 0;
};

double norm_squared(std::span<const Complex> v);

/// Computational basis state |index>.
PureState make_basis(int n, std::uint64_t index);

/// a0|0...0> + a1|1...1>.
PureState make_ghz(int n, Complex a0, Complex a1);

/// Equal superposition of the n one-hot basis states.
PureState make_w(int n);

/// Uniform superposition over all 2^n basis states, normalized.
PureState make_eta(int n);

/// Haar-random state: i.i.d. standard complex normal amplitudes, normalized.
/// Reproducible for a given (n, seed).
PureState make_random_state(int n, std::uint64_t seed);

}  // namespace groverian
