#include "groverian/state.hpp"

#include <cmath>
#include <random>
#include <string>

#include "groverian/errors.hpp"

namespace groverian {

namespace {

void check_qubits(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw DomainError("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                          "], got " + std::to_string(n));
    }
}

}  // namespace

double norm_squared(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& a : v) s += std::norm(a);
    return s;
}

PureState::PureState(int n, Amplitudes amplitudes) : n_(n), amplitudes_(std::move(amplitudes)) {
    check_qubits(n);
    if (amplitudes_.size() != (std::size_t{1} << n)) {
        throw DomainError("expected " + std::to_string(std::size_t{1} << n) +
                          " amplitudes for n=" + std::to_string(n) + ", got " +
                          std::to_string(amplitudes_.size()));
    }
    const double s = norm_squared(amplitudes_);
    if (!(std::abs(s - 1.0) <= kNormTolerance)) {
        throw NormalizationError("state is not normalized: sum |a|^2 = " + std::to_string(s));
    }
}

PureState PureState::normalized(int n, Amplitudes amplitudes) {
    const double s = norm_squared(amplitudes);
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("cannot normalize the zero vector");
    const double inv = 1.0 / std::sqrt(s);
    for (auto& a : amplitudes) a *= inv;
    return PureState(n, std::move(amplitudes));
}

PureState make_basis(int n, std::uint64_t index) {
    check_qubits(n);
    const std::size_t dim = std::size_t{1} << n;
    if (index >= dim) throw DomainError("basis index out of range");
    Amplitudes a(dim);
    a[index] = 1.0;
    return PureState(n, std::move(a));
}

PureState make_ghz(int n, Complex a0, Complex a1) {
    check_qubits(n);
    const double s = std::norm(a0) + std::norm(a1);
    if (!(std::abs(s - 1.0) <= kNormTolerance)) {
        throw NormalizationError("GHZ coefficients must satisfy |a0|^2 + |a1|^2 = 1");
    }
    const std::size_t dim = std::size_t{1} << n;
    Amplitudes a(dim);
    a[0] += a0;
    a[dim - 1] += a1;  // n = 1: both land on distinct indices 0 and 1
    PureState st(n, std::move(a));
    st.family_ = StateFamily::ghz;
    st.ghz_a0_ = a0;
    st.ghz_a1_ = a1;
    return st;
}

PureState make_w(int n) {
    check_qubits(n);
    Amplitudes a(std::size_t{1} << n);
    const double v = 1.0 / std::sqrt(static_cast<double>(n));
    for (int i = 0; i < n; ++i) a[std::size_t{1} << i] = v;
    PureState st = PureState::normalized(n, std::move(a));
    st.family_ = StateFamily::w;
    return st;
}

PureState make_eta(int n) {
    check_qubits(n);
    const std::size_t dim = std::size_t{1} << n;
    return PureState::normalized(n, Amplitudes(dim, Complex{1.0, 0.0}));
}

PureState make_random_state(int n, std::uint64_t seed) {
    check_qubits(n);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Amplitudes a(std::size_t{1} << n);
    for (auto& x : a) {
        const double re = normal(rng);
        const double im = normal(rng);
        x = {re, im};
    }
    return PureState::normalized(n, std::move(a));
}

}  // namespace groverian
