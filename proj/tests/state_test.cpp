#include <gtest/gtest.h>

#include <cmath>

#include "groverian/errors.hpp"
#include "groverian/state.hpp"

using namespace groverian;

namespace {

void expect_amplitudes(const PureState& s, const std::vector<Complex>& ref, double tol = 1e-15) {
    ASSERT_EQ(s.dim(), ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(s[i].real(), ref[i].real(), tol) << "i=" << i;
        EXPECT_NEAR(s[i].imag(), ref[i].imag(), tol) << "i=" << i;
    }
}

}  // namespace

TEST(State, GhzThreeQubitsEqualWeights) {
    const double r = 1 / std::sqrt(2.0);
    const auto s = make_ghz(3, r, r);
    expect_amplitudes(s, {r, 0, 0, 0, 0, 0, 0, r});
    EXPECT_EQ(s.family(), StateFamily::ghz);
}

TEST(State, GhzDegenerateAndUnequal) {
    expect_amplitudes(make_ghz(1, 1.0, 0.0), {1, 0});
    const auto s = make_ghz(4, 0.6, 0.8);
    EXPECT_DOUBLE_EQ(s[0].real(), 0.6);
    EXPECT_DOUBLE_EQ(s[15].real(), 0.8);
    for (std::size_t i = 1; i < 15; ++i) EXPECT_EQ(s[i], Complex{});
}

TEST(State, GhzRejectsUnnormalizedCoefficients) {
    EXPECT_THROW(make_ghz(3, 1.0, 1.0), NormalizationError);
}

TEST(State, WState) {
    const double r2 = 1 / std::sqrt(2.0);
    expect_amplitudes(make_w(2), {0, r2, r2, 0});
    expect_amplitudes(make_w(1), {0, 1});
    const double r3 = 1 / std::sqrt(3.0);
    expect_amplitudes(make_w(3), {0, r3, r3, 0, r3, 0, 0, 0});
    EXPECT_THROW(make_w(0), DomainError);
    EXPECT_EQ(make_w(3).family(), StateFamily::w);
}

TEST(State, Eta) {
    const double r = 1 / std::sqrt(2.0);
    expect_amplitudes(make_eta(1), {r, r});
    expect_amplitudes(make_eta(2), {0.5, 0.5, 0.5, 0.5});
    const auto s = make_eta(3);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(s[i].real(), 1 / std::sqrt(8.0), 1e-15);
    EXPECT_THROW(make_eta(0), DomainError);
}

TEST(State, RandomStateIsDeterministicAndNormalized) {
    const auto a = make_random_state(2, 42);
    const auto b = make_random_state(2, 42);
    for (std::size_t i = 0; i < a.dim(); ++i) EXPECT_EQ(a[i], b[i]);
    for (int n = 1; n <= 8; ++n) {
        EXPECT_NEAR(norm_squared(make_random_state(n, 7 + n).amplitudes()), 1.0, 1e-12);
    }
    EXPECT_EQ(make_random_state(3, 1).family(), StateFamily::generic);
}

TEST(State, RandomStateIsUniformOnSphere) {
    // E|a_0|^2 = 1/4 for a uniformly random state in C^4
    double mean = 0;
    const int samples = 10000;
    for (int s = 0; s < samples; ++s) mean += std::norm(make_random_state(2, static_cast<std::uint64_t>(s))[0]);
    mean /= samples;
    EXPECT_NEAR(mean, 0.25, 0.02);
}

TEST(State, ConstructorValidates) {
    EXPECT_THROW(PureState(2, Amplitudes(3, 0.5)), DomainError);
    EXPECT_THROW(PureState(1, Amplitudes{1.0, 1.0}), NormalizationError);
    EXPECT_THROW(PureState(0, Amplitudes{1.0}), DomainError);
    EXPECT_THROW(PureState::normalized(1, Amplitudes{0.0, 0.0}), DomainError);
    EXPECT_NO_THROW(PureState(1, Amplitudes{1.0, 1e-7}));  // |1e-7|^2 is within tolerance
    const auto s = PureState::normalized(1, {3.0, 4.0});
    EXPECT_DOUBLE_EQ(s[0].real(), 0.6);
    EXPECT_THROW(make_basis(2, 4), DomainError);
}
