#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "groverian/errors.hpp"
#include "groverian/optimizer.hpp"
#include "groverian/oracles.hpp"
#include "oracles.hpp"

using namespace groverian;

namespace {
const double kR = 1 / std::sqrt(2.0);
}

TEST(BipartitePmax, Examples) {
    EXPECT_NEAR(bipartite_pmax(make_ghz(3, kR, kR), Partition::parse("0,1|2", 3)), 0.5, 1e-12);
    EXPECT_NEAR(bipartite_pmax(make_w(5), Partition::parse("0,1|2,3,4", 5)), 0.6, 1e-12);
    EXPECT_THROW(bipartite_pmax(make_w(3), Partition::full(3)), DomainError);
    EXPECT_THROW(bipartite_pmax(make_w(3), Partition::parse("0|1", 2)), DomainError);
}

TEST(BipartitePmax, AgreesWithOptimizer) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 5; ++t) {
        const auto s = make_random_state(4, 40 + t);
        const auto part = ref::random_partition(4, 2, rng);
        EXPECT_NEAR(optimize(s, part).pmax, bipartite_pmax(s, part), 1e-6) << part.to_string();
    }
}

TEST(BipartitePmax, InvariantUnderSwappingBlocks) {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 30; ++t) {
        const int n = 2 + t % 6;
        const auto s = make_random_state(n, 70 + t);
        const auto part = ref::random_partition(n, 2, rng);
        const Partition swapped(n, {part.block(1), part.block(0)});
        EXPECT_NEAR(bipartite_pmax(s, part), bipartite_pmax(s, swapped), 1e-10);
    }
}

TEST(BipartitePmax, WStateKVersusRestLaw) {
    for (int n = 2; n <= 10; ++n) {
        const auto w = make_w(n);
        for (int k = 1; k < n; ++k) {
            std::vector<Block> blocks(2);
            for (int q = 0; q < n; ++q) blocks[q < k ? 0 : 1].push_back(q);
            const double expected = std::max(double(k) / n, 1.0 - double(k) / n);
            EXPECT_NEAR(bipartite_pmax(w, Partition(n, blocks)), expected, 1e-12) << n << ' ' << k;
        }
    }
}

TEST(GridSearch, Examples) {
    EXPECT_GE(grid_search_pmax(make_basis(2, 0), Partition::full(2), 32), 0.99);
    EXPECT_NEAR(grid_search_pmax(make_ghz(2, kR, kR), Partition::full(2), 64), 0.5, 2e-2);
    for (int t = 0; t < 5; ++t) {
        const auto s = make_random_state(2, 200 + t);
        const double spectral = bipartite_pmax(s, Partition::full(2));
        const double grid = grid_search_pmax(s, Partition::full(2), 32);
        EXPECT_LE(grid, spectral + 1e-12);
        EXPECT_NEAR(grid, spectral, 2e-2);
    }
}

TEST(GridSearch, ApproachesSpectralValueAsStepsGrow) {
    const auto s = make_random_state(2, 5);
    const double spectral = bipartite_pmax(s, Partition::full(2));
    const double coarse = spectral - grid_search_pmax(s, Partition::full(2), 8);
    const double fine = spectral - grid_search_pmax(s, Partition::full(2), 64);
    EXPECT_GE(coarse, 0);
    EXPECT_GE(fine, 0);
    EXPECT_LT(fine, coarse);
    EXPECT_LT(fine, 5e-3);
}

TEST(GridSearch, Refusals) {
    EXPECT_THROW(grid_search_pmax(make_w(2), Partition::full(2), 7), DomainError);
    // 3 + 3 + 3 + 3 + 3 = 15 parameters
    EXPECT_THROW(grid_search_pmax(make_w(5), Partition::full(5), 8), BudgetError);
    // 2-qubit party: 24^6 grid points
    EXPECT_THROW(grid_search_pmax(make_w(2), Partition::parse("0,1", 2), 24), BudgetError);
    EXPECT_NO_THROW(grid_search_pmax(make_w(2), Partition::parse("0,1", 2), 8));
    try {
        grid_search_pmax(make_w(5), Partition::full(5), 8);
    } catch (const BudgetError& e) {
        EXPECT_EQ(e.required(), 15u);
    }
}

TEST(GhzPmax, Examples) {
    EXPECT_NEAR(ghz_pmax(kR, kR), 0.5, 1e-15);
    EXPECT_EQ(ghz_pmax(1.0, 0.0), 1.0);
    EXPECT_NEAR(ghz_pmax(0.6, 0.8), 0.64, 1e-15);
    EXPECT_THROW(ghz_pmax(0.6, 0.6), NormalizationError);
}

TEST(GhzPmax, OptimizerAgreesForAnyPartition) {
    std::mt19937_64 rng(6);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 3; ++t) {
            const int m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            const auto part = ref::random_partition(n, m, rng);
            const auto s = make_ghz(n, 0.6, Complex(0, 0.8));
            EXPECT_NEAR(optimize(s, part).pmax, 0.64, 1e-6) << part.to_string();
        }
    }
}

TEST(WPmax, ClosedForms) {
    EXPECT_NEAR(*w_pmax(6, w_kind::Full{}), std::pow(5.0 / 6.0, 5), 1e-15);
    EXPECT_NEAR(*w_pmax(6, w_kind::Full{}), 0.401877572, 1e-9);
    EXPECT_NEAR(*w_pmax(7, w_kind::OneQubitParties{3}), 5.0 / 7.0, 1e-15);
    EXPECT_NEAR(*w_pmax(2, w_kind::KVsRest{1}), 0.5, 1e-15);
    EXPECT_NEAR(*w_pmax(9, w_kind::KVsRest{2}), 7.0 / 9.0, 1e-15);
    EXPECT_NEAR(*w_pmax(5, w_kind::OneQubitParties{2}), 0.8, 1e-15);
    EXPECT_EQ(*w_pmax(5, w_kind::OneQubitParties{1}), 1.0);
    EXPECT_NEAR(*w_pmax(4, w_kind::OneQubitParties{4}), 0.421875, 1e-15);
}

TEST(WPmax, TabulatedAndNumericOnlyCells) {
    EXPECT_NEAR(*w_pmax(4, w_kind::OneQubitParties{3}), 0.5, 1e-15);
    EXPECT_NEAR(*w_pmax(5, w_kind::OneQubitParties{3}), 0.6, 1e-15);
    EXPECT_NEAR(*w_pmax(6, w_kind::OneQubitParties{4}), 0.5, 1e-15);
    EXPECT_NEAR(*w_pmax(7, w_kind::OneQubitParties{4}), 4.0 / 7.0, 1e-15);
    EXPECT_FALSE(w_pmax(5, w_kind::OneQubitParties{4}).has_value());
    EXPECT_FALSE(w_pmax(6, w_kind::OneQubitParties{5}).has_value());
    EXPECT_FALSE(w_pmax(7, w_kind::OneQubitParties{5}).has_value());
    EXPECT_FALSE(w_pmax(7, w_kind::OneQubitParties{6}).has_value());
    EXPECT_FALSE(w_pmax(8, w_kind::OneQubitParties{3}).has_value());
}

TEST(WPmax, DomainErrors) {
    EXPECT_THROW(w_pmax(1, w_kind::Full{}), DomainError);
    EXPECT_THROW(w_pmax(4, w_kind::KVsRest{4}), DomainError);
    EXPECT_THROW(w_pmax(4, w_kind::KVsRest{0}), DomainError);
    EXPECT_THROW(w_pmax(4, w_kind::OneQubitParties{5}), DomainError);
}
