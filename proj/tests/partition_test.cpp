#include <gtest/gtest.h>

#include <random>
#include <set>

#include "groverian/errors.hpp"
#include "groverian/partition.hpp"
#include "oracles.hpp"

using namespace groverian;

TEST(Partition, ParseAndFormat) {
    const auto p = Partition::parse("0,1|2|3,4,5", 6);
    EXPECT_EQ(p.parties(), 3);
    EXPECT_EQ(p.block(0), (Block{0, 1}));
    EXPECT_EQ(p.block(2), (Block{3, 4, 5}));
    EXPECT_EQ(p.to_string(), "0,1|2|3,4,5");
    EXPECT_EQ(p.party_dim(2), 8u);
    EXPECT_EQ(Partition::parse("2 | 0,1", 3).to_string(), "2|0,1");
}

TEST(Partition, ParseErrors) {
    EXPECT_THROW(Partition::parse("0,|1", 2), ParseError);
    EXPECT_THROW(Partition::parse("0||1", 2), ParseError);
    EXPECT_THROW(Partition::parse("0|1|", 2), ParseError);
    EXPECT_THROW(Partition::parse("0;1", 2), ParseError);
    EXPECT_THROW(Partition::parse("", 2), ParseError);
    EXPECT_THROW(Partition::parse("0|1", 3), DomainError);      // qubit 2 missing
    EXPECT_THROW(Partition::parse("0,1|1,2", 3), DomainError);  // overlap
    EXPECT_THROW(Partition::parse("0|3", 2), DomainError);      // out of range
    try {
        Partition::parse("0|x", 2);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(Partition, EnumerateSmallCases) {
    const auto full = enumerate_partitions(3, 3);
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(full[0].to_string(), "0|1|2");

    std::set<std::string> two;
    for (const auto& p : enumerate_partitions(3, 2)) two.insert(p.to_string());
    EXPECT_EQ(two, (std::set<std::string>{"0|1,2", "0,1|2", "0,2|1"}));

    EXPECT_EQ(enumerate_partitions(4, 2).size(), 7u);
    EXPECT_THROW(enumerate_partitions(3, 0), DomainError);
    EXPECT_THROW(enumerate_partitions(3, 4), DomainError);
}

TEST(Partition, CountMatchesStirlingRecursionAndBruteForce) {
    for (int n = 1; n <= 8; ++n) {
        for (int m = 1; m <= n; ++m) {
            const auto parts = enumerate_partitions(n, m);
            const auto expected = ref::brute_force_stirling(n, m);
            EXPECT_EQ(parts.size(), expected) << "n=" << n << " m=" << m;
            EXPECT_EQ(stirling2(n, m), expected);
        }
    }
}

TEST(Partition, EnumeratedPartitionsAreCanonicalAndDistinct) {
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= n; ++m) {
            std::set<std::string> seen;
            for (const auto& p : enumerate_partitions(n, m)) {
                EXPECT_EQ(p.parties(), m);
                EXPECT_EQ(p, p.canonical());
                EXPECT_TRUE(seen.insert(p.to_string()).second) << p.to_string();
            }
        }
    }
}

TEST(Partition, SingleQubitPlusRest) {
    EXPECT_EQ(single_qubit_plus_rest_partition(5, 3).to_string(), "0|1|2,3,4");
    EXPECT_EQ(single_qubit_plus_rest_partition(4, 4).to_string(), "0|1|2|3");
    EXPECT_EQ(single_qubit_plus_rest_partition(6, 1).to_string(), "0,1,2,3,4,5");
    EXPECT_THROW(single_qubit_plus_rest_partition(4, 5), DomainError);
    EXPECT_THROW(single_qubit_plus_rest_partition(4, 0), DomainError);
}

TEST(Partition, ConstructorValidates) {
    EXPECT_THROW(Partition(3, {{0}, {}, {1, 2}}), DomainError);
    EXPECT_THROW(Partition(2, {}), DomainError);
    EXPECT_NO_THROW(Partition(2, {{1}, {0}}));
}

TEST(Partition, IndexerUsesQubitZeroAsMostSignificantBit) {
    // |x0 x1 x2> = |1 0 1> is index 5; party {2,0} reads (x2, x0) = (1, 1) -> 3
    const Partition p(3, {{2, 0}, {1}});
    const PartyIndexer idx(p);
    EXPECT_EQ(idx.local(0, 5), 3u);
    EXPECT_EQ(idx.local(1, 5), 0u);
    EXPECT_EQ(idx.local(0, 4), 1u);  // |100>: x2=0, x0=1
    EXPECT_EQ(idx.local(1, 2), 1u);  // |010>
}
