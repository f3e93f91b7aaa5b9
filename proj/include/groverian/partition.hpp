#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace groverian {

using Block = std::vector<int>;

/// Ordered division of qubits {0..n-1} into m disjoint, non-empty parties.
///
/// Within a party the listed qubit order defines the party's basis: the first
/// listed qubit is the most significant bit of the party-local index.
class Partition {
public:
    /// Throws DomainError unless the blocks are non-empty, disjoint and cover 0..n-1.
    Partition(int n, std::vector<Block> blocks);

    /// Parses "0,1|2|3,4,5". Throws ParseError on syntax errors and DomainError
    /// when the blocks do not form a valid partition of n qubits.
    static Partition parse(std::string_view text, int n);

    /// Every qubit in its own party.
    static Partition full(int n);

    int n() const noexcept { return n_; }
    int parties() const noexcept { return static_cast<int>(blocks_.size()); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    const Block& block(int i) const { return blocks_.at(static_cast<std::size_t>(i)); }

    /// Hilbert-space dimension 2^|block| of party i.
    std::size_t party_dim(int i) const { return std::size_t{1} << block(i).size(); }

    bool is_full_split() const noexcept { return parties() == n_; }

    /// Same format parse() accepts.
    std::string to_string() const;

    /// Blocks sorted by smallest element, elements sorted within blocks.
    Partition canonical() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int n_;
    std::vector<Block> blocks_;
};

/// Stirling number of the second kind S(n, m).
std::uint64_t stirling2(int n, int m);

/// All set partitions of {0..n-1} into exactly m blocks, in canonical form,
/// ordered by restricted-growth string.
std::vector<Partition> enumerate_partitions(int n, int m);

/// Parties {0}, {1}, ..., {m-2} and {m-1, ..., n-1}.
Partition single_qubit_plus_rest_partition(int n, int m);

/// Maps a global basis index to the party-local index of each party.
/// Table is parties() × 2^n.
class PartyIndexer {
public:
    explicit PartyIndexer(const Partition& partition);

    std::uint32_t local(int party, std::size_t global) const {
        return table_[static_cast<std::size_t>(party) * size_ + global];
    }
    std::size_t size() const noexcept { return size_; }
    int parties() const noexcept { return parties_; }

private:
    int parties_;
    std::size_t size_;
    std::vector<std::uint32_t> table_;
};

}  // namespace groverian
