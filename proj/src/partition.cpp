#include "groverian/partition.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "groverian/errors.hpp"
#include "groverian/state.hpp"

namespace groverian {

Partition::Partition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n < 1 || n > kMaxQubits) throw DomainError("partition qubit count out of range");
    if (blocks_.empty() || static_cast<int>(blocks_.size()) > n) {
        throw DomainError("party count must be in [1, n]");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& b : blocks_) {
        if (b.empty()) throw DomainError("partition has an empty party");
        for (int q : b) {
            if (q < 0 || q >= n) {
                throw DomainError("qubit index " + std::to_string(q) + " out of range for n=" +
                                  std::to_string(n));
            }
            if (seen[static_cast<std::size_t>(q)]) {
                throw DomainError("qubit " + std::to_string(q) + " appears in more than one party");
            }
            seen[static_cast<std::size_t>(q)] = true;
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw DomainError("partition does not cover every qubit");
    }
}

Partition Partition::parse(std::string_view text, int n) {
    std::vector<Block> blocks(1);
    std::size_t pos = 0;
    bool expect_number = true;
    while (pos < text.size()) {
        const char c = text[pos];
        if (c == ' ') {
            ++pos;
        } else if (c == '|' || c == ',') {
            if (expect_number) {
                throw ParseError("partition: expected qubit index at position " +
                                     std::to_string(pos + 1),
                                 1, pos + 1);
            }
            if (c == '|') blocks.emplace_back();
            expect_number = true;
            ++pos;
        } else if (c >= '0' && c <= '9') {
            if (!expect_number) {
                throw ParseError("partition: unexpected digit at position " +
                                     std::to_string(pos + 1),
                                 1, pos + 1);
            }
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
            if (ec != std::errc{}) {
                throw ParseError("partition: bad number at position " + std::to_string(pos + 1), 1,
                                 pos + 1);
            }
            blocks.back().push_back(value);
            pos = static_cast<std::size_t>(ptr - text.data());
            expect_number = false;
        } else {
            throw ParseError(std::string("partition: unexpected character '") + c +
                                 "' at position " + std::to_string(pos + 1),
                             1, pos + 1);
        }
    }
    if (expect_number) {
        throw ParseError("partition: expected qubit index at end of input", 1, text.size() + 1);
    }
    return Partition(n, std::move(blocks));
}

Partition Partition::full(int n) {
    std::vector<Block> blocks;
    for (int q = 0; q < n; ++q) blocks.push_back({q});
    return Partition(n, std::move(blocks));
}

std::string Partition::to_string() const {
    std::string s;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) s += ',';
            s += std::to_string(blocks_[b][i]);
        }
    }
    return s;
}

Partition Partition::canonical() const {
    auto blocks = blocks_;
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const Block& a, const Block& b) { return a.front() < b.front(); });
    return Partition(n_, std::move(blocks));
}

std::uint64_t stirling2(int n, int m) {
    if (n < 0 || m < 0) return 0;
    // row[k] = S(i, k)
    std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int k = std::min(i, m); k >= 1; --k) {
            row[k] = static_cast<std::uint64_t>(k) * row[k] + row[k - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(m)];
}

namespace {

// Restricted growth strings a[0..n-1] with a[0] = 0, a[i] ≤ 1 + max(a[0..i-1]),
// using exactly m distinct labels, visited in lexicographic order.
void enumerate_rgs(int n, int m, int i, int used, std::vector<int>& labels,
                   std::vector<Partition>& out) {
    if (n - i < m - used) return;  // not enough positions left to open the missing blocks
    if (i == n) {
        std::vector<Block> blocks(static_cast<std::size_t>(m));
        for (int q = 0; q < n; ++q) blocks[static_cast<std::size_t>(labels[q])].push_back(q);
        out.emplace_back(n, std::move(blocks));
        return;
    }
    for (int label = 0; label <= std::min(used, m - 1); ++label) {
        labels[static_cast<std::size_t>(i)] = label;
        enumerate_rgs(n, m, i + 1, std::max(used, label + 1), labels, out);
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int m) {
    if (n < 1 || n > kMaxQubits) throw DomainError("qubit count out of range");
    if (m < 1 || m > n) throw DomainError("party count must be in [1, n]");
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(stirling2(n, m)));
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    enumerate_rgs(n, m, 0, 0, labels, out);
    return out;
}

Partition single_qubit_plus_rest_partition(int n, int m) {
    if (n < 1 || n > kMaxQubits) throw DomainError("qubit count out of range");
    if (m < 1 || m > n) throw DomainError("party count must be in [1, n]");
    std::vector<Block> blocks;
    for (int q = 0; q < m - 1; ++q) blocks.push_back({q});
    Block rest;
    for (int q = m - 1; q < n; ++q) rest.push_back(q);
    blocks.push_back(std::move(rest));
    return Partition(n, std::move(blocks));
}

PartyIndexer::PartyIndexer(const Partition& partition)
    : parties_(partition.parties()), size_(std::size_t{1} << partition.n()) {
    const int n = partition.n();
    table_.assign(static_cast<std::size_t>(parties_) * size_, 0);
    for (int p = 0; p < parties_; ++p) {
        const auto& block = partition.block(p);
        auto* row = table_.data() + static_cast<std::size_t>(p) * size_;
        for (std::size_t i = 0; i < size_; ++i) {
            std::uint32_t local = 0;
            for (int q : block) local = (local << 1) | static_cast<std::uint32_t>((i >> (n - 1 - q)) & 1U);
            row[i] = local;
        }
    }
}

}  // namespace groverian
