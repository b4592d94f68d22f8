// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace vorder {

/// Vertex subset of a universe of at most 32 vertices, bit v = vertex v.
using Subset = std::uint32_t;

inline constexpr std::size_t kMaxUniverse = 32;

inline std::size_t cardinality(Subset s) noexcept { return static_cast<std::size_t>(std::popcount(s)); }

inline Subset full_set(std::size_t n) noexcept {
    return n >= 32 ? ~Subset{0} : static_cast<Subset>((std::uint64_t{1} << n) - 1);
}

inline Subset singleton(Vertex v) noexcept { return Subset{1} << v; }

inline bool contains(Subset s, Vertex v) noexcept { return (s >> v) & 1u; }

inline std::vector<Vertex> members(Subset s) {
    std::vector<Vertex> out;
    out.reserve(cardinality(s));
    for (; s; s &= s - 1) out.push_back(static_cast<Vertex>(std::countr_zero(s)));
    return out;
}

inline Subset to_subset(std::span<const Vertex> vertices) {
    Subset s = 0;
    for (Vertex v : vertices) s |= singleton(v);
    return s;
}

/// Lexicographic order on the ascending member lists.
inline bool lex_less(Subset a, Subset b) noexcept {
    const Subset diff = a ^ b;
    if (diff == 0) return false;
    const Subset low = diff & (~diff + 1);
    const Subset at_or_below = low | (low - 1);
    if (a & low) return (b & ~at_or_below) != 0;
    return (a & ~at_or_below) == 0;
}

/// Calls f(s) for every s subset of {0..n-1} with |s| = k, in increasing
/// numeric order.
template <class F>
void for_each_subset_of_size(std::size_t n, std::size_t k, F &&f) {
    if (k > n) return;
    if (k == 0) {
        f(Subset{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < limit) {
        f(static_cast<Subset>(s));
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// Every k-subset of `within`, in lexicographic order of member lists.
inline std::vector<Subset> subsets_lex(Subset within, std::size_t k) {
    const auto base = members(within);
    std::vector<Subset> out;
    if (k > base.size()) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Subset s = 0;
        for (std::size_t i : idx) s |= singleton(base[i]);
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == base.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Maps subsets of size <= cap onto a contiguous index range: the subset
/// itself when cap == n, otherwise a size-level offset plus colex rank.
class SubsetIndexer {
public:
    SubsetIndexer(std::size_t n, std::size_t cap) : n_(n), cap_(cap), dense_(cap == n) {
        if (n > kMaxUniverse) throw size_limit_error("subset universe exceeds 32 vertices");
        if (cap > n) throw std::invalid_argument("size cap exceeds universe");
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j) choose_[i][j] = binomial(i, j);
        offset_.assign(cap + 2, 0);
        for (std::size_t k = 0; k <= cap; ++k) offset_[k + 1] = offset_[k] + choose_[n][k];
    }

    std::size_t universe() const noexcept { return n_; }
    std::size_t cap() const noexcept { return cap_; }

    /// Number of subsets with |S| <= cap.
    std::uint64_t entries() const noexcept { return offset_[cap_ + 1]; }

    /// Storage slots (2^n when dense).
    std::uint64_t slots() const noexcept { return dense_ ? (std::uint64_t{1} << n_) : entries(); }

    bool covers(Subset s) const noexcept { return (s & ~full_set(n_)) == 0 && cardinality(s) <= cap_; }

    std::size_t index(Subset s) const noexcept {
        if (dense_) return s;
        std::uint64_t rank = 0;
        std::size_t j = 0;
        for (Subset t = s; t; t &= t - 1) rank += choose_[std::countr_zero(t)][++j];
        return static_cast<std::size_t>(offset_[j] + rank);
    }

private:
    std::size_t n_;
    std::size_t cap_;
    bool dense_;
    std::array<std::array<std::uint64_t, kMaxUniverse + 1>, kMaxUniverse + 1> choose_{};
    std::vector<std::uint64_t> offset_;
};

/**
 * Value table over vertex subsets, shared by the subset dynamic programs.
 *
 * value(S) is the optimum over orderings of S placed as a prefix;
 * last_vertex(S) is the smallest vertex attaining the recurrence minimum,
 * so prefix_sequence() reconstructs an optimal prefix ordering.
 */
class SubsetTable {
public:
    static constexpr Vertex none = std::numeric_limits<Vertex>::max();

    SubsetTable(Objective objective, std::size_t n, std::size_t size_cap)
        : objective_(objective), indexer_(n, size_cap) {
        value_.assign(indexer_.slots(), 0);
        last_.assign(indexer_.slots(), static_cast<std::uint8_t>(0xff));
    }

    Objective objective() const noexcept { return objective_; }
    std::size_t universe() const noexcept { return indexer_.universe(); }
    std::size_t size_cap() const noexcept { return indexer_.cap(); }
    std::uint64_t entries() const noexcept { return indexer_.entries(); }
    const SubsetIndexer &indexer() const noexcept { return indexer_; }

    bool covers(Subset s) const noexcept { return indexer_.covers(s); }

    Weight value(Subset s) const {
        require(s);
        return value_[indexer_.index(s)];
    }

    Vertex last_vertex(Subset s) const {
        require(s);
        const auto v = last_[indexer_.index(s)];
        return v == 0xff ? none : Vertex{v};
    }

    /// Optimal ordering of S as a prefix, first vertex first.
    std::vector<Vertex> prefix_sequence(Subset s) const {
        require(s);
        std::vector<Vertex> seq(cardinality(s));
        for (std::size_t i = seq.size(); i-- > 0;) {
            const Vertex v = last_vertex(s);
            seq[i] = v;
            s &= ~singleton(v);
        }
        return seq;
    }

    void set(Subset s, Weight value, Vertex last) {
        const auto i = indexer_.index(s);
        value_[i] = value;
        last_[i] = last == none ? std::uint8_t{0xff} : static_cast<std::uint8_t>(last);
    }

private:
    void require(Subset s) const {
        if (!indexer_.covers(s)) throw std::out_of_range("subset not covered by table");
    }

    Objective objective_;
    SubsetIndexer indexer_;
    std::vector<Weight> value_;
    std::vector<std::uint8_t> last_;
};

}  // namespace vorder
