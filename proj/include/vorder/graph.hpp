// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vorder {

using Vertex = std::uint32_t;
using Weight = std::int64_t;

/// Raised when an instance exceeds a configured size guard.
class size_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Objective { fas, cutwidth, ola, dpw };

inline std::string_view to_string(Objective objective) {
    switch (objective) {
        case Objective::fas: return "fas";
        case Objective::cutwidth: return "cutwidth";
        case Objective::ola: return "ola";
        case Objective::dpw: return "dpw";
    }
    return "?";
}

inline std::optional<Objective> parse_objective(std::string_view text) {
    if (text == "fas") return Objective::fas;
    if (text == "cutwidth") return Objective::cutwidth;
    if (text == "ola") return Objective::ola;
    if (text == "dpw") return Objective::dpw;
    return std::nullopt;
}

struct Arc {
    Vertex from;
    Vertex to;
    Weight weight = 1;

    friend bool operator==(const Arc &, const Arc &) = default;
};

/**
 * Simple directed graph with non-negative integer arc weights.
 *
 * An undirected graph is stored as the symmetric digraph holding both
 * orientations of every edge with one shared weight. Because a cut
 * "arcs from later to earlier" then contains exactly one orientation per
 * crossing edge, the directed cut evaluators give undirected semantics
 * without special cases. Arcs are kept sorted by (from, to).
 */
class Digraph {
public:
    Digraph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate arcs, negative
    /// weights or endpoints out of range; std::overflow_error when
    /// n * total weight does not fit the weight type with headroom.
    static Digraph directed(std::size_t n, std::vector<Arc> arcs, bool weighted = false) {
        Digraph g;
        g.n_ = n;
        g.undirected_ = false;
        g.arcs_ = std::move(arcs);
        g.weighted_ = weighted;
        g.finalize();
        return g;
    }

    /// Each edge is listed once; both orientations are stored.
    static Digraph undirected(std::size_t n, const std::vector<Arc> &edges, bool weighted = false) {
        Digraph g;
        g.n_ = n;
        g.undirected_ = true;
        g.weighted_ = weighted;
        g.arcs_.reserve(edges.size() * 2);
        for (const Arc &e : edges) {
            g.arcs_.push_back(e);
            g.arcs_.push_back(Arc{e.to, e.from, e.weight});
        }
        g.finalize();
        return g;
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t arc_count() const noexcept { return arcs_.size(); }
    bool is_undirected() const noexcept { return undirected_; }
    bool is_weighted() const noexcept { return weighted_; }

    std::span<const Arc> arcs() const noexcept { return arcs_; }

    std::span<const Arc> out_arcs(Vertex v) const {
        return std::span<const Arc>(arcs_).subspan(out_begin_[v], out_begin_[v + 1] - out_begin_[v]);
    }

    /// In-arcs of v, ordered by tail.
    std::span<const Arc> in_arcs(Vertex v) const {
        return std::span<const Arc>(in_arcs_).subspan(in_begin_[v], in_begin_[v + 1] - in_begin_[v]);
    }

    bool has_arc(Vertex u, Vertex v) const { return find(u, v) != nullptr; }

    /// Weight of (u,v), or 0 when the arc is absent.
    Weight weight(Vertex u, Vertex v) const {
        const Arc *a = find(u, v);
        return a ? a->weight : 0;
    }

    /// Sum over stored arcs (an undirected edge counts twice).
    Weight total_arc_weight() const noexcept { return total_; }

    /// Sum over edges for undirected graphs, over arcs otherwise.
    Weight total_weight() const noexcept { return undirected_ ? total_ / 2 : total_; }

    Weight max_weight() const noexcept { return max_weight_; }

    Weight in_weight(Vertex v) const { return in_total_[v]; }
    Weight out_weight(Vertex v) const { return out_total_[v]; }

    /// Edges of an undirected graph with from < to, or all arcs.
    std::vector<Arc> edges() const {
        if (!undirected_) return arcs_;
        std::vector<Arc> out;
        for (const Arc &a : arcs_)
            if (a.from < a.to) out.push_back(a);
        return out;
    }

    friend bool operator==(const Digraph &a, const Digraph &b) {
        return a.n_ == b.n_ && a.undirected_ == b.undirected_ && a.weighted_ == b.weighted_ &&
               a.arcs_ == b.arcs_;
    }

private:
    const Arc *find(Vertex u, Vertex v) const {
        if (u >= n_) return nullptr;
        auto out = out_arcs(u);
        auto it = std::lower_bound(out.begin(), out.end(), v,
                                   [](const Arc &a, Vertex target) { return a.to < target; });
        return (it != out.end() && it->to == v) ? &*it : nullptr;
    }

    void finalize() {
        for (const Arc &a : arcs_) {
            if (a.from >= n_ || a.to >= n_)
                throw std::invalid_argument("arc endpoint out of range");
            if (a.from == a.to) throw std::invalid_argument("self-loop");
            if (a.weight < 0) throw std::invalid_argument("negative weight");
            if (a.weight != 1) weighted_ = true;
        }
        std::sort(arcs_.begin(), arcs_.end(), [](const Arc &a, const Arc &b) {
            return std::pair(a.from, a.to) < std::pair(b.from, b.to);
        });
        for (std::size_t i = 1; i < arcs_.size(); ++i)
            if (arcs_[i].from == arcs_[i - 1].from && arcs_[i].to == arcs_[i - 1].to)
                throw std::invalid_argument("duplicate arc");

        // OLA sums up to n terms of the total weight; the kcut module doubles
        // cut weights. Keep a factor 4 of headroom on top of n * total.
        constexpr Weight limit = std::numeric_limits<Weight>::max() / 4;
        const Weight scale = static_cast<Weight>(std::max<std::size_t>(n_, 1));
        total_ = 0;
        max_weight_ = 0;
        for (const Arc &a : arcs_) {
            if (a.weight > limit - total_) throw std::overflow_error("total arc weight overflows");
            total_ += a.weight;
            max_weight_ = std::max(max_weight_, a.weight);
        }
        if (total_ > limit / scale) throw std::overflow_error("n * total arc weight overflows");

        out_begin_.assign(n_ + 1, 0);
        in_begin_.assign(n_ + 1, 0);
        out_total_.assign(n_, 0);
        in_total_.assign(n_, 0);
        for (const Arc &a : arcs_) {
            ++out_begin_[a.from + 1];
            ++in_begin_[a.to + 1];
            out_total_[a.from] += a.weight;
            in_total_[a.to] += a.weight;
        }
        std::partial_sum(out_begin_.begin(), out_begin_.end(), out_begin_.begin());
        std::partial_sum(in_begin_.begin(), in_begin_.end(), in_begin_.begin());
        in_arcs_.resize(arcs_.size());
        std::vector<std::size_t> fill(in_begin_.begin(), in_begin_.end() - 1);
        for (const Arc &a : arcs_) in_arcs_[fill[a.to]++] = a;
    }

    std::size_t n_ = 0;
    bool undirected_ = false;
    bool weighted_ = false;
    std::vector<Arc> arcs_;
    std::vector<Arc> in_arcs_;
    std::vector<std::size_t> out_begin_{0};
    std::vector<std::size_t> in_begin_{0};
    std::vector<Weight> out_total_;
    std::vector<Weight> in_total_;
    Weight total_ = 0;
    Weight max_weight_ = 0;
};

/// Bijection vertex -> position in 1..n.
class Ordering {
public:
    Ordering() = default;

    static Ordering identity(std::size_t n) {
        std::vector<Vertex> seq(n);
        std::iota(seq.begin(), seq.end(), Vertex{0});
        return from_sequence(seq);
    }

    /// seq[i] is the vertex placed at position i + 1.
    static Ordering from_sequence(std::span<const Vertex> seq) {
        Ordering o;
        o.sequence_.assign(seq.begin(), seq.end());
        o.position_.assign(seq.size(), 0);
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[i] >= seq.size() || o.position_[seq[i]] != 0)
                throw std::invalid_argument("sequence is not a permutation");
            o.position_[seq[i]] = i + 1;
        }
        return o;
    }

    /// pos[v] is the 1-based position of vertex v.
    static Ordering from_positions(std::span<const std::size_t> pos) {
        std::vector<Vertex> seq(pos.size(), 0);
        std::vector<bool> used(pos.size(), false);
        for (std::size_t v = 0; v < pos.size(); ++v) {
            if (pos[v] < 1 || pos[v] > pos.size() || used[pos[v] - 1])
                throw std::invalid_argument("positions are not a bijection onto 1..n");
            used[pos[v] - 1] = true;
            seq[pos[v] - 1] = static_cast<Vertex>(v);
        }
        return from_sequence(seq);
    }

    std::size_t size() const noexcept { return sequence_.size(); }
    std::size_t position(Vertex v) const { return position_[v]; }
    Vertex vertex_at(std::size_t position) const { return sequence_[position - 1]; }
    std::span<const Vertex> sequence() const noexcept { return sequence_; }
    std::span<const std::size_t> positions() const noexcept { return position_; }

    Ordering reversed() const {
        std::vector<Vertex> seq(sequence_.rbegin(), sequence_.rend());
        return from_sequence(seq);
    }

    friend bool operator==(const Ordering &, const Ordering &) = default;

private:
    std::vector<Vertex> sequence_;
    std::vector<std::size_t> position_;
};

inline Ordering reverse(const Ordering &pi) { return pi.reversed(); }

namespace detail {
inline void require_matching(const Digraph &g, const Ordering &pi) {
    if (g.size() != pi.size()) throw std::invalid_argument("ordering size does not match graph");
}
}  // namespace detail

/// Total weight of arcs (u,v) with pi(u) > pi(v).
inline Weight backward_weight(const Digraph &g, const Ordering &pi) {
    detail::require_matching(g, pi);
    Weight total = 0;
    for (const Arc &a : g.arcs())
        if (pi.position(a.from) > pi.position(a.to)) total += a.weight;
    return total;
}

struct Cut {
    std::vector<Arc> arcs;
    Weight weight = 0;
};

/// Arcs (u,v) with pi(u) > i and pi(v) <= i. For undirected graphs this is
/// one orientation of every edge crossing position i.
inline Cut cut_at(const Digraph &g, const Ordering &pi, std::size_t i) {
    detail::require_matching(g, pi);
    if (i < 1 || i + 1 > g.size()) throw std::out_of_range("cut position outside [1, n-1]");
    Cut cut;
    for (const Arc &a : g.arcs()) {
        if (pi.position(a.from) > i && pi.position(a.to) <= i) {
            cut.arcs.push_back(a);
            cut.weight += a.weight;
        }
    }
    return cut;
}

/// Weights of cut_at(i) for i = 1..n-1, computed in O(n + m).
inline std::vector<Weight> cut_weights(const Digraph &g, const Ordering &pi) {
    detail::require_matching(g, pi);
    const std::size_t n = g.size();
    if (n < 2) return {};
    // A backward arc from position p to q < p is in every cut i with q <= i < p.
    std::vector<Weight> diff(n + 1, 0);
    for (const Arc &a : g.arcs()) {
        const std::size_t p = pi.position(a.from), q = pi.position(a.to);
        if (p > q) {
            diff[q] += a.weight;
            diff[p] -= a.weight;
        }
    }
    std::vector<Weight> cuts(n - 1);
    Weight running = 0;
    for (std::size_t i = 1; i < n; ++i) {
        running += diff[i];
        cuts[i - 1] = running;
    }
    return cuts;
}

inline Weight cutwidth_of(const Digraph &g, const Ordering &pi) {
    auto cuts = cut_weights(g, pi);
    return cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
}

inline Weight ola_of(const Digraph &g, const Ordering &pi) {
    auto cuts = cut_weights(g, pi);
    return std::accumulate(cuts.begin(), cuts.end(), Weight{0});
}

/// max over i in [n-1] of |{v : pi(v) <= i, some in-neighbour u has pi(u) > i}|.
/// Arc weights are ignored.
inline Weight dpw_of(const Digraph &g, const Ordering &pi) {
    detail::require_matching(g, pi);
    const std::size_t n = g.size();
    if (n < 2) return 0;
    // Vertex v counts for positions pi(v) <= i < latest in-neighbour position.
    std::vector<Weight> diff(n + 1, 0);
    for (Vertex v = 0; v < n; ++v) {
        std::size_t latest = 0;
        for (const Arc &a : g.in_arcs(v)) latest = std::max(latest, pi.position(a.from));
        const std::size_t p = pi.position(v);
        if (latest > p) {
            ++diff[p];
            --diff[latest];
        }
    }
    Weight best = 0, running = 0;
    for (std::size_t i = 1; i < n; ++i) {
        running += diff[i];
        best = std::max(best, running);
    }
    return best;
}

inline Weight evaluate(Objective objective, const Digraph &g, const Ordering &pi) {
    switch (objective) {
        case Objective::fas: return backward_weight(g, pi);
        case Objective::cutwidth: return cutwidth_of(g, pi);
        case Objective::ola: return ola_of(g, pi);
        case Objective::dpw: return dpw_of(g, pi);
    }
    throw std::invalid_argument("unknown objective");
}

struct InducedGraph {
    Digraph graph;
    /// New vertex index -> original vertex.
    std::vector<Vertex> to_original;
    /// Original vertex -> new index, or npos when not included.
    std::vector<std::size_t> from_original;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// G[S] renumbered 0..|S|-1 in increasing original index.
inline InducedGraph induced(const Digraph &g, std::span<const Vertex> subset) {
    InducedGraph out;
    out.from_original.assign(g.size(), InducedGraph::npos);
    out.to_original.assign(subset.begin(), subset.end());
    std::sort(out.to_original.begin(), out.to_original.end());
    for (std::size_t i = 0; i < out.to_original.size(); ++i) {
        const Vertex v = out.to_original[i];
        if (v >= g.size()) throw std::invalid_argument("subset vertex out of range");
        if (out.from_original[v] != InducedGraph::npos)
            throw std::invalid_argument("subset lists a vertex twice");
        out.from_original[v] = i;
    }
    std::vector<Arc> arcs;
    for (const Arc &a : g.arcs()) {
        const auto u = out.from_original[a.from], v = out.from_original[a.to];
        if (u == InducedGraph::npos || v == InducedGraph::npos) continue;
        if (g.is_undirected() && a.from > a.to) continue;
        arcs.push_back(Arc{static_cast<Vertex>(u), static_cast<Vertex>(v), a.weight});
    }
    const std::size_t k = out.to_original.size();
    out.graph = g.is_undirected() ? Digraph::undirected(k, arcs, g.is_weighted())
                                  : Digraph::directed(k, std::move(arcs), g.is_weighted());
    return out;
}

/// Places each part's local ordering one after another, mapping local
/// vertices back to the original graph.
inline Ordering concatenate(std::size_t n, std::initializer_list<std::pair<const InducedGraph *, const Ordering *>> parts) {
    std::vector<Vertex> seq;
    seq.reserve(n);
    for (const auto &[sub, order] : parts)
        for (Vertex local : order->sequence()) seq.push_back(sub->to_original[local]);
    return Ordering::from_sequence(seq);
}

}  // namespace vorder
