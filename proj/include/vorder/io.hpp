// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the vorder Project.

#pragma once

#include <vorder/graph.hpp>

#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Instance format, one record per line:
//
//   # comment
//   p dg|ug <n> <m> [w]
//   a <u> <v> [<weight>]        (exactly m times, 1-indexed endpoints)
//
// The weight column is present iff the header carries 'w'.

namespace vorder {

enum class ParseErrorKind {
    missing_header,
    malformed_header,
    malformed_arc,
    duplicate_arc,
    self_loop,
    negative_weight,
    vertex_out_of_range,
    count_mismatch,
};

inline std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::missing_header: return "missing header";
        case ParseErrorKind::malformed_header: return "malformed header";
        case ParseErrorKind::malformed_arc: return "malformed arc line";
        case ParseErrorKind::duplicate_arc: return "duplicate arc";
        case ParseErrorKind::self_loop: return "self-loop";
        case ParseErrorKind::negative_weight: return "negative weight";
        case ParseErrorKind::vertex_out_of_range: return "vertex index out of range";
        case ParseErrorKind::count_mismatch: return "arc count does not match header";
    }
    return "parse error";
}

class parse_error : public std::runtime_error {
public:
    parse_error(ParseErrorKind kind, std::size_t line, const std::string &detail)
        : std::runtime_error("line " + std::to_string(line) + ": " + std::string(to_string(kind)) +
                             (detail.empty() ? "" : " (" + detail + ")")),
          kind_(kind),
          line_(line) {}

    ParseErrorKind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

inline bool parse_int(std::string_view token, long long &out) {
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace detail

inline Digraph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    bool have_header = false, undirected = false, weighted = false;
    long long n = 0, m = 0;
    std::vector<Arc> arcs;
    std::set<std::pair<Vertex, Vertex>> seen;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        auto tokens = detail::split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') {
            if (end == text.size()) break;
            continue;
        }

        if (tokens[0] == "p") {
            if (have_header) throw parse_error(ParseErrorKind::malformed_header, line_no, "second header");
            if (tokens.size() < 4 || tokens.size() > 5 || (tokens[1] != "dg" && tokens[1] != "ug") ||
                !detail::parse_int(tokens[2], n) || !detail::parse_int(tokens[3], m) || n < 0 || m < 0 ||
                (tokens.size() == 5 && tokens[4] != "w"))
                throw parse_error(ParseErrorKind::malformed_header, line_no, std::string(line));
            if (n > static_cast<long long>(std::numeric_limits<Vertex>::max()))
                throw parse_error(ParseErrorKind::malformed_header, line_no, "too many vertices");
            undirected = tokens[1] == "ug";
            weighted = tokens.size() == 5;
            have_header = true;
        } else if (tokens[0] == "a") {
            if (!have_header) throw parse_error(ParseErrorKind::missing_header, line_no, "");
            const std::size_t expected = weighted ? 4 : 3;
            long long u = 0, v = 0, w = 1;
            if (tokens.size() != expected || !detail::parse_int(tokens[1], u) ||
                !detail::parse_int(tokens[2], v) || (weighted && !detail::parse_int(tokens[3], w)))
                throw parse_error(ParseErrorKind::malformed_arc, line_no, std::string(line));
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(ParseErrorKind::vertex_out_of_range, line_no, std::string(line));
            if (u == v) throw parse_error(ParseErrorKind::self_loop, line_no, std::string(line));
            if (w < 0) throw parse_error(ParseErrorKind::negative_weight, line_no, std::string(line));
            auto key = std::pair(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            if (undirected && key.first > key.second) std::swap(key.first, key.second);
            if (!seen.insert(key).second)
                throw parse_error(ParseErrorKind::duplicate_arc, line_no, std::string(line));
            if (static_cast<long long>(arcs.size()) >= m)
                throw parse_error(ParseErrorKind::count_mismatch, line_no, "more arcs than declared");
            arcs.push_back(Arc{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), w});
        } else {
            throw parse_error(have_header ? ParseErrorKind::malformed_arc : ParseErrorKind::missing_header,
                              line_no, std::string(line));
        }
        if (end == text.size()) break;
    }

    if (!have_header) throw parse_error(ParseErrorKind::missing_header, line_no, "");
    if (static_cast<long long>(arcs.size()) != m)
        throw parse_error(ParseErrorKind::count_mismatch, line_no,
                          "declared " + std::to_string(m) + ", found " + std::to_string(arcs.size()));

    const auto count = static_cast<std::size_t>(n);
    return undirected ? Digraph::undirected(count, arcs, weighted)
                      : Digraph::directed(count, std::move(arcs), weighted);
}

/// Canonical text: header, then arcs (edges with u < v when undirected)
/// sorted by (u, v).
inline std::string serialize(const Digraph &g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << "p " << (g.is_undirected() ? "ug" : "dg") << ' ' << g.size() << ' ' << edges.size();
    if (g.is_weighted()) out << " w";
    out << '\n';
    for (const Arc &a : edges) {
        out << "a " << a.from + 1 << ' ' << a.to + 1;
        if (g.is_weighted()) out << ' ' << a.weight;
        out << '\n';
    }
    return out.str();
}

}  // namespace vorder
