#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relnet/errors.hpp"

namespace relnet {

using NodeId = std::uint32_t;

/// Counters for the simplification applied while loading an edge list.
/// Diagnostic only; never part of data output.
struct LoadReport {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

/// Simple undirected graph: no self-loops, no duplicate edges, symmetric
/// sorted adjacency, and a bijective label <-> index mapping. Immutable
/// after construction (build one through GraphBuilder); safe for concurrent
/// reads.
class Graph {
public:
    Graph() = default;

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    std::size_t degree(NodeId v) const { return adj_[v].size(); }

    const std::string& label(NodeId v) const { return labels_[v]; }

    std::optional<NodeId> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Like find(), but an unknown label is a data error naming the label.
    NodeId require(std::string_view label) const {
        auto id = find(label);
        if (!id) throw data_error("unknown label '" + std::string(label) + "'");
        return *id;
    }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool valid_node(NodeId v) const noexcept { return v < labels_.size(); }

private:
    friend class GraphBuilder;

    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::size_t edge_count_ = 0;
};

/// Accumulates labeled nodes and edges, then produces a simplified Graph.
/// Node indices are assigned in first-appearance order, so rebuilding from
/// the same input yields the identical mapping.
class GraphBuilder {
public:
    NodeId add_node(std::string_view label) {
        auto it = index_.find(std::string(label));
        if (it != index_.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels_.size());
        labels_.emplace_back(label);
        index_.emplace(labels_.back(), id);
        return id;
    }

    void add_edge(std::string_view u, std::string_view v) {
        NodeId iu = add_node(u);  // u first: indices follow appearance order
        NodeId iv = add_node(v);
        add_edge(iu, iv);
    }

    void add_edge(NodeId u, NodeId v) {
        if (u == v) {
            ++report_.self_loops_dropped;
            return;
        }
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }

    const LoadReport& report() const noexcept { return report_; }

    Graph build() {
        std::sort(edges_.begin(), edges_.end());
        auto last = std::unique(edges_.begin(), edges_.end());
        report_.duplicate_edges_dropped += static_cast<std::size_t>(edges_.end() - last);
        edges_.erase(last, edges_.end());

        Graph g;
        g.labels_ = std::move(labels_);
        g.index_ = std::move(index_);
        g.adj_.assign(g.labels_.size(), {});
        for (auto [u, v] : edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
        g.edge_count_ = edges_.size();

        labels_.clear();
        index_.clear();
        edges_.clear();
        return g;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    LoadReport report_;
};

enum class Delimiter { auto_detect, comma, whitespace };

struct EdgeListOptions {
    Delimiter delimiter = Delimiter::auto_detect;
    bool skip_comments = true;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool has_inner_space(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

inline bool is_comment(std::string_view trimmed, bool skip_comments) {
    return skip_comments && !trimmed.empty() && trimmed.front() == '#';
}

inline std::vector<std::string_view> split_tokens(std::string_view line, Delimiter delim) {
    std::vector<std::string_view> out;
    if (delim == Delimiter::comma) {
        std::size_t start = 0;
        while (true) {
            std::size_t pos = line.find(',', start);
            std::string_view field = (pos == std::string_view::npos)
                                         ? line.substr(start)
                                         : line.substr(start, pos - start);
            out.push_back(trim(field));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
    } else {
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

} // namespace detail

/// Reads one label per line ('#' comments and blank lines skipped). Used for
/// node-list files (declaring isolated nodes) and suspect/seed files.
inline std::vector<std::string> load_label_lines(std::istream& in) {
    std::vector<std::string> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        if (detail::has_inner_space(t))
            throw data_error("parse error at line " + std::to_string(lineno) +
                             ": expected a single label, got multiple tokens");
        labels.emplace_back(t);
    }
    return labels;
}

inline std::vector<std::string> load_node_list(std::istream& in) { return load_label_lines(in); }
inline std::vector<std::string> load_suspect_list(std::istream& in) { return load_label_lines(in); }

/// Parses an edge list (one edge per line, exactly two label tokens) into a
/// simplified Graph. Delimiter auto-detection: comma if the first data line
/// contains one, whitespace otherwise. `declared_nodes` adds nodes up front
/// (the only way to express isolated nodes); their indices precede all edge
/// endpoints.
inline Graph load_edge_list(std::istream& in, const EdgeListOptions& opts = {},
                            LoadReport* report = nullptr,
                            std::span<const std::string> declared_nodes = {}) {
    GraphBuilder builder;
    for (const auto& label : declared_nodes) builder.add_node(label);

    Delimiter delim = opts.delimiter;
    std::string line;
    std::size_t lineno = 0;
    std::size_t data_lines = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view t = detail::trim(line);
        if (t.empty() || detail::is_comment(t, opts.skip_comments)) continue;
        if (delim == Delimiter::auto_detect)
            delim = (t.find(',') != std::string_view::npos) ? Delimiter::comma
                                                            : Delimiter::whitespace;
        auto tokens = detail::split_tokens(t, delim);
        bool ok = tokens.size() == 2;
        for (const auto& tok : tokens)
            ok = ok && !tok.empty() && !detail::has_inner_space(tok);
        if (!ok)
            throw data_error("parse error at line " + std::to_string(lineno) +
                             ": expected exactly 2 label tokens, got " +
                             std::to_string(tokens.size()));
        ++data_lines;
        builder.add_edge(tokens[0], tokens[1]);
    }
    if (data_lines == 0 && declared_nodes.empty()) throw data_error("empty graph: no edges in input");

    Graph g = builder.build();
    if (report) *report = builder.report();
    return g;
}

/// Writes the edge list back out, one "u v" line per edge, nodes and
/// neighbors in ascending index order. Reloading the output reproduces the
/// graph exactly (isolated nodes excepted; they need a node-list file).
inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const std::string& lu = g.label(u);
        if (detail::has_inner_space(lu) || lu.find(',') != std::string::npos || lu.front() == '#')
            throw data_error("label '" + lu + "' cannot be serialized to an edge list");
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            out << lu << ' ' << g.label(v) << '\n';
        }
    }
}

/// A named set of source nodes of interest (the algorithm feed). A person
/// may contribute several labels (one per account); duplicates collapse.
struct SuspectSet {
    std::string name;
    std::vector<std::string> members;  // unique, first-appearance order
    std::vector<NodeId> resolved;      // unique, ascending index
};

inline SuspectSet resolve_suspects(const Graph& g, std::span<const std::string> labels,
                                   std::string name = "suspects") {
    if (labels.empty()) throw data_error("suspect set is empty");
    SuspectSet set;
    set.name = std::move(name);
    for (const auto& label : labels) {
        NodeId id = g.require(label);
        if (std::find(set.resolved.begin(), set.resolved.end(), id) != set.resolved.end())
            continue;
        set.members.push_back(label);
        set.resolved.push_back(id);
    }
    std::sort(set.resolved.begin(), set.resolved.end());
    return set;
}

/// Full structural audit: symmetry, sortedness, loop/duplicate freedom,
/// label bijectivity. Cheap enough to run on every load in `validate`.
inline void check_invariants(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto& nb = g.neighbors(u);
        degree_sum += nb.size();
        if (!std::is_sorted(nb.begin(), nb.end()))
            throw data_error("adjacency list of node " + std::to_string(u) + " is not sorted");
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw data_error("duplicate edge at node " + std::to_string(u));
        for (NodeId v : nb) {
            if (v == u) throw data_error("self-loop at node " + std::to_string(u));
            if (!g.valid_node(v) || !g.has_edge(v, u))
                throw data_error("asymmetric adjacency between nodes " + std::to_string(u) +
                                 " and " + std::to_string(v));
        }
        if (g.find(g.label(u)) != u)
            throw data_error("label mapping is not bijective at node " + std::to_string(u));
    }
    if (degree_sum != 2 * g.edge_count()) throw data_error("edge count does not match adjacency");
}

} // namespace relnet
