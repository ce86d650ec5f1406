#pragma once

// Shared graph fixtures and random-graph generators for the test suite.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relnet/graph.hpp"

namespace fixtures {

using relnet::Graph;
using relnet::GraphBuilder;
using relnet::NodeId;

inline Graph from_edges(const std::vector<std::pair<std::string, std::string>>& edges) {
    GraphBuilder b;
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

inline Graph parse(const std::string& text) {
    std::istringstream in(text);
    return relnet::load_edge_list(in);
}

/// Path 1-2-3-4.
inline Graph path4() {
    return from_edges({{"1", "2"}, {"2", "3"}, {"3", "4"}});
}

/// Diamond: two parallel length-2 routes from 1 to 4.
inline Graph diamond() {
    return from_edges({{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}});
}

/// Diamond with a pendant node 5 hanging off 4.
inline Graph diamond_pendant() {
    return from_edges({{"1", "2"}, {"1", "3"}, {"2", "4"}, {"3", "4"}, {"4", "5"}});
}

/// The 8-node laundering-chain sample used across the suite: a tree whose
/// node 3 is the cut vertex separating {1,2} from everything else, with the
/// length-5 chain 1-2-3-5-7-8 carrying the money flow.
inline Graph chain_tree() {
    return from_edges({{"1", "2"},
                       {"2", "3"},
                       {"3", "4"},
                       {"3", "5"},
                       {"5", "6"},
                       {"5", "7"},
                       {"7", "8"}});
}

inline Graph star(std::size_t leaves) {
    GraphBuilder b;
    for (std::size_t i = 1; i <= leaves; ++i) b.add_edge("hub", "leaf" + std::to_string(i));
    return b.build();
}

inline Graph complete(std::size_t n) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            b.add_edge(std::to_string(i), std::to_string(j));
    return b.build();
}

inline Graph cycle(std::size_t n) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_edge(std::to_string(i), std::to_string((i + 1) % n));
    return b.build();
}

/// Connected by construction: a random attachment tree plus extra edges.
inline Graph random_connected(std::mt19937& rng, std::size_t n, double extra_edge_prob = 0.3) {
    GraphBuilder b;
    b.add_node("0");
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        b.add_edge(std::to_string(i), std::to_string(pick(rng)));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < extra_edge_prob) b.add_edge(std::to_string(i), std::to_string(j));
    return b.build();
}

/// Equality up to node renumbering: same labels, same labeled adjacency.
inline bool same_labeled_graph(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    for (NodeId u = 0; u < a.node_count(); ++u) {
        auto in_b = b.find(a.label(u));
        if (!in_b) return false;
        std::vector<std::string> na, nb;
        for (NodeId v : a.neighbors(u)) na.push_back(a.label(v));
        for (NodeId v : b.neighbors(*in_b)) nb.push_back(b.label(v));
        std::sort(na.begin(), na.end());
        std::sort(nb.begin(), nb.end());
        if (na != nb) return false;
    }
    return true;
}

/// Uniform random simple graph, possibly disconnected.
inline Graph random_graph(std::mt19937& rng, std::size_t n, double edge_prob) {
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i) b.add_node(std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng) < edge_prob) b.add_edge(std::to_string(i), std::to_string(j));
    return b.build();
}

} // namespace fixtures
