#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "relnet/errors.hpp"
#include "relnet/graph.hpp"
#include "relnet/sssp.hpp"

namespace relnet {

enum class ExtractMode { seed_pairs, seed_to_all };

inline std::string_view extract_mode_name(ExtractMode m) {
    return m == ExtractMode::seed_pairs ? "seed-pairs" : "seed-to-all";
}

struct ExtractReport {
    std::size_t unreachable_pairs = 0;   // seed pairs with no connecting path
    std::size_t isolated_seeds_dropped = 0;
};

/// Carves the suspect-centered sub-network out of a large graph: the union
/// of all shortest paths between every unordered seed pair (seed_pairs), or
/// from every seed to every reachable node (seed_to_all). Labels carry over;
/// the result is a valid simplified graph whose every edge lies on at least
/// one included geodesic.
inline Graph extract_subnetwork(const Graph& g, const SuspectSet& seeds, ExtractMode mode,
                                ExtractReport* report = nullptr) {
    const std::size_t n = g.node_count();
    const auto& roots = seeds.resolved;
    if (mode == ExtractMode::seed_pairs && roots.size() < 2)
        throw data_error("seed-pairs extraction needs at least 2 distinct seeds");
    if (roots.empty()) throw data_error("extraction needs at least 1 seed");

    ExtractReport local;
    std::vector<char> in_node(n, 0);
    std::unordered_set<std::uint64_t> in_edge;
    auto add_edge = [&](NodeId a, NodeId b) {
        if (a > b) std::swap(a, b);
        in_edge.insert(static_cast<std::uint64_t>(a) * n + b);
    };

    // Marks every node and predecessor edge on some geodesic ending at t,
    // sharing the visited set across targets of the same source.
    auto collect_dag_to = [&](const ShortestPathData& spd, NodeId t, std::vector<char>& seen) {
        if (seen[t]) return;
        std::vector<NodeId> stack{t};
        seen[t] = 1;
        in_node[t] = 1;
        while (!stack.empty()) {
            NodeId w = stack.back();
            stack.pop_back();
            for (NodeId p : spd.preds[w]) {
                add_edge(p, w);
                if (!seen[p]) {
                    seen[p] = 1;
                    in_node[p] = 1;
                    stack.push_back(p);
                }
            }
        }
    };

    if (mode == ExtractMode::seed_pairs) {
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            const ShortestPathData spd = bfs(g, roots[i]);
            std::vector<char> seen(n, 0);
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (!spd.reachable(roots[j])) {
                    ++local.unreachable_pairs;
                    continue;
                }
                collect_dag_to(spd, roots[j], seen);
            }
        }
    } else {
        for (NodeId s : roots) {
            const ShortestPathData spd = bfs(g, s);
            for (NodeId w : spd.order) {
                in_node[w] = 1;
                for (NodeId p : spd.preds[w]) add_edge(p, w);
            }
        }
    }

    if (in_edge.empty()) throw data_error("extraction produced an empty sub-network");

    // Nodes with no incident included edge cannot round-trip through an
    // edge-list file; drop them (only isolated seeds can end up here).
    std::vector<char> incident(n, 0);
    for (std::uint64_t key : in_edge) {
        incident[static_cast<NodeId>(key / n)] = 1;
        incident[static_cast<NodeId>(key % n)] = 1;
    }
    GraphBuilder builder;
    for (NodeId v = 0; v < n; ++v) {
        if (!in_node[v]) continue;
        if (!incident[v]) {
            ++local.isolated_seeds_dropped;
            continue;
        }
        builder.add_node(g.label(v));
    }
    for (NodeId u = 0; u < n; ++u) {
        if (!in_node[u] || !incident[u]) continue;
        for (NodeId v : g.neighbors(u)) {
            if (v <= u) continue;
            if (in_edge.count(static_cast<std::uint64_t>(u) * n + v))
                builder.add_edge(g.label(u), g.label(v));
        }
    }
    if (report) *report = local;
    return builder.build();
}

} // namespace relnet
