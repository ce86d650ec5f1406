#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relnet/errors.hpp"
#include "relnet/graph.hpp"

namespace relnet {

/// Exact shortest-path count. Counts grow multiplicatively with graph depth
/// and overflow any fixed-width integer on large inputs, so they stay in
/// arbitrary precision until the final division to a ratio.
using PathCount = boost::multiprecision::cpp_int;

inline constexpr std::int32_t kUnreachable = -1;

/// Per-source BFS result: hop distances, exact shortest-path counts, and the
/// immediate-predecessor sets that form the shortest-path DAG. Immutable
/// after construction.
struct ShortestPathData {
    NodeId source = 0;
    std::vector<std::int32_t> dist;        // kUnreachable where no path exists
    std::vector<PathCount> sigma;          // 0 where unreachable
    std::vector<std::vector<NodeId>> preds;
    std::vector<NodeId> order;             // reached nodes in nondecreasing distance

    bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
};

inline ShortestPathData bfs(const Graph& g, NodeId s) {
    if (!g.valid_node(s)) throw data_error("invalid node index " + std::to_string(s));
    const std::size_t n = g.node_count();

    ShortestPathData r;
    r.source = s;
    r.dist.assign(n, kUnreachable);
    r.sigma.assign(n, PathCount(0));
    r.preds.assign(n, {});
    r.order.reserve(n);

    r.dist[s] = 0;
    r.sigma[s] = 1;
    std::deque<NodeId> queue{s};
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        r.order.push_back(v);
        for (NodeId w : g.neighbors(v)) {
            if (r.dist[w] == kUnreachable) {
                r.dist[w] = r.dist[v] + 1;
                queue.push_back(w);
            }
            if (r.dist[w] == r.dist[v] + 1) {
                r.sigma[w] += r.sigma[v];
                r.preds[w].push_back(v);
            }
        }
    }
    return r;
}

/// Exact ratio of two path counts, converted to double as the last step.
inline double sigma_ratio(const PathCount& num, const PathCount& den) {
    static const PathCount exact_double_limit = PathCount(1) << 53;
    if (num < exact_double_limit && den < exact_double_limit)
        return static_cast<double>(num) / static_cast<double>(den);
    boost::multiprecision::cpp_rational ratio(num, den);
    return ratio.convert_to<double>();
}

/// Pair-dependency of (s,t) on v: the fraction of shortest (s,t)-paths that
/// pass through v. `from_s` and `from_v` are BFS results rooted at s and v;
/// path counts stay exact until the final division.
inline double pair_dependency(const ShortestPathData& from_s, const ShortestPathData& from_v,
                              NodeId v, NodeId t) {
    if (v != from_v.source)
        throw data_error("pair_dependency: BFS data does not match intermediate node");
    const NodeId s = from_s.source;
    if (s == t || v == s || v == t)
        throw data_error("pair_dependency requires distinct s, v, t");
    if (!from_s.reachable(t))
        throw data_error("distance from " + std::to_string(s) + " to " + std::to_string(t) +
                         " is undefined (unreachable)");
    if (!from_s.reachable(v) || !from_v.reachable(t)) return 0.0;
    if (from_s.dist[v] + from_v.dist[t] != from_s.dist[t]) return 0.0;
    return sigma_ratio(from_s.sigma[v] * from_v.sigma[t], from_s.sigma[t]);
}

} // namespace relnet
