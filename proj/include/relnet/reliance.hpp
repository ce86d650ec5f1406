#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "relnet/errors.hpp"
#include "relnet/graph.hpp"
#include "relnet/parallel.hpp"
#include "relnet/score.hpp"
#include "relnet/sssp.hpp"

namespace relnet {

/// Total reliance of one source on every node, normalized by (n-2).
struct RelianceResult {
    NodeId source = 0;
    std::size_t n_used = 0;  // the n behind the (n-2) normalizer
    std::vector<double> values;
};

namespace detail {

// True iff v lies on at least one shortest path from spd.source to t,
// decided by walking the predecessor DAG backwards from t.
inline bool on_some_geodesic(const ShortestPathData& spd, NodeId v, NodeId t) {
    if (!spd.reachable(t) || !spd.reachable(v)) return false;
    if (spd.dist[v] >= spd.dist[t]) return false;
    std::vector<char> seen(spd.dist.size(), 0);
    std::vector<NodeId> stack{t};
    seen[t] = 1;
    while (!stack.empty()) {
        NodeId w = stack.back();
        stack.pop_back();
        for (NodeId p : spd.preds[w]) {
            if (p == v) return true;
            if (!seen[p] && spd.dist[p] > spd.dist[v]) {
                seen[p] = 1;
                stack.push_back(p);
            }
        }
    }
    return false;
}

} // namespace detail

/// Trust of the source on v relative to the pair (source,t): the distance
/// ratio mu(s,v)/mu(s,t), strictly inside (0,1). The farther v sits along
/// the chain to t, the more the source must trust it. Only defined for v on
/// some shortest (source,t)-path; elsewhere it is a domain error, not zero.
inline double trust(const ShortestPathData& spd, NodeId v, NodeId t) {
    const NodeId s = spd.source;
    if (t == s || v == s || v == t) throw data_error("trust requires distinct s, v, t");
    if (!spd.reachable(t) || !spd.reachable(v))
        throw data_error("distance from " + std::to_string(s) + " is undefined (unreachable)");
    if (!detail::on_some_geodesic(spd, v, t))
        throw data_error("trust undefined: node " + std::to_string(v) +
                         " is on no shortest path from " + std::to_string(s) + " to " +
                         std::to_string(t));
    return static_cast<double>(spd.dist[v]) / static_cast<double>(spd.dist[t]);
}

/// Reliance of s on v along the pair (s,t): pair-dependency times trust.
/// Zero when v lies on no shortest (s,t)-path (the dependency factor
/// vanishes there).
inline double path_reliance(const Graph& g, NodeId s, NodeId v, NodeId t) {
    if (s == t || v == s || v == t) throw data_error("path_reliance requires distinct s, v, t");
    const ShortestPathData from_s = bfs(g, s);
    if (!from_s.reachable(t))
        throw data_error("distance from " + std::to_string(s) + " to " + std::to_string(t) +
                         " is undefined (unreachable)");
    const double dependency = pair_dependency(from_s, bfs(g, v), v, t);
    if (dependency == 0.0) return 0.0;
    return dependency * static_cast<double>(from_s.dist[v]) /
           static_cast<double>(from_s.dist[t]);
}

/// Total reliance of s on every node: the per-pair reliances summed over all
/// reachable targets and divided by (n-2). Computed in a single
/// trust-weighted backward pass over the shortest-path DAG; agrees with the
/// pairwise definition (see total_reliance_by_pairs) to within 1e-12.
inline RelianceResult total_reliance(const Graph& g, NodeId s) {
    const std::size_t n = g.node_count();
    if (n < 3) throw data_error("total reliance needs at least 3 nodes ((n-2) normalizer)");
    const ShortestPathData spd = bfs(g, s);

    std::vector<double> acc(n, 0.0);
    for (auto it = spd.order.rbegin(); it != spd.order.rend(); ++it) {
        const NodeId w = *it;
        const double carried = 1.0 + acc[w];
        const double dist_w = static_cast<double>(spd.dist[w]);
        for (NodeId v : spd.preds[w]) {
            if (v == s) continue;
            acc[v] += sigma_ratio(spd.sigma[v], spd.sigma[w]) *
                      (static_cast<double>(spd.dist[v]) / dist_w) * carried;
        }
    }

    RelianceResult r;
    r.source = s;
    r.n_used = n;
    r.values.resize(n);
    const double normalizer = static_cast<double>(n - 2);
    for (std::size_t v = 0; v < n; ++v) r.values[v] = acc[v] / normalizer;
    r.values[s] = 0.0;
    return r;
}

/// The definitional route: one BFS from s plus one BFS per candidate
/// intermediate, summing pair-dependency times trust over every reachable
/// target. Quadratic; kept as the cross-check for the single-pass
/// accumulation above.
inline RelianceResult total_reliance_by_pairs(const Graph& g, NodeId s) {
    const std::size_t n = g.node_count();
    if (n < 3) throw data_error("total reliance needs at least 3 nodes ((n-2) normalizer)");
    const ShortestPathData from_s = bfs(g, s);

    RelianceResult r;
    r.source = s;
    r.n_used = n;
    r.values.assign(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        if (v == s || !from_s.reachable(v)) continue;
        const ShortestPathData from_v = bfs(g, v);
        double sum = 0.0;
        for (NodeId t = 0; t < n; ++t) {
            if (t == s || t == v || !from_s.reachable(t)) continue;
            const double dependency = pair_dependency(from_s, from_v, v, t);
            if (dependency == 0.0) continue;
            sum += dependency * static_cast<double>(from_s.dist[v]) /
                   static_cast<double>(from_s.dist[t]);
        }
        r.values[v] = sum / static_cast<double>(n - 2);
    }
    return r;
}

inline ScoreMap to_score_map(const RelianceResult& r) {
    ScoreMap scores;
    scores.measure = Measure::reliance;
    scores.values = r.values;
    return scores;
}

enum class Aggregate { sum, max_sum };

inline std::string_view aggregate_name(Aggregate a) {
    return a == Aggregate::sum ? "sum" : "max_sum";
}

/// Combined reliance of a suspect set on every node.
///   sum:     score(v) = sum over suspects s of R_s(v)
///   max_sum: score(v) = sum over suspects s of max over targets t of r_(s,t)(v)
/// A suspect accumulates whatever reliance the *other* suspects place on it;
/// its own contribution to itself is zero by definition.
inline ScoreMap group_reliance(const Graph& g, const SuspectSet& suspects,
                               Aggregate mode = Aggregate::sum) {
    if (suspects.resolved.empty()) throw data_error("suspect set is empty");
    const std::size_t n = g.node_count();
    if (n < 3) throw data_error("group reliance needs at least 3 nodes");

    ScoreMap scores;
    scores.measure = Measure::group_reliance;
    scores.values.assign(n, 0.0);

    auto per_source = [&](std::size_t i) -> std::vector<double> {
        const NodeId s = suspects.resolved[i];
        if (mode == Aggregate::sum) return total_reliance(g, s).values;

        // Highest per-target reliance of s on each node, found by pairing
        // the BFS from s with one BFS per target.
        const ShortestPathData from_s = bfs(g, s);
        std::vector<double> best(n, 0.0);
        for (NodeId t = 0; t < n; ++t) {
            if (t == s || !from_s.reachable(t)) continue;
            const ShortestPathData from_t = bfs(g, t);
            const double dist_st = static_cast<double>(from_s.dist[t]);
            for (NodeId v = 0; v < n; ++v) {
                if (v == s || v == t || !from_s.reachable(v) || !from_t.reachable(v)) continue;
                if (from_s.dist[v] + from_t.dist[v] != from_s.dist[t]) continue;
                const double dependency =
                    sigma_ratio(from_s.sigma[v] * from_t.sigma[v], from_s.sigma[t]);
                best[v] = std::max(best[v],
                                   dependency * static_cast<double>(from_s.dist[v]) / dist_st);
            }
        }
        return best;
    };

    parallel::ordered_map_reduce(suspects.resolved.size(), per_source,
                                 [&](std::size_t, const std::vector<double>& part) {
                                     for (std::size_t v = 0; v < n; ++v)
                                         scores.values[v] += part[v];
                                 });
    return scores;
}

/// The intermediate each suspect relies on the most. Empty when the suspect
/// places no reliance on anyone (no intermediary). Ties break toward the
/// ascending label.
struct CrimePriority {
    NodeId suspect = 0;
    std::optional<NodeId> relies_on;
    double value = 0.0;
};

inline std::vector<CrimePriority> crime_priority(const Graph& g, const SuspectSet& suspects) {
    if (suspects.resolved.empty()) throw data_error("suspect set is empty");
    std::vector<CrimePriority> out;
    out.reserve(suspects.resolved.size());
    for (NodeId s : suspects.resolved) {
        const RelianceResult r = total_reliance(g, s);
        CrimePriority entry;
        entry.suspect = s;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (r.values[v] <= 0.0) continue;
            if (!entry.relies_on || r.values[v] > entry.value ||
                (r.values[v] == entry.value && g.label(v) < g.label(*entry.relies_on))) {
                entry.relies_on = v;
                entry.value = r.values[v];
            }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace relnet
