#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relnet/errors.hpp"
#include "relnet/graph.hpp"
#include "relnet/parallel.hpp"
#include "relnet/score.hpp"
#include "relnet/sssp.hpp"

namespace relnet {

namespace detail {

// One backward pass over the shortest-path DAG in decreasing-distance order:
//   delta(v) = sum over {w : v in preds(w)} of weight(v,w) * (sigma_sv/sigma_sw) * (1 + delta(w))
// with weight == 1 for the plain accumulation and mu(s,v)/mu(s,w) for the
// distance-scaled one. The source's own dependency is zero by definition.
inline std::vector<double> accumulate_dependencies(const ShortestPathData& spd,
                                                   bool distance_scaled) {
    std::vector<double> delta(spd.dist.size(), 0.0);
    for (auto it = spd.order.rbegin(); it != spd.order.rend(); ++it) {
        const NodeId w = *it;
        const double carried = 1.0 + delta[w];
        for (NodeId v : spd.preds[w]) {
            double coeff = sigma_ratio(spd.sigma[v], spd.sigma[w]);
            if (distance_scaled)
                coeff *= static_cast<double>(spd.dist[v]) / static_cast<double>(spd.dist[w]);
            delta[v] += coeff * carried;
        }
    }
    delta[spd.source] = 0.0;
    return delta;
}

template <typename PerSource>
ScoreMap sum_over_sources(const Graph& g, Measure measure, PerSource per_source) {
    ScoreMap total;
    total.measure = measure;
    total.values.assign(g.node_count(), 0.0);
    parallel::ordered_map_reduce(
        g.node_count(), [&](std::size_t s) { return per_source(static_cast<NodeId>(s)); },
        [&](std::size_t, const std::vector<double>& part) {
            for (std::size_t v = 0; v < part.size(); ++v) total.values[v] += part[v];
        });
    return total;
}

} // namespace detail

/// Dependency of a single source on every node, computed the slow literal
/// way: one BFS per candidate intermediate plus a target loop over
/// pair-dependencies. Quadratic; it exists as the independent reference for
/// the accumulation-based routes.
inline ScoreMap dependency_freeman(const Graph& g, NodeId s) {
    if (!g.valid_node(s)) throw data_error("invalid node index " + std::to_string(s));
    const std::size_t n = g.node_count();
    ScoreMap scores;
    scores.measure = Measure::freeman;
    scores.values.assign(n, 0.0);
    const ShortestPathData from_s = bfs(g, s);
    for (NodeId v = 0; v < n; ++v) {
        if (v == s || !from_s.reachable(v)) continue;
        const ShortestPathData from_v = bfs(g, v);
        double sum = 0.0;
        for (NodeId t = 0; t < n; ++t) {
            if (t == s || t == v || !from_s.reachable(t)) continue;
            sum += pair_dependency(from_s, from_v, v, t);
        }
        scores.values[v] = sum;
    }
    return scores;
}

/// Freeman betweenness: the sum of pair-dependencies over all ordered (s,t)
/// pairs, by direct enumeration. Exact but O(n^2 (n+m)); intended for small
/// graphs and as the oracle for the Brandes accumulation.
inline ScoreMap betweenness_freeman(const Graph& g) {
    if (g.node_count() == 0) throw data_error("empty graph");
    return detail::sum_over_sources(g, Measure::freeman, [&](NodeId s) {
        return dependency_freeman(g, s).values;
    });
}

/// Dependency of source s on every node via the backward accumulation over
/// the shortest-path DAG.
inline ScoreMap dependency_brandes(const Graph& g, NodeId s) {
    ScoreMap scores;
    scores.measure = Measure::brandes;
    scores.values = detail::accumulate_dependencies(bfs(g, s), /*distance_scaled=*/false);
    return scores;
}

/// Betweenness via per-source accumulation, summed over all sources in
/// ascending index order. Agrees with betweenness_freeman exactly.
inline ScoreMap betweenness_brandes(const Graph& g) {
    if (g.node_count() == 0) throw data_error("empty graph");
    return detail::sum_over_sources(g, Measure::brandes, [&](NodeId s) {
        return detail::accumulate_dependencies(bfs(g, s), false);
    });
}

/// Distance-scaled dependency: every term carries the extra length factor
/// mu(s,v)/mu(s,w), weighting intermediates by how far along the path they
/// sit.
inline ScoreMap dependency_geisberger(const Graph& g, NodeId s) {
    ScoreMap scores;
    scores.measure = Measure::geisberger;
    scores.values = detail::accumulate_dependencies(bfs(g, s), /*distance_scaled=*/true);
    return scores;
}

inline ScoreMap betweenness_geisberger(const Graph& g) {
    if (g.node_count() == 0) throw data_error("empty graph");
    return detail::sum_over_sources(g, Measure::geisberger, [&](NodeId s) {
        return detail::accumulate_dependencies(bfs(g, s), true);
    });
}

struct PagerankOptions {
    double damping = 0.85;
    double tol = 1e-10;   // L1 change threshold
    int max_iter = 1000;
};

/// Power iteration on the undirected graph (every edge used in both
/// directions). Degree-zero nodes redistribute their mass uniformly. Scores
/// sum to 1; throws numeric_error if the L1 change has not dropped below tol
/// within max_iter iterations.
inline ScoreMap pagerank(const Graph& g, const PagerankOptions& opts = {}) {
    const std::size_t n = g.node_count();
    if (n == 0) throw data_error("empty graph");
    if (!(opts.damping > 0.0 && opts.damping < 1.0))
        throw data_error("pagerank damping must lie strictly between 0 and 1");
    if (opts.max_iter < 1) throw data_error("pagerank max_iter must be positive");

    const double d = opts.damping;
    std::vector<double> rank_now(n, 1.0 / static_cast<double>(n));
    std::vector<double> rank_next(n);
    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.degree(static_cast<NodeId>(v)) == 0) dangling += rank_now[v];
        const double base = (1.0 - d) / static_cast<double>(n) +
                            d * dangling / static_cast<double>(n);
        for (std::size_t v = 0; v < n; ++v) {
            double in_mass = 0.0;
            for (NodeId u : g.neighbors(static_cast<NodeId>(v)))
                in_mass += rank_now[u] / static_cast<double>(g.degree(u));
            rank_next[v] = base + d * in_mass;
        }
        double change = 0.0;
        for (std::size_t v = 0; v < n; ++v) change += std::abs(rank_next[v] - rank_now[v]);
        rank_now.swap(rank_next);
        if (change < opts.tol) {
            ScoreMap scores;
            scores.measure = Measure::pagerank;
            scores.values = std::move(rank_now);
            return scores;
        }
    }
    throw numeric_error("pagerank did not converge after " + std::to_string(opts.max_iter) +
                        " iterations");
}

/// Markov centrality: (n-1) over the sum of mean first-passage times of the
/// simple random walk from v to every other node. One linear solve per
/// target node, so this is meant for the small extracted sub-networks, not
/// whole email corpora. Requires a connected graph (passage times are
/// infinite otherwise).
inline ScoreMap markov_centrality(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) throw data_error("markov centrality needs at least 2 nodes");
    {
        const ShortestPathData probe = bfs(g, 0);
        if (probe.order.size() != n)
            throw data_error("markov centrality requires a connected graph");
    }

    // For a fixed target t, the passage times m(v,t) over v != t satisfy
    //   m(v,t) = 1 + sum_{u in N(v), u != t} m(u,t)/deg(v),
    // i.e. (I - Q_t) x = 1 with Q_t the walk matrix restricted to V\{t}.
    auto solve_target = [&](std::size_t t) {
        const std::size_t k = n - 1;
        std::vector<NodeId> others;
        others.reserve(k);
        for (NodeId v = 0; v < n; ++v)
            if (v != t) others.push_back(v);
        std::vector<std::size_t> pos(n, 0);
        for (std::size_t i = 0; i < k; ++i) pos[others[i]] = i;

        Eigen::MatrixXd a = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k),
                                                      static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < k; ++i) {
            const NodeId v = others[i];
            const double inv_deg = 1.0 / static_cast<double>(g.degree(v));
            for (NodeId u : g.neighbors(v)) {
                if (u == t) continue;
                a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(pos[u])) -= inv_deg;
            }
        }
        const Eigen::VectorXd b = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(k));
        const Eigen::VectorXd x = a.partialPivLu().solve(b);
        if (!x.allFinite() || (a * x - b).cwiseAbs().maxCoeff() > 1e-7)
            throw numeric_error("singular linear system while solving passage times for node " +
                                std::to_string(t));

        std::vector<double> times(n, 0.0);  // times[v] = m(v, t)
        for (std::size_t i = 0; i < k; ++i) times[others[i]] = x(static_cast<Eigen::Index>(i));
        return times;
    };

    std::vector<double> total_time(n, 0.0);
    parallel::ordered_map_reduce(n, solve_target,
                                 [&](std::size_t, const std::vector<double>& times) {
                                     for (std::size_t v = 0; v < n; ++v)
                                         total_time[v] += times[v];
                                 });

    ScoreMap scores;
    scores.measure = Measure::markov;
    scores.values.assign(n, 0.0);
    for (std::size_t v = 0; v < n; ++v)
        scores.values[v] = static_cast<double>(n - 1) / total_time[v];
    return scores;
}

} // namespace relnet
