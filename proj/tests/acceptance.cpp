// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "relnet/cli.hpp"
#include "relnet/relnet.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace relnet;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw check_failure(message);
}

void require_close(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol))
        throw check_failure(what + ": got " + std::to_string(got) + ", want " +
                            std::to_string(want) + " (tol " + std::to_string(tol) + ")");
}

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Peak resident set in bytes, via getrusage (ru_maxrss is in kilobytes on
// Linux), falling back to VmHWM from /proc/self/status.
std::size_t peak_rss_bytes() {
    struct rusage ru {};
    if (getrusage(RUSAGE_SELF, &ru) == 0 && ru.ru_maxrss > 0)
        return static_cast<std::size_t>(ru.ru_maxrss) * 1024;
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::istringstream ls(line.substr(6));
            std::size_t kb = 0;
            ls >> kb;
            return kb * 1024;
        }
    }
    return 0;
}

std::vector<Graph> random_corpus(std::size_t count) {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<std::size_t> size(4, 10);
    std::vector<Graph> graphs;
    graphs.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        graphs.push_back(fixtures::random_connected(rng, size(rng), 0.3));
    return graphs;
}

std::string describe(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

// ---- criteria ------------------------------------------------------------

void criterion_trust_fidelity() {
    Graph g = fixtures::chain_tree();
    const NodeId s = g.require("1"), t = g.require("8");
    const NodeId v7 = g.require("7"), v3 = g.require("3");
    const auto start = Clock::now();
    ShortestPathData spd = bfs(g, s);
    const double t7 = trust(spd, v7, t);
    const double t3 = trust(spd, v3, t);
    const double secs = elapsed_seconds(start);
    require(t7 == 0.8, "trust(1,8,7) must be exactly 0.8, got " + std::to_string(t7));
    require(t3 == 0.4, "trust(1,8,3) must be exactly 0.4, got " + std::to_string(t3));
    require(secs < 1e-3, "trust evaluation took " + std::to_string(secs * 1e3) + " ms (>= 1 ms)");
}

void criterion_ranking_disagreement() {
    Graph g = fixtures::chain_tree();
    const NodeId s = g.require("1");
    const NodeId n2 = g.require("2"), n3 = g.require("3");

    RelianceResult reliance = total_reliance(g, s);
    require_close(reliance.values[n3], 41.0 / 90.0, 1e-12, "R_1(3)");
    require_close(reliance.values[n2], 14.0 / 45.0, 1e-12, "R_1(2)");
    require(reliance.values[n3] > reliance.values[n2], "reliance must rank 3 above 2");

    ScoreMap freeman = dependency_freeman(g, s);
    ScoreMap brandes = dependency_brandes(g, s);
    for (const ScoreMap* dep : {&freeman, &brandes}) {
        require_close(dep->values[n2], 6.0, 1e-12, "per-source dependency of 2");
        require_close(dep->values[n3], 5.0, 1e-12, "per-source dependency of 3");
        require(dep->values[n2] > dep->values[n3], "plain dependency must rank 2 above 3");
    }

    ScoreMap geis = dependency_geisberger(g, s);
    require_close(geis.values[n3], 41.0 / 15.0, 1e-12, "scaled dependency of 3");
    require_close(geis.values[n2], 28.0 / 15.0, 1e-12, "scaled dependency of 2");
    require(geis.values[n3] > geis.values[n2], "scaled dependency must rank 3 above 2");
}

void criterion_betweenness_oracle() {
    const auto start = Clock::now();
    for (const Graph& g : random_corpus(100)) {
        ScoreMap fast = betweenness_brandes(g);
        ScoreMap slow = betweenness_freeman(g);
        for (std::size_t v = 0; v < g.node_count(); ++v)
            if (std::abs(fast.values[v] - slow.values[v]) > 1e-9)
                throw check_failure("brandes != freeman at node " + std::to_string(v) +
                                    " on graph:\n" + describe(g));
    }
    const double secs = elapsed_seconds(start);
    require(secs < 10.0, "betweenness oracle sweep took " + std::to_string(secs) + " s");
}

void criterion_reliance_oracle() {
    const auto start = Clock::now();
    for (const Graph& g : random_corpus(100)) {
        for (NodeId s = 0; s < g.node_count(); ++s) {
            RelianceResult got = total_reliance(g, s);
            auto want = oracle::total_reliance(g, s);
            for (std::size_t v = 0; v < g.node_count(); ++v)
                if (std::abs(got.values[v] - want[v]) > 1e-12)
                    throw check_failure("reliance != enumeration at node " + std::to_string(v) +
                                        ", source " + std::to_string(s) + " on graph:\n" +
                                        describe(g));
        }
    }
    const double secs = elapsed_seconds(start);
    require(secs < 10.0, "reliance oracle sweep took " + std::to_string(secs) + " s");
}

void criterion_geisberger_identity() {
    // The distance-scaled accumulation should equal the trust-weighted
    // target sum exactly (the recursion telescopes). Any counterexample is
    // printed in full and fails the suite.
    for (const Graph& g : random_corpus(100)) {
        for (NodeId s = 0; s < g.node_count(); ++s) {
            ScoreMap got = dependency_geisberger(g, s);
            auto want = oracle::trust_weighted_dependency(g, s);
            for (std::size_t v = 0; v < g.node_count(); ++v) {
                if (std::abs(got.values[v] - want[v]) > 1e-9) {
                    std::cerr << "counterexample: source " << s << ", node " << v
                              << ", accumulation " << got.values[v] << ", target sum "
                              << want[v] << "\n"
                              << describe(g);
                    throw check_failure("scaled-dependency identity violated");
                }
            }
        }
    }
}

void criterion_markov_fixtures() {
    {
        // Independent 2x2 linear-system oracle for the 3-node path:
        // unknowns m(1,t), m(2,t) per target t, solved in closed form.
        // Target 3: m1 = 1 + m2, m2 = 1 + m1/2  => m1 = 4, m2 = 3.
        // Target 2: m1 = 1, m3 = 1.  Target 1 mirrors target 3.
        const double score1 = 2.0 / (1.0 + 4.0);
        const double score2 = 2.0 / (3.0 + 3.0);
        Graph g = fixtures::from_edges({{"1", "2"}, {"2", "3"}});
        ScoreMap mc = markov_centrality(g);
        require_close(mc.values[g.require("1")], score1, 1e-12, "markov score of node 1");
        require_close(mc.values[g.require("2")], score2, 1e-12, "markov score of node 2");
        require_close(mc.values[g.require("3")], score1, 1e-12, "markov score of node 3");
        require_close(score1, 0.4, 0.0, "oracle sanity");
        require_close(score2, 1.0 / 3.0, 1e-15, "oracle sanity");
    }
    {
        Graph c5 = fixtures::cycle(5);
        ScoreMap mc = markov_centrality(c5);
        for (double v : mc.values)
            require_close(v, mc.values[0], 1e-12, "cycle scores must be equal");
    }
}

void criterion_pagerank() {
    PagerankOptions opts;
    for (Graph g : {fixtures::chain_tree(), fixtures::cycle(5), fixtures::star(4)}) {
        ScoreMap pr = pagerank(g, opts);
        const double sum = std::accumulate(pr.values.begin(), pr.values.end(), 0.0);
        require_close(sum, 1.0, 1e-9, "pagerank mass");

        // one explicit update step applied to the returned vector
        const std::size_t n = g.node_count();
        double residual = 0.0;
        double dangling = 0.0;
        for (std::size_t v = 0; v < n; ++v)
            if (g.degree(static_cast<NodeId>(v)) == 0) dangling += pr.values[v];
        for (std::size_t v = 0; v < n; ++v) {
            double in_mass = 0.0;
            for (NodeId u : g.neighbors(static_cast<NodeId>(v)))
                in_mass += pr.values[u] / static_cast<double>(g.degree(u));
            const double next = (1.0 - opts.damping) / static_cast<double>(n) +
                                opts.damping * (dangling / static_cast<double>(n) + in_mass);
            residual += std::abs(next - pr.values[v]);
        }
        require(residual < 10.0 * opts.tol,
                "fixed-point residual " + std::to_string(residual) + " exceeds 10*tol");
    }
    ScoreMap c5 = pagerank(fixtures::cycle(5), opts);
    for (double v : c5.values) require_close(v, 0.2, 1e-9, "C5 pagerank");
}

void criterion_normalization() {
    std::mt19937 rng(5551212);
    std::uniform_real_distribution<double> value(0.0, 100.0);
    std::uniform_int_distribution<std::size_t> size(1, 40);
    std::uniform_int_distribution<int> style(0, 2);
    for (int round = 0; round < 1000; ++round) {
        ScoreMap scores;
        scores.measure = Measure::reliance;
        const std::size_t n = size(rng);
        const int kind = style(rng);
        for (std::size_t i = 0; i < n; ++i) {
            double v = value(rng);
            if (kind == 1) v = std::floor(v / 10.0);  // force ties and zeros
            if (kind == 2) v = 0.0;
            scores.values.push_back(v);
        }
        ScoreMap out = max_normalize(scores);
        const double before_max = *std::max_element(scores.values.begin(), scores.values.end());
        const double after_max = *std::max_element(out.values.begin(), out.values.end());
        if (before_max > 0.0)
            require(after_max == 1.0, "normalized maximum must be exactly 1");
        else
            require(out.values == scores.values, "all-zero map must stay unchanged");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                require((scores.values[i] < scores.values[j]) ==
                            (out.values[i] < out.values[j]),
                        "normalization must preserve the ranking order");
    }
}

void criterion_scale() {
    // Build a connected random graph at the reference scale: 19716 nodes,
    // 65532 edges.
    const std::size_t n = 19716, m = 65532;
    std::mt19937 rng(8675309);
    std::unordered_set<std::uint64_t> edge_keys;
    GraphBuilder builder;
    builder.add_node("0");
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        const std::size_t j = pick(rng);
        builder.add_edge(std::to_string(i), std::to_string(j));
        edge_keys.insert(std::min(i, j) * n + std::max(i, j));
    }
    std::uniform_int_distribution<std::size_t> any(0, n - 1);
    while (edge_keys.size() < m) {
        const std::size_t u = any(rng), v = any(rng);
        if (u == v) continue;
        if (!edge_keys.insert(std::min(u, v) * n + std::max(u, v)).second) continue;
        builder.add_edge(std::to_string(u), std::to_string(v));
    }
    Graph g = builder.build();
    require(g.node_count() == n && g.edge_count() == m, "generator produced the wrong size");

    auto start = Clock::now();
    RelianceResult single = total_reliance(g, 0);
    const double single_secs = elapsed_seconds(start);
    require(single.values.size() == n, "unexpected result size");
    require(single_secs < 5.0,
            "single-source reliance took " + std::to_string(single_secs) + " s (>= 5 s)");

    SuspectSet five = resolve_suspects(
        g, std::vector<std::string>{"17", "2048", "4096", "8192", "16384"});
    start = Clock::now();
    ScoreMap group = group_reliance(g, five);
    const double group_secs = elapsed_seconds(start);
    require(group.values.size() == n, "unexpected group result size");
    require(group_secs < 25.0,
            "5-source group reliance took " + std::to_string(group_secs) + " s (>= 25 s)");

    const std::size_t peak = peak_rss_bytes();
    require(peak > 0, "could not read peak memory");
    require(peak < std::size_t{1} << 30,
            "peak memory " + std::to_string(peak >> 20) + " MiB exceeds 1 GiB");
    std::fprintf(stderr,
                 "      [scale: 1 source %.2f s, 5 sources %.2f s, peak %zu MiB]\n",
                 single_secs, group_secs, peak >> 20);
}

void criterion_determinism() {
    const fs::path dir =
        fs::temp_directory_path() / ("relnet_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    struct Cleanup {
        fs::path p;
        ~Cleanup() { fs::remove_all(p); }
    } cleanup{dir};

    {
        std::ofstream edges(dir / "tree.edges");
        write_edge_list(fixtures::chain_tree(), edges);
        std::ofstream seeds(dir / "seeds.txt");
        seeds << "1\n7\n";
    }
    cli::RunConfig cfg;
    cfg.command = cli::Command::compare;
    cfg.graph_path = (dir / "tree.edges").string();
    cfg.seeds_path = (dir / "seeds.txt").string();
    cfg.measures = {"reliance", "brandes", "geisberger", "pagerank", "markov"};
    cfg.sort_key = "reliance";
    cfg.normalize = cli::NormalizeMode::max;

    ::setenv("RELIANCE_THREADS", "1", 1);
    const std::string reference = cli::run(cfg).data;
    for (int round = 0; round < 2; ++round)
        require(cli::run(cfg).data == reference, "repeat run differed (1 thread)");
    ::setenv("RELIANCE_THREADS", "8", 1);
    for (int round = 0; round < 3; ++round)
        require(cli::run(cfg).data == reference, "run with 8 workers differed");
    ::unsetenv("RELIANCE_THREADS");
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria = {
        {1, "trust fidelity on the chain fixture", criterion_trust_fidelity},
        {2, "per-source ranking disagreement (reliance vs dependencies)",
         criterion_ranking_disagreement},
        {3, "brandes betweenness equals the freeman double loop", criterion_betweenness_oracle},
        {4, "total reliance equals exhaustive path enumeration", criterion_reliance_oracle},
        {5, "scaled-dependency accumulation equals the target sum", criterion_geisberger_identity},
        {6, "markov passage-time fixtures", criterion_markov_fixtures},
        {7, "pagerank mass, residual, and cycle uniformity", criterion_pagerank},
        {8, "max-normalization keeps rankings (1000 random maps)", criterion_normalization},
        {9, "reference-scale smoke test (19716 nodes / 65532 edges)", criterion_scale},
        {10, "byte-identical compare output across runs and workers", criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        try {
            c.body();
            std::printf("PASS  %2d  %s\n", c.id, c.name);
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL  %2d  %s\n          %s\n", c.id, c.name, e.what());
        }
        std::fflush(stdout);
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
