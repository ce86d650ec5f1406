#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "relnet/centrality.hpp"
#include "relnet/errors.hpp"
#include "relnet/format.hpp"
#include "relnet/graph.hpp"
#include "relnet/reliance.hpp"
#include "relnet/score.hpp"
#include "relnet/subnet.hpp"

namespace relnet::cli {

enum class Command { validate, extract, reliance, betweenness, pagerank, markov, compare, priority };

inline std::string_view command_name(Command c) {
    switch (c) {
        case Command::validate: return "validate";
        case Command::extract: return "extract";
        case Command::reliance: return "reliance";
        case Command::betweenness: return "betweenness";
        case Command::pagerank: return "pagerank";
        case Command::markov: return "markov";
        case Command::compare: return "compare";
        case Command::priority: return "priority";
    }
    return "unknown";
}

enum class OutputFormat { csv, json };
enum class NormalizeMode { none, max };
enum class BetweennessVariant { freeman, brandes, geisberger };

/// Which sources feed the betweenness columns of `compare`: every node
/// (classic betweenness) or only the seed set (per-source dependencies
/// summed over the seeds).
enum class BetweennessScope { all, seeds };

struct RunConfig {
    Command command = Command::validate;
    std::string graph_path;
    std::string nodes_path;    // optional node list (declares isolated nodes)
    std::string seeds_path;    // required by seed-driven commands
    std::string output_path;   // empty -> stdout
    OutputFormat format = OutputFormat::csv;
    NormalizeMode normalize = NormalizeMode::none;
    Aggregate aggregate = Aggregate::sum;
    BetweennessVariant variant = BetweennessVariant::brandes;
    BetweennessScope scope = BetweennessScope::all;
    ExtractMode extract_mode = ExtractMode::seed_pairs;
    PagerankOptions pagerank;
    std::vector<std::string> measures;  // compare only
    std::string sort_key;               // empty -> first measure
    bool drop_zero = false;
};

struct RunOutput {
    std::string data;                       // written only on success
    std::vector<std::string> diagnostics;   // stderr channel
};

namespace detail {

inline std::ifstream open_input(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw data_error(std::string("cannot open ") + what + " file '" + path + "'");
    return in;
}

inline void append_load_diagnostics(const LoadReport& report, std::vector<std::string>& out) {
    if (report.self_loops_dropped > 0)
        out.push_back(std::to_string(report.self_loops_dropped) + " self-loop" +
                      (report.self_loops_dropped == 1 ? "" : "s") + " dropped");
    if (report.duplicate_edges_dropped > 0)
        out.push_back(std::to_string(report.duplicate_edges_dropped) + " duplicate edge" +
                      (report.duplicate_edges_dropped == 1 ? "" : "s") + " collapsed");
}

inline std::vector<std::string> measures_for(const RunConfig& cfg) {
    switch (cfg.command) {
        case Command::reliance:
            return {"reliance"};
        case Command::betweenness:
            switch (cfg.variant) {
                case BetweennessVariant::freeman: return {"freeman"};
                case BetweennessVariant::brandes: return {"brandes"};
                case BetweennessVariant::geisberger: return {"geisberger"};
            }
            return {};
        case Command::pagerank:
            return {"pagerank"};
        case Command::markov:
            return {"markov"};
        case Command::compare:
            return cfg.measures;
        default:
            return {};
    }
}

inline bool needs_seeds(const RunConfig& cfg, const std::vector<std::string>& measures) {
    if (cfg.command == Command::extract || cfg.command == Command::priority) return true;
    for (const auto& m : measures)
        if (m == "reliance" || m == "group_reliance") return true;
    return cfg.command == Command::compare && cfg.scope == BetweennessScope::seeds;
}

// Full config validation; runs before any file is touched.
inline void validate_config(const RunConfig& cfg, const std::vector<std::string>& measures) {
    if (cfg.graph_path.empty()) throw usage_error("a graph file is required");
    if (cfg.command == Command::compare) {
        if (measures.empty()) throw usage_error("compare requires at least one measure");
        for (std::size_t i = 0; i < measures.size(); ++i) {
            if (!measure_from_name(measures[i]))
                throw usage_error("unknown measure '" + measures[i] + "'");
            for (std::size_t j = i + 1; j < measures.size(); ++j)
                if (measures[i] == measures[j])
                    throw usage_error("duplicate measure '" + measures[i] + "'");
        }
        if (!cfg.sort_key.empty() &&
            std::find(measures.begin(), measures.end(), cfg.sort_key) == measures.end())
            throw usage_error("sort key '" + cfg.sort_key + "' is not among the measures");
    }
    if (needs_seeds(cfg, measures) && cfg.seeds_path.empty())
        throw usage_error(std::string(command_name(cfg.command)) +
                          " requires a seeds file (--seeds)");
    if (!(cfg.pagerank.damping > 0.0 && cfg.pagerank.damping < 1.0))
        throw usage_error("pagerank damping must lie strictly between 0 and 1");
    if (cfg.pagerank.max_iter < 1) throw usage_error("pagerank max-iter must be positive");
    if (!(cfg.pagerank.tol > 0.0)) throw usage_error("pagerank tol must be positive");
}

inline ScoreMap compute_measure(const Graph& g, const std::string& name, const RunConfig& cfg,
                                const std::optional<SuspectSet>& seeds) {
    const Measure m = *measure_from_name(name);
    auto seeded_dependency_sum = [&](Measure which) {
        ScoreMap total;
        total.measure = which;
        total.values.assign(g.node_count(), 0.0);
        for (NodeId s : seeds->resolved) {
            ScoreMap part = which == Measure::freeman      ? dependency_freeman(g, s)
                            : which == Measure::brandes    ? dependency_brandes(g, s)
                                                           : dependency_geisberger(g, s);
            for (std::size_t v = 0; v < part.values.size(); ++v)
                total.values[v] += part.values[v];
        }
        return total;
    };
    switch (m) {
        case Measure::freeman:
            return cfg.scope == BetweennessScope::seeds ? seeded_dependency_sum(m)
                                                        : betweenness_freeman(g);
        case Measure::brandes:
            return cfg.scope == BetweennessScope::seeds ? seeded_dependency_sum(m)
                                                        : betweenness_brandes(g);
        case Measure::geisberger:
            return cfg.scope == BetweennessScope::seeds ? seeded_dependency_sum(m)
                                                        : betweenness_geisberger(g);
        case Measure::pagerank:
            return pagerank(g, cfg.pagerank);
        case Measure::markov:
            return markov_centrality(g);
        case Measure::reliance:
        case Measure::group_reliance: {
            ScoreMap scores = group_reliance(g, *seeds, cfg.aggregate);
            scores.measure = m;  // column header echoes the requested name
            return scores;
        }
    }
    throw usage_error("unknown measure '" + name + "'");
}

} // namespace detail

/// Executes one command against the configured inputs and returns the data
/// output plus diagnostics. Data is never produced on a failing path (the
/// function throws instead).
inline RunOutput run(const RunConfig& cfg) {
    const std::vector<std::string> measures = detail::measures_for(cfg);
    detail::validate_config(cfg, measures);

    RunOutput out;

    std::vector<std::string> declared_nodes;
    if (!cfg.nodes_path.empty()) {
        auto in = detail::open_input(cfg.nodes_path, "node-list");
        declared_nodes = load_node_list(in);
    }
    LoadReport report;
    Graph g;
    {
        auto in = detail::open_input(cfg.graph_path, "graph");
        g = load_edge_list(in, {}, &report, declared_nodes);
    }
    detail::append_load_diagnostics(report, out.diagnostics);

    std::optional<SuspectSet> seeds;
    if (!cfg.seeds_path.empty()) {
        auto in = detail::open_input(cfg.seeds_path, "seeds");
        seeds = resolve_suspects(g, load_suspect_list(in));
    }

    TableMeta meta;
    meta.command = command_name(cfg.command);
    meta.n = g.node_count();
    meta.m = g.edge_count();
    meta.normalized = cfg.normalize == NormalizeMode::max ? "max" : "none";
    meta.drop_zero = cfg.drop_zero;

    switch (cfg.command) {
        case Command::validate: {
            check_invariants(g);
            if (cfg.format == OutputFormat::csv)
                out.data = "nodes,edges\n" + std::to_string(g.node_count()) + "," +
                           std::to_string(g.edge_count()) + "\n";
            else
                out.data = "{\"nodes\": " + std::to_string(g.node_count()) +
                           ", \"edges\": " + std::to_string(g.edge_count()) + "}\n";
            return out;
        }

        case Command::extract: {
            ExtractReport extract_report;
            Graph sub = extract_subnetwork(g, *seeds, cfg.extract_mode, &extract_report);
            if (extract_report.unreachable_pairs > 0)
                out.diagnostics.push_back(std::to_string(extract_report.unreachable_pairs) +
                                          " unreachable seed pair" +
                                          (extract_report.unreachable_pairs == 1 ? "" : "s") +
                                          " skipped");
            if (extract_report.isolated_seeds_dropped > 0)
                out.diagnostics.push_back(std::to_string(extract_report.isolated_seeds_dropped) +
                                          " isolated seed" +
                                          (extract_report.isolated_seeds_dropped == 1 ? "" : "s") +
                                          " dropped");
            out.diagnostics.push_back("extracted " + std::to_string(sub.node_count()) +
                                      " nodes, " + std::to_string(sub.edge_count()) + " edges");
            std::ostringstream edges;
            write_edge_list(sub, edges);
            out.data = edges.str();
            return out;
        }

        case Command::priority: {
            const auto priorities = crime_priority(g, *seeds);
            std::string data;
            if (cfg.format == OutputFormat::csv) {
                data = "suspect,suspect_label,node,label,reliance\n";
                for (const auto& p : priorities) {
                    data += std::to_string(p.suspect) + ',' + csv_field(g.label(p.suspect));
                    if (p.relies_on)
                        data += ',' + std::to_string(*p.relies_on) + ',' +
                                csv_field(g.label(*p.relies_on)) + ',' + format_double(p.value);
                    else
                        data += ",,,0";
                    data += '\n';
                }
            } else {
                data = "{\n  \"meta\": {\"command\": \"priority\", \"n\": " +
                       std::to_string(g.node_count()) +
                       ", \"m\": " + std::to_string(g.edge_count()) + "},\n  \"rows\": [";
                for (std::size_t i = 0; i < priorities.size(); ++i) {
                    const auto& p = priorities[i];
                    data += (i ? ",\n    " : "\n    ");
                    data += "{\"suspect\": " + std::to_string(p.suspect) + ", \"suspect_label\": " +
                            json_string(g.label(p.suspect));
                    if (p.relies_on)
                        data += ", \"node\": " + std::to_string(*p.relies_on) + ", \"label\": " +
                                json_string(g.label(*p.relies_on)) +
                                ", \"reliance\": " + format_double(p.value);
                    else
                        data += ", \"node\": null, \"label\": null, \"reliance\": 0";
                    data += "}";
                }
                data += "\n  ]\n}\n";
            }
            out.data = std::move(data);
            return out;
        }

        case Command::reliance:
        case Command::betweenness:
        case Command::pagerank:
        case Command::markov:
        case Command::compare: {
            std::vector<ScoreMap> columns;
            columns.reserve(measures.size());
            bool has_reliance = false;
            for (const auto& name : measures) {
                ScoreMap scores = detail::compute_measure(g, name, cfg, seeds);
                if (scores.measure == Measure::reliance ||
                    scores.measure == Measure::group_reliance)
                    has_reliance = true;
                if (cfg.normalize == NormalizeMode::max) scores = max_normalize(std::move(scores));
                columns.push_back(std::move(scores));
            }
            if (has_reliance) meta.aggregate = aggregate_name(cfg.aggregate);

            const Measure sort_key =
                *measure_from_name(cfg.sort_key.empty() ? measures.front() : cfg.sort_key);
            // drop_zero filters on the reliance column when one is present
            // (only nodes actually relied on are listed), else the sort key.
            std::optional<Measure> drop;
            if (cfg.drop_zero) {
                drop = sort_key;
                for (const auto& c : columns)
                    if (c.measure == Measure::reliance || c.measure == Measure::group_reliance)
                        drop = c.measure;
            }
            const RankedTable table = rank(g, columns, sort_key, drop);
            out.data = cfg.format == OutputFormat::csv ? to_csv(table) : to_json(table, meta);
            return out;
        }
    }
    throw usage_error("unknown command");
}

} // namespace relnet::cli
