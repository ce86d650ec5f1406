// relnet command-line tool: load an edge list, extract suspect-centered
// sub-networks, compute reliance and baseline centrality measures, and emit
// ranked comparison tables as CSV or JSON.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 numeric/convergence error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "relnet/cli.hpp"

namespace {

using relnet::cli::Command;
using relnet::cli::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-g,--graph", cfg.graph_path, "Edge-list file (two labels per line)")
        ->required();
    cmd->add_option("--nodes", cfg.nodes_path,
                    "Node-list file declaring extra (possibly isolated) nodes");
    cmd->add_option("-o,--output", cfg.output_path, "Output file (default: stdout)");
    cmd->add_option("-f,--format", cfg.format, "Output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, relnet::cli::OutputFormat>{
                {"csv", relnet::cli::OutputFormat::csv},
                {"json", relnet::cli::OutputFormat::json}},
            CLI::ignore_case));
}

void add_normalize_option(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--normalize", cfg.normalize, "Score normalization")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, relnet::cli::NormalizeMode>{
                {"none", relnet::cli::NormalizeMode::none},
                {"max", relnet::cli::NormalizeMode::max}},
            CLI::ignore_case));
}

void add_seeds_option(CLI::App* cmd, RunConfig& cfg, bool required) {
    auto* opt = cmd->add_option("-s,--seeds", cfg.seeds_path,
                                "Suspect/seed file (one label per line)");
    if (required) opt->required();
}

void add_aggregate_option(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--aggregate", cfg.aggregate,
                    "How per-source reliance combines over the seed set")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, relnet::Aggregate>{{"sum", relnet::Aggregate::sum},
                                                     {"max_sum", relnet::Aggregate::max_sum}},
            CLI::ignore_case));
}

void add_pagerank_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--damping", cfg.pagerank.damping, "PageRank damping factor");
    cmd->add_option("--tol", cfg.pagerank.tol, "PageRank convergence threshold (L1)");
    cmd->add_option("--max-iter", cfg.pagerank.max_iter, "PageRank iteration cap");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph analytics for ranking the intermediaries a suspect set relies on"};
    app.require_subcommand(1);

    RunConfig cfg;

    auto* validate = app.add_subcommand(
        "validate", "Load, simplify, and structurally check a graph; print nodes/edges");
    add_common_options(validate, cfg);

    auto* extract = app.add_subcommand(
        "extract", "Write the union of shortest paths around the seed set as an edge list");
    add_common_options(extract, cfg);
    add_seeds_option(extract, cfg, true);
    extract
        ->add_option("--mode", cfg.extract_mode, "Geodesic union to take")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, relnet::ExtractMode>{
                {"seed-pairs", relnet::ExtractMode::seed_pairs},
                {"seed-to-all", relnet::ExtractMode::seed_to_all}},
            CLI::ignore_case));

    auto* reliance = app.add_subcommand(
        "reliance", "Combined reliance of the seed set on every node, ranked");
    add_common_options(reliance, cfg);
    add_seeds_option(reliance, cfg, true);
    add_normalize_option(reliance, cfg);
    add_aggregate_option(reliance, cfg);
    reliance->add_flag("--drop-zero", cfg.drop_zero, "Drop nodes with zero reliance");

    auto* betweenness = app.add_subcommand("betweenness", "Betweenness centrality, ranked");
    add_common_options(betweenness, cfg);
    add_normalize_option(betweenness, cfg);
    betweenness
        ->add_option("--variant", cfg.variant, "Betweenness formulation")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, relnet::cli::BetweennessVariant>{
                {"freeman", relnet::cli::BetweennessVariant::freeman},
                {"brandes", relnet::cli::BetweennessVariant::brandes},
                {"geisberger", relnet::cli::BetweennessVariant::geisberger}},
            CLI::ignore_case));

    auto* pagerank = app.add_subcommand("pagerank", "PageRank scores, ranked");
    add_common_options(pagerank, cfg);
    add_normalize_option(pagerank, cfg);
    add_pagerank_options(pagerank, cfg);

    auto* markov = app.add_subcommand("markov", "Markov (mean first-passage) centrality, ranked");
    add_common_options(markov, cfg);
    add_normalize_option(markov, cfg);

    auto* compare = app.add_subcommand(
        "compare", "Side-by-side table of several measures over the same graph");
    add_common_options(compare, cfg);
    add_seeds_option(compare, cfg, false);
    add_normalize_option(compare, cfg);
    add_aggregate_option(compare, cfg);
    add_pagerank_options(compare, cfg);
    compare
        ->add_option("--measures", cfg.measures,
                     "Comma-separated measures (reliance, freeman, brandes, geisberger, "
                     "pagerank, markov)")
        ->required()
        ->delimiter(',');
    compare->add_option("--sort-key", cfg.sort_key, "Measure to order rows by (default: first)");
    compare->add_flag("--drop-zero", cfg.drop_zero,
                      "Drop rows where the reliance column (else the sort key) is zero");
    compare
        ->add_option("--betweenness-scope", cfg.scope,
                     "Sources feeding betweenness columns: all nodes, or the seed set only")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, relnet::cli::BetweennessScope>{
                {"all", relnet::cli::BetweennessScope::all},
                {"seeds", relnet::cli::BetweennessScope::seeds}},
            CLI::ignore_case));

    auto* priority = app.add_subcommand(
        "priority", "For each suspect, the intermediate node it relies on the most");
    add_common_options(priority, cfg);
    add_seeds_option(priority, cfg, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // any parse failure is a usage error
    }

    cfg.command = validate->parsed()      ? Command::validate
                  : extract->parsed()     ? Command::extract
                  : reliance->parsed()    ? Command::reliance
                  : betweenness->parsed() ? Command::betweenness
                  : pagerank->parsed()    ? Command::pagerank
                  : markov->parsed()      ? Command::markov
                  : compare->parsed()     ? Command::compare
                                          : Command::priority;

    try {
        relnet::cli::RunOutput result = relnet::cli::run(cfg);
        for (const auto& line : result.diagnostics) std::cerr << line << '\n';
        if (cfg.output_path.empty()) {
            std::cout << result.data;
            std::cout.flush();
            if (!std::cout) {
                std::cerr << "error: data: failed to write output\n";
                return 2;
            }
        } else {
            std::ofstream out(cfg.output_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: data: cannot open output file '" << cfg.output_path
                          << "'\n";
                return 2;
            }
            out << result.data;
            out.flush();
            if (!out) {
                std::cerr << "error: data: failed to write output file\n";
                return 2;
            }
        }
        return 0;
    } catch (const relnet::error& e) {
        std::cerr << "error: " << relnet::errc_name(e.category()) << ": " << e.what() << '\n';
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: data: " << e.what() << '\n';
        return 2;
    }
}
