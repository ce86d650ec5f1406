#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relnet/errors.hpp"
#include "relnet/graph.hpp"

namespace relnet {

enum class Measure { freeman, brandes, geisberger, pagerank, markov, reliance, group_reliance };

inline std::string_view measure_name(Measure m) {
    switch (m) {
        case Measure::freeman: return "freeman";
        case Measure::brandes: return "brandes";
        case Measure::geisberger: return "geisberger";
        case Measure::pagerank: return "pagerank";
        case Measure::markov: return "markov";
        case Measure::reliance: return "reliance";
        case Measure::group_reliance: return "group_reliance";
    }
    return "unknown";
}

inline std::optional<Measure> measure_from_name(std::string_view name) {
    for (Measure m : {Measure::freeman, Measure::brandes, Measure::geisberger, Measure::pagerank,
                      Measure::markov, Measure::reliance, Measure::group_reliance})
        if (measure_name(m) == name) return m;
    return std::nullopt;
}

enum class Normalization { raw, max };

/// Per-node nonnegative scores for one measure, tagged with its
/// normalization state.
struct ScoreMap {
    Measure measure = Measure::freeman;
    Normalization normalized = Normalization::raw;
    std::vector<double> values;
};

/// Divides every value by the maximum so the top score is exactly 1.
/// An all-zero map is returned unchanged (aside from the flag). Positive
/// scaling, so ranking order and argmax are preserved.
inline ScoreMap max_normalize(ScoreMap scores) {
    double max = 0.0;
    for (double v : scores.values) max = std::max(max, v);
    if (max > 0.0)
        for (double& v : scores.values) v /= max;
    scores.normalized = Normalization::max;
    return scores;
}

/// Comparison table: one row per node, one column per measure, strictly
/// ordered by descending sort-key value with ties broken by ascending label.
struct RankedTable {
    struct Row {
        NodeId node = 0;
        std::string label;
        std::vector<double> values;  // one per column
    };

    std::vector<std::string> columns;
    std::string sort_key;
    std::vector<Row> rows;
};

/// Builds the deterministic ranking over `maps` (all over the same node
/// set). When `drop_zero` names a measure, rows where that measure is zero
/// are removed.
inline RankedTable rank(const Graph& g, std::span<const ScoreMap> maps, Measure sort_key,
                        std::optional<Measure> drop_zero = std::nullopt) {
    if (maps.empty()) throw data_error("rank: no score maps given");
    for (const auto& m : maps)
        if (m.values.size() != g.node_count())
            throw data_error("rank: score map over mismatched node set");

    auto column_of = [&](Measure m) -> std::size_t {
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (maps[i].measure == m) return i;
        throw data_error(std::string("rank: measure '") + std::string(measure_name(m)) +
                         "' not among the score maps");
    };
    const std::size_t sort_col = column_of(sort_key);
    std::optional<std::size_t> drop_col;
    if (drop_zero) drop_col = column_of(*drop_zero);

    RankedTable table;
    for (const auto& m : maps) table.columns.emplace_back(measure_name(m.measure));
    table.sort_key = measure_name(sort_key);

    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (drop_col && maps[*drop_col].values[v] == 0.0) continue;
        RankedTable::Row row;
        row.node = v;
        row.label = g.label(v);
        row.values.reserve(maps.size());
        for (const auto& m : maps) row.values.push_back(m.values[v]);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [&](const RankedTable::Row& a, const RankedTable::Row& b) {
                  if (a.values[sort_col] != b.values[sort_col])
                      return a.values[sort_col] > b.values[sort_col];
                  return a.label < b.label;
              });
    return table;
}

} // namespace relnet
