#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <string_view>

#include <json.hpp>

#include "relnet/score.hpp"

namespace relnet {

/// Shortest decimal that parses back to the same double, capped at 12
/// significant digits. Fixed formatting keeps data output byte-identical
/// across runs and platforms.
inline std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    for (int prec = 1; prec <= 12; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string json_string(std::string_view s) {
    return nlohmann::json(std::string(s)).dump();
}

/// Metadata echoed in the JSON header so a table is self-describing.
struct TableMeta {
    std::string command;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string normalized = "none";
    std::string aggregate;  // empty when no reliance column is present
    bool drop_zero = false;
};

inline std::string to_csv(const RankedTable& table) {
    std::string out = "node,label";
    for (const auto& c : table.columns) {
        out += ',';
        out += csv_field(c);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        out += std::to_string(row.node);
        out += ',';
        out += csv_field(row.label);
        for (double v : row.values) {
            out += ',';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

inline std::string to_json(const RankedTable& table, const TableMeta& meta) {
    std::string out = "{\n  \"meta\": {";
    out += "\"command\": " + json_string(meta.command);
    out += ", \"n\": " + std::to_string(meta.n);
    out += ", \"m\": " + std::to_string(meta.m);
    out += ", \"measures\": [";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ", ";
        out += json_string(table.columns[i]);
    }
    out += "], \"normalized\": " + json_string(meta.normalized);
    if (!meta.aggregate.empty()) out += ", \"aggregate\": " + json_string(meta.aggregate);
    out += ", \"sort_key\": " + json_string(table.sort_key);
    out += std::string(", \"drop_zero\": ") + (meta.drop_zero ? "true" : "false");
    out += "},\n  \"rows\": [";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        out += (i ? ",\n    " : "\n    ");
        out += "{\"node\": " + std::to_string(row.node);
        out += ", \"label\": " + json_string(row.label);
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out += ", " + json_string(table.columns[c]) + ": " + format_double(row.values[c]);
        }
        out += "}";
    }
    out += "\n  ]\n}\n";
    return out;
}

} // namespace relnet
