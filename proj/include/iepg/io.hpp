// io.hpp — stable text formats: spectrum shorthand parsing, matrix/graph
// JSON, report JSON, and an aligned plain-text matrix rendering. Emission is
// hand-rolled so identical inputs always produce identical bytes.
#pragma once

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "iepg/core.hpp"
#include "iepg/graphs.hpp"
#include "iepg/verify.hpp"

namespace iepg {

// ---------------------------------------------------------------------------
// Number formatting: %.Ng round-trips doubles exactly at N = 17.
// ---------------------------------------------------------------------------

inline std::string format_double(double v, int precision = 17) {
    if (v == 0.0) v = 0.0;  // collapse negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

inline std::string escape_json(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Spectrum shorthand: comma-separated decimals, each optionally followed by
// ^m for multiplicity ("7,7,1,1,-3^3,-5^2").
// ---------------------------------------------------------------------------

inline Spectrum parse_spectrum(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        const int column = static_cast<int>(pos) + 1;

        std::size_t first = token.find_first_not_of(" \t");
        std::size_t last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw ParseError("empty spectrum entry", 1, column);
        token = token.substr(first, last - first + 1);

        std::string value_part = token;
        long mult = 1;
        if (std::size_t caret = token.find('^'); caret != std::string::npos) {
            value_part = token.substr(0, caret);
            const std::string mult_part = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                mult = std::stol(mult_part, &used);
                if (used != mult_part.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("multiplicity must be a positive integer", 1, column);
            }
            if (mult < 1) throw ParseError("multiplicity must be a positive integer", 1, column);
        }

        double v = 0.0;
        try {
            std::size_t used = 0;
            v = std::stod(value_part, &used);
            if (used != value_part.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("malformed spectrum value '" + value_part + "'", 1, column);
        }
        if (!std::isfinite(v)) throw ParseError("spectrum values must be finite", 1, column);
        for (long c = 0; c < mult; ++c) values.push_back(v);

        if (comma == text.size()) break;
        pos = comma + 1;
    }
    if (values.empty()) throw ParseError("spectrum is empty", 1, 1);
    return Spectrum(std::move(values));
}

inline std::vector<double> parse_double_list(std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        const int column = static_cast<int>(pos) + 1;
        try {
            std::size_t used = 0, first = token.find_first_not_of(" \t");
            if (first == std::string::npos) throw std::invalid_argument("");
            const double v = std::stod(token.substr(first), &used);
            if (token.find_first_not_of(" \t", first + used) != std::string::npos)
                throw std::invalid_argument("");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("malformed number '" + token + "'", 1, column);
        }
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

// Accepts "+", "-", "+1", "-1", "1".
inline std::vector<int> parse_sign_list(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        const int column = static_cast<int>(pos) + 1;
        token.erase(std::remove_if(token.begin(), token.end(),
                                   [](unsigned char c) { return std::isspace(c); }),
                    token.end());
        if (token == "+" || token == "+1" || token == "1") out.push_back(1);
        else if (token == "-" || token == "-1") out.push_back(-1);
        else throw ParseError("malformed sign '" + token + "' (use + or -)", 1, column);
        if (comma == text.size()) break;
        pos = comma + 1;
    }
    return out;
}

// "pos:value", 1-based position.
inline std::vector<std::pair<int, double>> parse_pin_list(std::span<const std::string> items) {
    std::vector<std::pair<int, double>> out;
    for (const std::string& item : items) {
        const std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("pin must look like position:value", 1, 1);
        try {
            std::size_t used = 0;
            const int pos = std::stoi(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument("");
            std::size_t used2 = 0;
            const std::string vp = item.substr(colon + 1);
            const double val = std::stod(vp, &used2);
            if (used2 != vp.size()) throw std::invalid_argument("");
            out.push_back({pos, val});
        } catch (const std::exception&) {
            throw ParseError("malformed pin '" + item + "'", 1, 1);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON emission.
// ---------------------------------------------------------------------------

inline std::string matrix_to_json(const SymMatrix& m, int precision = 17) {
    std::string out = "{\"n\": " + std::to_string(m.order()) + ", \"rows\": [";
    for (int i = 0; i < m.order(); ++i) {
        if (i) out += ", ";
        out += '[';
        for (int j = 0; j < m.order(); ++j) {
            if (j) out += ", ";
            out += format_double(m(i, j), precision);
        }
        out += ']';
    }
    out += "]}";
    return out;
}

inline std::string graph_to_json(const GraphSpec& g) {
    std::string out = "{\"n\": " + std::to_string(g.n()) + ", \"edges\": [";
    bool first = true;
    for (const auto& [i, j] : g.edges()) {
        if (!first) out += ", ";
        first = false;
        out += '[' + std::to_string(i) + ", " + std::to_string(j) + ']';
    }
    out += "]}";
    return out;
}

inline std::string edges_to_json(const std::vector<std::pair<int, int>>& edges) {
    std::string out = "[";
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (e) out += ", ";
        out += '[' + std::to_string(edges[e].first) + ", " + std::to_string(edges[e].second) + ']';
    }
    out += ']';
    return out;
}

inline std::string report_to_json(const RealizationReport& r, int precision = 17) {
    std::string out = "{";
    out += "\"spectrum_ok\": " + std::string(r.spectrum_ok ? "true" : "false");
    out += ", \"max_eig_residual\": " + format_double(r.max_eig_residual, precision);
    out += ", \"pattern_ok\": " + std::string(r.pattern_ok ? "true" : "false");
    out += ", \"missing_edges\": " + edges_to_json(r.missing_edges);
    out += ", \"spurious_edges\": " + edges_to_json(r.spurious_edges);
    out += ", \"row_sum_constant\": ";
    out += r.row_sum_constant ? format_double(*r.row_sum_constant, precision) : std::string("null");
    out += ", \"notes\": \"" + escape_json(r.notes) + "\"";
    out += "}";
    return out;
}

inline std::string clusters_to_json(const std::vector<Cluster>& clusters) {
    std::string out = "{\"clusters\": [";
    for (std::size_t idx = 0; idx < clusters.size(); ++idx) {
        if (idx) out += ", ";
        out += "{\"c\": [";
        for (std::size_t t = 0; t < clusters[idx].c.size(); ++t) {
            if (t) out += ", ";
            out += std::to_string(clusters[idx].c[t]);
        }
        out += "], \"s\": [";
        for (std::size_t t = 0; t < clusters[idx].s.size(); ++t) {
            if (t) out += ", ";
            out += std::to_string(clusters[idx].s[t]);
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

inline std::string ssp_to_json(const SspVerdict& v, int precision = 17) {
    return std::string("{\"has_ssp\": ") + (v.has_ssp ? "true" : "false") +
           ", \"nullity\": " + std::to_string(v.nullity) +
           ", \"smallest_retained_singular_value\": " +
           format_double(v.smallest_retained_singular_value, precision) + "}";
}

inline std::string matrix_to_text(const SymMatrix& m, int precision = 8) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<std::size_t>(m.order()) * m.order());
    std::size_t width = 0;
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) {
            cells.push_back(format_double(m(i, j), precision));
            width = std::max(width, cells.back().size());
        }
    std::string out;
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) {
            const std::string& cell = cells[static_cast<std::size_t>(i) * m.order() + j];
            if (j) out += "  ";
            out.append(width - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON parsing (nlohmann), with line/column reporting.
// ---------------------------------------------------------------------------

namespace detail {

inline std::pair<int, int> line_column_of(std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t t = 0; t < byte && t < text.size(); ++t) {
        if (text[t] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return {line, col};
}

inline nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_column_of(text, e.byte ? e.byte - 1 : 0);
        throw ParseError("malformed JSON: " + std::string(e.what()), line, col);
    }
}

}  // namespace detail

inline SymMatrix matrix_from_json(const std::string& text, const ToleranceProfile& tol = {}) {
    const nlohmann::json j = detail::parse_json_text(text);
    try {
        const int n = j.at("n").get<int>();
        const auto& rows = j.at("rows");
        if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n)
            throw IoError("matrix JSON needs n >= 1 and an n-row array");
        Matrix raw(n, n);
        for (int i = 0; i < n; ++i) {
            if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n)
                throw IoError("matrix row " + std::to_string(i + 1) + " does not have n entries");
            for (int c = 0; c < n; ++c) raw(i, c) = rows[i][c].get<double>();
        }
        return SymMatrix::mirrored(raw, tol);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("matrix JSON is missing or mistypes a field: " + std::string(e.what()));
    }
}

inline GraphSpec graph_from_json(const std::string& text) {
    const nlohmann::json j = detail::parse_json_text(text);
    try {
        const int n = j.at("n").get<int>();
        GraphSpec g(n);
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw IoError("graph edges must be two-element arrays");
            g.add_edge(e[0].get<int>(), e[1].get<int>());
        }
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("graph JSON is missing or mistypes a field: " + std::string(e.what()));
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << bytes;
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace iepg
