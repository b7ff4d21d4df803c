#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mayachar/brauer.hpp"
#include "mayachar/gamma.hpp"
#include "mayachar/parallel.hpp"

namespace mayachar {

inline constexpr const char* kToolName = "mayachar";
inline constexpr const char* kToolVersion = "0.1.0";

/// A character table with exact values kept as decimal strings.
struct TableReport {
    std::string algebra; // sym | spin | brauer | walled
    std::string size;    // "n=4" or "r=2,s=1"
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> values;
    std::string tool = kToolName;
    std::string version = kToolVersion;

    bool operator==(const TableReport&) const = default;
};

inline nlohmann::json to_json(const TableReport& t) {
    return nlohmann::json{{"tool", t.tool},     {"version", t.version},
                          {"algebra", t.algebra}, {"size", t.size},
                          {"rows", t.rows},     {"cols", t.cols},
                          {"values", t.values}};
}

inline TableReport table_from_json(const nlohmann::json& j) {
    TableReport t;
    t.tool = j.at("tool").get<std::string>();
    t.version = j.at("version").get<std::string>();
    t.algebra = j.at("algebra").get<std::string>();
    t.size = j.at("size").get<std::string>();
    t.rows = j.at("rows").get<std::vector<std::string>>();
    t.cols = j.at("cols").get<std::vector<std::string>>();
    t.values = j.at("values").get<std::vector<std::vector<std::string>>>();
    return t;
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

/// json: string-encoded integers, lossless. csv: quoted labels. text: aligned.
inline std::string format_table(const TableReport& t, const std::string& format) {
    if (format == "json") return to_json(t).dump(2) + "\n";
    std::ostringstream os;
    if (format == "csv") {
        os << "label";
        for (const auto& c : t.cols) os << ',' << detail::csv_quote(c);
        os << '\n';
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            os << detail::csv_quote(t.rows[i]);
            for (const auto& v : t.values[i]) os << ',' << detail::csv_quote(v);
            os << '\n';
        }
        return os.str();
    }
    if (format != "text") throw input_error("unknown format: " + format);
    std::vector<std::size_t> width(t.cols.size() + 1, 0);
    for (const auto& r : t.rows) width[0] = std::max(width[0], r.size());
    for (std::size_t j = 0; j < t.cols.size(); ++j) {
        width[j + 1] = t.cols[j].size();
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            width[j + 1] = std::max(width[j + 1], t.values[i][j].size());
    }
    os << t.algebra << " characters, " << t.size << '\n';
    os << std::left << std::setw(static_cast<int>(width[0])) << "" << std::right;
    for (std::size_t j = 0; j < t.cols.size(); ++j)
        os << "  " << std::setw(static_cast<int>(width[j + 1])) << t.cols[j];
    os << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(width[0])) << t.rows[i] << std::right;
        for (std::size_t j = 0; j < t.cols.size(); ++j)
            os << "  " << std::setw(static_cast<int>(width[j + 1])) << t.values[i][j];
        os << '\n';
    }
    return os.str();
}

namespace detail {

inline std::string part_label(const Partition& p) {
    return p.empty() ? "()" : mayachar::to_string(p);
}

template <class Cell>
void fill_cells(TableReport& t, std::size_t ncols, Cell&& cell) {
    const std::size_t n = t.rows.size() * ncols;
    t.values.assign(t.rows.size(), std::vector<std::string>(ncols));
    parallel_for(n, [&](std::size_t idx) {
        t.values[idx / ncols][idx % ncols] = cell(idx / ncols, idx % ncols);
    });
}

} // namespace detail

/// Rows and columns in reverse lexicographic order.
inline TableReport sym_table(int n) {
    if (n < 0) throw input_error("n must be nonnegative");
    TableReport t;
    t.algebra = "sym";
    t.size = "n=" + std::to_string(n);
    std::vector<Partition> parts = partitions_of(n);
    for (const auto& p : parts) t.rows.push_back(detail::part_label(p));
    t.cols = t.rows;
    detail::fill_cells(t, parts.size(), [&](std::size_t i, std::size_t j) {
        return to_string(character(parts[i], parts[j]));
    });
    return t;
}

/// Strict rows, all-odd columns; values are psi~.
inline TableReport spin_table(int n) {
    if (n < 0) throw input_error("n must be nonnegative");
    TableReport t;
    t.algebra = "spin";
    t.size = "n=" + std::to_string(n);
    std::vector<Partition> rows = strict_partitions_of(n);
    std::vector<Partition> cols = all_odd_partitions_of(n);
    for (const auto& p : rows) t.rows.push_back(detail::part_label(p));
    for (const auto& p : cols) t.cols.push_back(detail::part_label(p));
    detail::fill_cells(t, cols.size(), [&](std::size_t i, std::size_t j) {
        return to_string(psi_tilde(rows[i], cols[j]));
    });
    return t;
}

/// Rows (n,lambda) with |lambda| = n, n-2, ...; columns are cycle types of n.
inline TableReport brauer_table(int n) {
    if (n < 0) throw input_error("n must be nonnegative");
    TableReport t;
    t.algebra = "brauer";
    t.size = "n=" + std::to_string(n);
    std::vector<Partition> rows;
    for (int size = n; size >= 0; size -= 2)
        for (const auto& p : partitions_of(size)) rows.push_back(p);
    std::vector<Partition> cols = partitions_of(n);
    for (const auto& p : rows) t.rows.push_back(detail::part_label(p));
    for (const auto& p : cols) t.cols.push_back(detail::part_label(p));
    detail::fill_cells(t, cols.size(), [&](std::size_t i, std::size_t j) {
        return to_string(brauer_char(BrauerLabel(n, rows[i]), cols[j]));
    });
    return t;
}

/// Rows [lambda|kappa]; columns (mu;nu) pairs.
inline TableReport walled_table(int r, int s) {
    if (r < 0 || s < 0) throw input_error("r, s must be nonnegative");
    TableReport t;
    t.algebra = "walled";
    t.size = "r=" + std::to_string(r) + ",s=" + std::to_string(s);
    std::vector<std::pair<Partition, Partition>> rows;
    for (int i = 0; i <= std::min(r, s); ++i)
        for (const auto& lam : partitions_of(r - i))
            for (const auto& kap : partitions_of(s - i))
                rows.push_back({lam, kap});
    std::vector<std::pair<Partition, Partition>> cols;
    for (const auto& mu : partitions_of(r))
        for (const auto& nu : partitions_of(s)) cols.push_back({mu, nu});
    for (const auto& [lam, kap] : rows)
        t.rows.push_back("[" + detail::part_label(lam) + "|" + detail::part_label(kap) + "]");
    for (const auto& [mu, nu] : cols)
        t.cols.push_back("(" + detail::part_label(mu) + ";" + detail::part_label(nu) + ")");
    detail::fill_cells(t, cols.size(), [&](std::size_t i, std::size_t j) {
        WalledLabel label(r, s, rows[i].first, rows[i].second);
        return to_string(walled_char(label, cols[j].first, cols[j].second));
    });
    return t;
}

} // namespace mayachar
