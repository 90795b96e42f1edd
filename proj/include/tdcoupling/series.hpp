// series.hpp: labelled time series and their CSV form
//
// A table is a shared tau column plus one or more value columns. Files are
// written to a sibling temporary and renamed into place, so a reader never
// sees a half-written table.

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "tdcoupling/error.hpp"

namespace tdc::series {

struct TimeSeries {
    std::string label;
    std::vector<double> tau;
    std::vector<double> values;

    void validate() const {
        if (tau.size() != values.size())
            throw DomainError("series '" + label + "': tau and values differ in length");
        for (std::size_t i = 1; i < tau.size(); ++i)
            if (!(tau[i] > tau[i - 1])) throw DomainError("series '" + label + "': tau must be strictly increasing");
    }
};

// Columns sharing one tau grid.
struct Table {
    std::vector<double> tau;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> columns;

    void add(std::string label, std::vector<double> values) {
        if (values.size() != tau.size()) throw DomainError("table column '" + label + "' has the wrong length");
        labels.push_back(std::move(label));
        columns.push_back(std::move(values));
    }

    TimeSeries series(std::size_t i) const { return {labels.at(i), tau, columns.at(i)}; }
};

// Shortest-exact-enough decimal: 17 significant digits round-trip a double.
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);  // + 0.0 turns -0 into 0
    return buf;
}

inline std::string to_csv(const Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) table.series(c).validate();
    std::string out = "tau";
    for (const auto& label : table.labels) out += "," + label;
    out += "\n";
    for (std::size_t r = 0; r < table.tau.size(); ++r) {
        out += format_number(table.tau[r]);
        for (const auto& col : table.columns) out += "," + format_number(col[r]);
        out += "\n";
    }
    return out;
}

inline Table parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("csv: empty input");
    Table table;
    {
        std::istringstream header(line);
        std::string cell;
        std::getline(header, cell, ',');
        if (cell != "tau") throw ConfigError("csv: first column must be 'tau'");
        while (std::getline(header, cell, ',')) table.labels.push_back(cell);
    }
    table.columns.resize(table.labels.size());
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> cells;
        while (std::getline(row, cell, ',')) {
            try {
                std::size_t used = 0;
                cells.push_back(std::stod(cell, &used));
                if (used != cell.size()) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                throw ConfigError("csv line " + std::to_string(lineno) + ": not a number: " + cell);
            }
        }
        if (cells.size() != table.labels.size() + 1)
            throw ConfigError("csv line " + std::to_string(lineno) + ": wrong number of columns");
        table.tau.push_back(cells[0]);
        for (std::size_t c = 0; c < table.labels.size(); ++c) table.columns[c].push_back(cells[c + 1]);
    }
    return table;
}

// Write `contents` to `path` through a temporary file in the same directory.
inline void write_atomic(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << contents;
        out.flush();
        if (!out) throw Error("failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_csv(const std::filesystem::path& path, const Table& table) { write_atomic(path, to_csv(table)); }

inline Table read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

// tau = 0, step, 2 step, ... up to tau_max inclusive (to within half a step).
inline std::vector<double> tau_grid(double tau_max, double step) {
    if (!(step > 0.0) || !(tau_max >= 0.0)) throw DomainError("tau grid: step must be positive and tau_max >= 0");
    const auto n = static_cast<std::size_t>(tau_max / step + 0.5);
    std::vector<double> tau(n + 1);
    for (std::size_t i = 0; i <= n; ++i) tau[i] = static_cast<double>(i) * step;
    return tau;
}

} // namespace tdc::series
