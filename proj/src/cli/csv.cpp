#include "tbvp/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tbvp::cli {

std::string format_number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<Vector>& columns) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << '\n';
    const Eigen::Index rows = columns.empty() ? 0 : columns.front().size();
    for (Eigen::Index r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << (c ? "," : "") << format_number(columns[c][r]);
        out << '\n';
    }
}

namespace {

bool parse_row(const std::string& line, std::vector<double>& row) {
    row.clear();
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        if (b == std::string::npos) return false;
        const char* first = cell.data() + b;
        const char* last = cell.data() + e + 1;
        double v = 0.0;
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last) return false;
        row.push_back(v);
    }
    return !row.empty();
}

}  // namespace

std::vector<std::vector<double>> read_csv(const std::string& path,
                                          std::vector<std::string>* header) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    std::vector<double> row;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!parse_row(line, row)) {
            if (lineno == 1) {
                if (header) {
                    header->clear();
                    std::stringstream ss(line);
                    std::string cell;
                    while (std::getline(ss, cell, ',')) header->push_back(cell);
                }
                continue;
            }
            throw ConfigError(path + ": line " + std::to_string(lineno) + " is not numeric");
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ConfigError(path + ": line " + std::to_string(lineno) + " has " +
                              std::to_string(row.size()) + " columns, expected " +
                              std::to_string(rows.front().size()));
        rows.push_back(row);
    }
    return rows;
}

GridFunction read_input(const std::string& path, double T) {
    const auto rows = read_csv(path);
    const int n = static_cast<int>(rows.size());
    if (n < 3 || n % 2 == 0)
        throw ConfigError(path + ": need an odd number (>= 3) of rows, got " + std::to_string(n));
    if (rows.front().size() < 2) throw ConfigError(path + ": expected columns x, v");
    const double h = 2.0 * T / (n - 1);
    Vector v(n);
    for (int i = 0; i < n; ++i) {
        const double x = -T + i * h;
        if (std::abs(rows[i][0] - x) > 1e-9 * std::max(1.0, T))
            throw ConfigError(path + ": x column is not the uniform grid of [-T, T] (row " +
                              std::to_string(i + 1) + ")");
        v[i] = rows[i][1];
    }
    return GridFunction(-T, T, std::move(v));
}

}  // namespace tbvp::cli
