// csv.hpp: self-describing numeric CSV: '#' metadata lines, one header row, 12 significant digits

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twospin::csv {

inline constexpr int kSignificantDigits = 12;

struct Table {
    std::vector<std::string> metadata;  // written as "# <line>"
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    // Throws std::invalid_argument if a row width differs from the header.
    void add_row(std::vector<double> row);
    std::size_t column(const std::string& name) const;  // throws std::out_of_range
};

std::string format_number(double value);

void write(std::ostream& os, const Table& table);
Table read(std::istream& is);

void write_file(const std::string& path, const Table& table);
Table read_file(const std::string& path);

}  // namespace twospin::csv
