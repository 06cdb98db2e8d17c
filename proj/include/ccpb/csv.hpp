#pragma once

#include <string>
#include <vector>

namespace ccpb {

/// Rectangular numeric table with a fixed header, written with a fixed number
/// of significant digits so identical inputs produce byte-identical files.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
    int precision = 6;

    void add_row(std::vector<double> row);
    std::string to_string() const;
    void write(const std::string& path) const;
};

/// One number formatted the way CsvTable writes cells (%.*g).
std::string format_sig(double value, int precision);

} // namespace ccpb
