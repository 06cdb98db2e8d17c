#include "ccpb/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace ccpb {

std::string format_sig(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    return buf;
}

void CsvTable::add_row(std::vector<double> row) {
    if (row.size() != header.size()) {
        throw std::invalid_argument("csv row width does not match header");
    }
    rows.push_back(std::move(row));
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) out += ',';
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_sig(row[i], precision);
        }
        out += '\n';
    }
    return out;
}

void CsvTable::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << to_string();
}

} // namespace ccpb
