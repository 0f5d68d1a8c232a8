#include "tsallis/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tsallis::cli {

std::string format_real(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw std::invalid_argument("CSV row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

namespace {

void write_line(std::ostream& os, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << ',';
        os << cells[i];
    }
    os << '\n';
}

}  // namespace

void CsvTable::write(std::ostream& os) const {
    write_line(os, header_);
    for (const auto& r : rows_) {
        write_line(os, r);
    }
}

}  // namespace tsallis::cli
