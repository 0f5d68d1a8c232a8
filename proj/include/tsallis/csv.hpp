#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsallis::cli {

/// Reals in CSV and reports: at most 12 significant digits, trailing zeros
/// dropped ("%.12g" semantics, locale independent).
std::string format_real(double v);

/// Fixed-width CSV table; header always written, LF line endings.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws std::invalid_argument if the cell count differs from the header.
    void add_row(std::vector<std::string> cells);

    const std::vector<std::string>& header() const { return header_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    void write(std::ostream& os) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace tsallis::cli
