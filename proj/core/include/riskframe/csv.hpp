#pragma once

// Small CSV writer: RFC 4180 quoting, LF line endings, numbers in %.6g.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace riskframe {

using CsvCell = std::variant<std::string, double, int>;

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    /// Throws Error when the row width differs from the header.
    void add_row(std::vector<CsvCell> row);

    const std::vector<std::string>& header() const noexcept { return header_; }
    const std::vector<std::vector<CsvCell>>& rows() const noexcept { return rows_; }

    void write(std::ostream& out) const;
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<CsvCell>> rows_;
};

/// "%.6g"; non-finite values print as nan, inf, -inf.
std::string format_number(double value);

std::string csv_escape(const std::string& field);

}  // namespace riskframe
