#include "riskframe/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "riskframe/errors.hpp"

namespace riskframe {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<CsvCell> row) {
    if (row.size() != header_.size())
        throw Error("csv row has " + std::to_string(row.size()) + " cells, header has " +
                    std::to_string(header_.size()));
    rows_.push_back(std::move(row));
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string cell_text(const CsvCell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) return csv_escape(*s);
    if (const auto* i = std::get_if<int>(&cell)) return std::to_string(*i);
    return format_number(std::get<double>(cell));
}

template <class Range, class Fn>
void write_line(std::ostream& out, const Range& cells, Fn text) {
    bool first = true;
    for (const auto& c : cells) {
        if (!first) out << ',';
        out << text(c);
        first = false;
    }
    out << '\n';
}

}  // namespace

void CsvTable::write(std::ostream& out) const {
    write_line(out, header_, [](const std::string& h) { return csv_escape(h); });
    for (const auto& row : rows_) write_line(out, row, cell_text);
}

std::string CsvTable::str() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

}  // namespace riskframe
