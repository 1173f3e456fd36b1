#include "cqed/experiments/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cqed/errors.hpp"

namespace cqed::experiments {

void ResultTable::add_row(std::vector<double> row)
{
    if (row.size() != columns.size()) {
        throw InvalidDimension("row has " + std::to_string(row.size()) + " values for " +
                               std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::size_t ResultTable::column_index(const std::string& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    throw InvalidArgument("no column named '" + name + "'");
}

std::vector<double> ResultTable::column(const std::string& name) const
{
    const auto index = column_index(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(row[index]);
    return out;
}

std::string format_csv(const ResultTable& table)
{
    std::string out;
    for (const auto& line : table.provenance) out += "# " + line + "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    char buf[64];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            // snprintf with %g honours LC_NUMERIC; to_chars does not.
            const auto res = std::to_chars(buf, buf + sizeof buf, row[i], std::chars_format::general, 17);
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const ResultTable& table, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << format_csv(table);
    if (!out) throw Error("failed writing " + path.string());
}

ResultTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    ResultTable table;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            table.provenance.push_back(line.size() > 2 ? line.substr(2) : std::string());
            continue;
        }
        std::stringstream cells(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(cells, cell, ',')) table.columns.push_back(cell);
            have_header = true;
            continue;
        }
        std::vector<double> row;
        while (std::getline(cells, cell, ',')) {
            double v = 0.0;
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || end != cell.data() + cell.size()) {
                throw Error("malformed value '" + cell + "' in " + path.string());
            }
            row.push_back(v);
        }
        table.add_row(std::move(row));
    }
    if (!have_header) throw Error("no header row in " + path.string());
    return table;
}

} // namespace cqed::experiments
