// csv.hpp: result tables and their CSV form

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace cqed::experiments {

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> provenance; // written as '#'-prefixed lines

    void add_row(std::vector<double> row);
    std::size_t column_index(const std::string& name) const;
    std::vector<double> column(const std::string& name) const;
};

// '#' provenance lines, then the header row, then one line per row.
// Values use the classic locale with 17 significant digits.
std::string format_csv(const ResultTable& table);
void write_csv(const ResultTable& table, const std::filesystem::path& path);

// Reads back a table written by write_csv.
ResultTable read_csv(const std::filesystem::path& path);

} // namespace cqed::experiments
