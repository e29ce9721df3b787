#pragma once

#include <charconv>
#include <filesystem>
#include <string>
#include <vector>

#include "pollflow/errors.hpp"

namespace pollflow::csv {

struct Row {
    int line = 0; // 1-based line in the source file
    std::vector<std::string> fields;
};

// Reads a comma-separated file. The first row is the header; it is returned
// separately. Empty lines are skipped. No quoting support: the formats used
// here never contain commas inside fields.
struct Table {
    std::vector<std::string> header;
    std::vector<Row> rows;
};

Table read_file(const std::filesystem::path& path);

// Column lookup with a helpful error naming the file and column.
int column_index(const Table& table, const std::string& name, const std::filesystem::path& path);

long parse_long(const Row& row, int col, const std::filesystem::path& path);
double parse_double(const Row& row, int col, const std::filesystem::path& path);

// Shortest round-trip representation of a double (to_chars), so emitted CSVs
// reload to bit-identical values.
std::string format_double(double v);

} // namespace pollflow::csv
