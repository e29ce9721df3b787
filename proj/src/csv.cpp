#include "pollflow/csv.hpp"

#include <fstream>
#include <sstream>

namespace pollflow::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

Table read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    Table table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (table.header.empty()) {
            table.header = split_line(line);
            continue;
        }
        Row row{line_no, split_line(line)};
        if (row.fields.size() != table.header.size()) {
            throw ValidationError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                                  std::to_string(table.header.size()) + " fields, got " +
                                  std::to_string(row.fields.size()));
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) throw ValidationError(path.string() + ": missing header row");
    return table;
}

int column_index(const Table& table, const std::string& name, const std::filesystem::path& path) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (table.header[i] == name) return static_cast<int>(i);
    }
    throw ValidationError(path.string() + ": missing column '" + name + "'");
}

long parse_long(const Row& row, int col, const std::filesystem::path& path) {
    const std::string& s = row.fields.at(col);
    long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError(path.string() + ":" + std::to_string(row.line) + ": column " +
                              std::to_string(col + 1) + ": '" + s + "' is not an integer");
    }
    return value;
}

double parse_double(const Row& row, int col, const std::filesystem::path& path) {
    const std::string& s = row.fields.at(col);
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw ValidationError(path.string() + ":" + std::to_string(row.line) + ": column " +
                              std::to_string(col + 1) + ": '" + s + "' is not a number");
    }
    return value;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

} // namespace pollflow::csv
