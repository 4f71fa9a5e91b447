#include "dirac/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dirac::cli {

namespace {

std::string format_value(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void validate(const Table& table) {
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("table: ragged row");
        for (double value : row)
            if (!std::isfinite(value))
                throw std::invalid_argument("table: non-finite value rejected");
    }
}

} // namespace

std::string to_csv(const Table& table) {
    validate(table);
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c)
            out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_value(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& table) {
    validate(table);
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json record;
        for (std::size_t c = 0; c < row.size(); ++c)
            record[table.columns[c]] = row[c];
        records.push_back(std::move(record));
    }
    return records.dump(2) + "\n";
}

Table parse_csv(const std::string& text) {
    Table table;
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line))
        throw std::invalid_argument("parse_csv: missing header");
    std::istringstream header(line);
    std::string field;
    while (std::getline(header, field, ','))
        table.columns.push_back(field);
    while (std::getline(stream, line)) {
        if (line.empty())
            continue;
        std::vector<double> row;
        std::istringstream cells(line);
        while (std::getline(cells, field, ',')) {
            // strtod instead of stod: subnormal cells are legitimate values,
            // not range errors
            const char* begin = field.c_str();
            char* end = nullptr;
            const double value = std::strtod(begin, &end);
            if (end == begin || end != begin + field.size())
                throw std::invalid_argument("parse_csv: non-numeric cell '" + field + "'");
            row.push_back(value);
        }
        if (row.size() != table.columns.size())
            throw std::invalid_argument("parse_csv: ragged row");
        table.rows.push_back(std::move(row));
    }
    return table;
}

void emit(const Table& table, OutputFormat format, const std::string& path) {
    const std::string payload =
        format == OutputFormat::csv ? to_csv(table) : to_json(table);
    if (path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw std::ios_base::failure("emit: cannot open '" + path + "' for writing");
    file << payload;
    file.flush();
    if (!file)
        throw std::ios_base::failure("emit: write to '" + path + "' failed");
}

} // namespace dirac::cli
