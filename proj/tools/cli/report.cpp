#include "cli/report.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "krull/error.hpp"

namespace krull::cli {

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "markdown" || s == "md") return Format::markdown;
    throw ArgumentError("unknown format '" + s + "' (expected json, csv or markdown)");
}

namespace {

struct Table {
    std::string path;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

bool is_table(const Json& v) {
    if (!v.is_array() || v.empty()) return false;
    for (const auto& row : v)
        if (!row.is_object()) return false;
    return true;
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& scalars,
             std::vector<Table>& tables) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), scalars, tables);
        return;
    }
    if (is_table(v)) {
        Table t;
        t.path = path;
        for (const auto& row : v)
            for (auto it = row.begin(); it != row.end(); ++it)
                if (std::find(t.columns.begin(), t.columns.end(), it.key()) == t.columns.end())
                    t.columns.push_back(it.key());
        std::sort(t.columns.begin(), t.columns.end());
        for (const auto& row : v) {
            std::vector<std::string> cells;
            for (const auto& c : t.columns) cells.push_back(row.contains(c) ? scalar_text(row[c]) : "");
            t.rows.push_back(std::move(cells));
        }
        tables.push_back(std::move(t));
        return;
    }
    scalars.emplace_back(path, scalar_text(v));
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string emit_report(const Json& report, Format f) {
    if (f == Format::json) return report.dump(2) + "\n";

    std::vector<std::pair<std::string, std::string>> scalars;
    std::vector<Table> tables;
    flatten(report, "", scalars, tables);
    std::ostringstream os;
    if (f == Format::csv) {
        os << "key,value\n";
        for (const auto& [k, v] : scalars) os << csv_cell(k) << "," << csv_cell(v) << "\n";
        for (const auto& t : tables) {
            os << "\n# " << t.path << "\n";
            for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_cell(t.columns[i]);
            os << "\n";
            for (const auto& row : t.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
                os << "\n";
            }
        }
        return os.str();
    }

    os << "# krull-arith report\n\n| key | value |\n|---|---|\n";
    for (const auto& [k, v] : scalars) os << "| " << md_cell(k) << " | " << md_cell(v) << " |\n";
    for (const auto& t : tables) {
        os << "\n## " << t.path << "\n\n|";
        for (const auto& c : t.columns) os << " " << md_cell(c) << " |";
        os << "\n|";
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << "---|";
        os << "\n";
        for (const auto& row : t.rows) {
            os << "|";
            for (const auto& cell : row) os << " " << md_cell(cell) << " |";
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace krull::cli
