#include "osculant/tables.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "osculant/grammar.hpp"

namespace osculant::exper {

namespace {

std::vector<int> type_counts_of(const std::string& type_text) {
    // "3.3.3:1,1:3" -> {1, 3}
    std::vector<int> out;
    size_t pos = 0;
    while (pos < type_text.size()) {
        size_t colon = type_text.find(':', pos);
        if (colon == std::string::npos) throw domain_error("bad osculation type text");
        size_t comma = type_text.find(',', colon);
        std::string num = type_text.substr(colon + 1, comma == std::string::npos
                                                          ? std::string::npos
                                                          : comma - colon - 1);
        out.push_back(std::stoi(num));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace

FrequencyTable tabulate(const std::vector<InstanceRecord>& records) {
    FrequencyTable table;
    std::map<std::string, FrequencyTable::Row> rows;
    for (const auto& r : records) {
        if (table.problem.empty()) {
            table.problem = r.problem;
        } else if (table.problem != r.problem) {
            throw domain_error("tabulate: records mix problems '" + table.problem + "' and '" +
                               r.problem + "'");
        }
        if (!r.kept()) continue; // discarded records never enter tables
        table.num_complex = std::max(table.num_complex, r.num_complex);
        auto& row = rows[r.osculation_type];
        if (row.type_text.empty()) {
            row.type_text = r.osculation_type;
            row.type_counts = type_counts_of(r.osculation_type);
        }
        row.cells[r.num_real] += 1;
        row.total += 1;
    }
    for (auto& [text, row] : rows) table.rows.push_back(std::move(row));
    std::sort(table.rows.begin(), table.rows.end(),
              [](const FrequencyTable::Row& a, const FrequencyTable::Row& b) {
                  return a.type_counts > b.type_counts;
              });
    return table;
}

std::string render(const FrequencyTable& table, TableFormat format) {
    // admissible column values share the parity of the complex count
    std::vector<long long> columns;
    for (long long v = table.num_complex % 2; v <= table.num_complex; v += 2)
        columns.push_back(v);

    if (format == TableFormat::json) {
        nlohmann::ordered_json j;
        j["problem"] = table.problem;
        j["num_complex"] = table.num_complex;
        j["columns"] = columns;
        auto& jr = j["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json o;
            o["type"] = row.type_text;
            nlohmann::ordered_json cells = nlohmann::ordered_json::object();
            for (const auto& [k, v] : row.cells) cells[std::to_string(k)] = v;
            o["cells"] = cells;
            o["total"] = row.total;
            jr.push_back(o);
        }
        return j.dump(2) + "\n";
    }

    if (format == TableFormat::csv) {
        std::ostringstream out;
        out << "type";
        for (long long c : columns) out << "," << c;
        out << ",total\n";
        for (const auto& row : table.rows) {
            out << "\"" << row.type_text << "\"";
            for (long long c : columns) {
                auto it = row.cells.find(c);
                out << "," << (it == row.cells.end() ? 0 : it->second);
            }
            out << "," << row.total << "\n";
        }
        return out.str();
    }

    // text: osculation types down the side, real-solution counts across
    std::ostringstream out;
    size_t type_width = 4;
    for (const auto& row : table.rows) type_width = std::max(type_width, row.type_text.size());
    out << table.problem << "  (" << table.num_complex << " complex solutions)\n";
    out << std::string(type_width, ' ') << " |";
    for (long long c : columns) {
        std::string h = std::to_string(c);
        out << " " << std::string(h.size() < 7 ? 7 - h.size() : 0, ' ') << h;
    }
    out << " | total\n";
    out << std::string(type_width, '-') << "-+" << std::string(columns.size() * 8, '-') << "-+------\n";
    for (const auto& row : table.rows) {
        out << row.type_text << std::string(type_width - row.type_text.size(), ' ') << " |";
        for (long long c : columns) {
            auto it = row.cells.find(c);
            std::string v = (it == row.cells.end()) ? "" : std::to_string(it->second);
            out << " " << std::string(v.size() < 7 ? 7 - v.size() : 0, ' ') << v;
        }
        out << " | " << row.total << "\n";
    }
    return out.str();
}

} // namespace osculant::exper
