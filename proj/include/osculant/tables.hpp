#pragma once

#include <map>

#include "osculant/record.hpp"
#include "osculant/schur.hpp"

namespace osculant::exper {

using combinat::SchubertProblemSpec;

// Tally of transversal records: rows keyed by osculation type
// (descending, all-real first), columns by number of real solutions.
struct FrequencyTable {
    std::string problem;
    long long num_complex = 0;
    struct Row {
        std::string type_text;
        std::vector<int> type_counts; // numeric view used for ordering
        std::map<long long, long long> cells;
        long long total = 0;
    };
    std::vector<Row> rows;
};

FrequencyTable tabulate(const std::vector<InstanceRecord>& records);

enum class TableFormat { text, csv, json };

std::string render(const FrequencyTable& table, TableFormat format);

} // namespace osculant::exper
