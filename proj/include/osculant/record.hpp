#pragma once

#include <string>
#include <vector>
#include <cstdint>

namespace osculant::exper {

// One line of the append-only record log. Discarded (non-transversal
// or failed) samples carry a reason and never enter frequency tables.
struct InstanceRecord {
    std::string problem;
    int k = 0;
    int n = 0;
    long long instance_index = 0;
    int attempt = 0;
    uint64_t derived_seed = 0;
    std::string osculation_type;
    std::vector<std::string> points;
    long long num_real = 0;
    long long num_complex = 0;
    bool transversal = false;
    long long elapsed_ms = 0;
    std::string chart;
    std::string discarded_reason; // empty for kept records

    bool kept() const { return discarded_reason.empty() && transversal; }
};

std::string to_json_line(const InstanceRecord& record);
InstanceRecord record_from_json_line(const std::string& line);

std::vector<InstanceRecord> read_log(const std::string& path);

// The log with elapsed_ms canonicalized to zero; wall time is the one
// field that is not a pure function of the configuration.
std::string canonical_log(const std::string& path);

} // namespace osculant::exper
