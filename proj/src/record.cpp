#include "osculant/record.hpp"

#include <fstream>
#include <json.hpp>

#include "osculant/errors.hpp"

namespace osculant::exper {

using ordered_json = nlohmann::ordered_json;

std::string to_json_line(const InstanceRecord& r) {
    ordered_json j;
    j["problem"] = r.problem;
    j["k"] = r.k;
    j["n"] = r.n;
    j["instance_index"] = r.instance_index;
    j["attempt"] = r.attempt;
    j["derived_seed"] = r.derived_seed;
    j["osculation_type"] = r.osculation_type;
    j["points"] = r.points;
    j["num_real"] = r.num_real;
    j["num_complex"] = r.num_complex;
    j["transversal"] = r.transversal;
    j["elapsed_ms"] = r.elapsed_ms;
    j["chart"] = r.chart;
    if (!r.discarded_reason.empty()) j["discarded_reason"] = r.discarded_reason;
    return j.dump();
}

InstanceRecord record_from_json_line(const std::string& line) {
    ordered_json j = ordered_json::parse(line);
    InstanceRecord r;
    r.problem = j.at("problem").get<std::string>();
    r.k = j.at("k").get<int>();
    r.n = j.at("n").get<int>();
    r.instance_index = j.at("instance_index").get<long long>();
    r.attempt = j.at("attempt").get<int>();
    r.derived_seed = j.at("derived_seed").get<uint64_t>();
    r.osculation_type = j.at("osculation_type").get<std::string>();
    r.points = j.at("points").get<std::vector<std::string>>();
    r.num_real = j.at("num_real").get<long long>();
    r.num_complex = j.at("num_complex").get<long long>();
    r.transversal = j.at("transversal").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    r.chart = j.at("chart").get<std::string>();
    if (j.contains("discarded_reason")) r.discarded_reason = j.at("discarded_reason").get<std::string>();
    return r;
}

std::vector<InstanceRecord> read_log(const std::string& path) {
    std::ifstream in(path);
    std::vector<InstanceRecord> out;
    if (!in) return out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json_line(line));
        } catch (const std::exception&) {
            // a torn trailing line from an interrupted run is dropped
            break;
        }
    }
    return out;
}

std::string canonical_log(const std::string& path) {
    std::string out;
    for (auto r : read_log(path)) {
        r.elapsed_ms = 0;
        out += to_json_line(r);
        out += "\n";
    }
    return out;
}

} // namespace osculant::exper
