#pragma once

#include "osculant/record.hpp"
#include "osculant/sampler.hpp"
#include "osculant/solve.hpp"

namespace osculant::exper {

struct ExperimentConfig {
    SchubertProblemSpec problem;
    long long instances_per_type = 50;
    uint64_t master_seed = 1;
    int point_range = 12; // coordinate bound R
    std::string output_path;
    groebner::GroebnerBudget budgets;
    int threads = 0; // 0 = library default
    // test hook: stop after appending this many new records (simulates
    // an interrupted run); negative = unlimited
    long long max_new_records = -1;

    static ExperimentConfig from_json_file(const std::string& path);
    std::string to_json() const;
};

// Seeded, resumable, stratified experiment. For every admissible
// osculation type, produces instances_per_type transversal records;
// non-transversal or failed samples are appended as discarded records
// and resampled with the next attempt seed. Appends to output_path in
// a canonical order independent of thread scheduling, and resumes from
// an existing log without recomputing finished work.
std::vector<InstanceRecord> run_experiment(const ExperimentConfig& config);

} // namespace osculant::exper
