#include "osculant/runner.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <json.hpp>

#include "osculant/grammar.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace osculant::exper {

using ordered_json = nlohmann::ordered_json;

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("config: cannot open " + path);
    ordered_json j = ordered_json::parse(in);
    ExperimentConfig c;
    c.problem = parse_problem(j.at("problem").get<std::string>());
    c.instances_per_type = j.value("instances_per_type", 50ll);
    c.master_seed = j.value("master_seed", 1ull);
    c.point_range = j.value("point_range", 12);
    c.output_path = j.at("output_path").get<std::string>();
    c.threads = j.value("threads", 0);
    if (j.contains("budgets")) {
        const auto& b = j.at("budgets");
        c.budgets.max_pairs = b.value("max_pairs", c.budgets.max_pairs);
        c.budgets.max_basis = b.value("max_basis", c.budgets.max_basis);
        c.budgets.max_terms = b.value("max_terms", c.budgets.max_terms);
    }
    if (c.instances_per_type < 1) throw domain_error("config: instances_per_type must be >= 1");
    if (c.point_range < 2) throw domain_error("config: point_range must be >= 2");
    return c;
}

std::string ExperimentConfig::to_json() const {
    ordered_json j;
    j["problem"] = problem.to_text();
    j["instances_per_type"] = instances_per_type;
    j["master_seed"] = master_seed;
    j["point_range"] = point_range;
    j["output_path"] = output_path;
    j["threads"] = threads;
    j["budgets"] = {{"max_pairs", budgets.max_pairs},
                    {"max_basis", budgets.max_basis},
                    {"max_terms", budgets.max_terms}};
    return j.dump(2);
}

namespace {

InstanceRecord compute_record(const ExperimentConfig& config, const schubert::OsculationType& type,
                              const std::string& type_text, long long index, int attempt,
                              long long expected) {
    InstanceRecord rec;
    rec.problem = config.problem.to_text();
    rec.k = config.problem.k;
    rec.n = config.problem.n;
    rec.instance_index = index;
    rec.attempt = attempt;
    rec.osculation_type = type_text;
    rec.derived_seed = derive_seed(config.master_seed, type_text, static_cast<uint64_t>(index),
                                   static_cast<uint64_t>(attempt));

    auto started = std::chrono::steady_clock::now();
    try {
        SeededRng rng(rec.derived_seed);
        auto instance = sample_instance(config.problem, type, rng, config.point_range);
        for (const auto& [cond, pt] : instance.assignment) rec.points.push_back(pt.to_text());

        groebner::SolveOptions options;
        options.budget = config.budgets;
        options.randomization_seed = rec.derived_seed ^ 0xa5a5a5a5a5a5a5a5ull;
        auto rep = groebner::solve_instance(instance, expected, options);
        rec.num_real = rep.num_real;
        rec.num_complex = rep.num_complex;
        rec.transversal = rep.transversal;
        rec.chart = rep.chart;
        if (!rep.transversal) rec.discarded_reason = "non_transversal";
    } catch (const degeneracy_error& e) {
        rec.discarded_reason = std::string("degenerate: ") + e.what();
    } catch (const budget_error& e) {
        rec.discarded_reason = std::string("budget: ") + e.what();
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return rec;
}

constexpr int kMaxAttempts = 64;

} // namespace

std::vector<InstanceRecord> run_experiment(const ExperimentConfig& config) {
    if (config.output_path.empty()) throw domain_error("run: output_path is required");
    const long long expected = combinat::complex_count(config.problem).get_si();
    const std::string problem_text = config.problem.to_text();

    // resume state from an existing log
    auto existing = read_log(config.output_path);
    for (const auto& r : existing)
        if (r.problem != problem_text)
            throw domain_error("run: log at " + config.output_path +
                               " belongs to a different problem (" + r.problem + ")");
    // (type, index) -> attempts already logged and whether the final
    // (kept) record is present
    std::map<std::pair<std::string, long long>, std::pair<int, bool>> progress;
    for (const auto& r : existing) {
        auto& [attempts, final_done] = progress[{r.osculation_type, r.instance_index}];
        attempts = std::max(attempts, r.attempt + 1);
        if (r.discarded_reason.empty()) final_done = true;
    }

    std::ofstream out(config.output_path, std::ios::app);
    if (!out) throw domain_error("run: cannot open " + config.output_path);

    std::atomic<bool> limit_hit{false};
    std::atomic<bool> failed{false};
    std::string error_text;
    long long written = 0; // touched only inside the ordered region

#ifdef _OPENMP
    const int nthreads = config.threads > 0 ? config.threads : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)nthreads;
#endif

    for (const auto& type : schubert::admissible_types(config.problem)) {
        if (limit_hit.load() || failed.load()) break;
        const std::string type_text = type.to_text(config.problem);
        const long long count = config.instances_per_type;

#ifdef _OPENMP
#pragma omp parallel for ordered schedule(dynamic, 1) num_threads(nthreads)
#endif
        for (long long index = 0; index < count; ++index) {
            std::vector<InstanceRecord> fresh;
            bool skip = limit_hit.load() || failed.load();
            int start_attempt = 0;
            {
                auto it = progress.find({type_text, index});
                if (it != progress.end()) {
                    if (it->second.second) skip = true;
                    start_attempt = it->second.first;
                }
            }
            if (!skip) {
                try {
                    bool done = false;
                    for (int attempt = start_attempt; attempt < kMaxAttempts; ++attempt) {
                        InstanceRecord rec =
                            compute_record(config, type, type_text, index, attempt, expected);
                        fresh.push_back(rec);
                        if (rec.discarded_reason.empty()) {
                            done = true;
                            break;
                        }
                    }
                    if (!done)
                        throw budget_error("run: no transversal instance for type " + type_text +
                                           " index " + std::to_string(index));
                } catch (const std::exception& e) {
                    bool expect = false;
                    if (failed.compare_exchange_strong(expect, true)) error_text = e.what();
                    fresh.clear();
                }
            }
#ifdef _OPENMP
#pragma omp ordered
#endif
            {
                for (const auto& rec : fresh) {
                    if (config.max_new_records >= 0 && written >= config.max_new_records) {
                        limit_hit.store(true);
                        break;
                    }
                    out << to_json_line(rec) << "\n";
                    out.flush();
                    ++written;
                }
            }
        }
    }
    out.close();
    if (failed.load()) throw budget_error("run: " + error_text);
    return read_log(config.output_path);
}

} // namespace osculant::exper
