#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "osculant/grammar.hpp"
#include "osculant/hookfam.hpp"
#include "osculant/runner.hpp"
#include "osculant/structures.hpp"
#include "osculant/tableaux.hpp"
#include "osculant/wronski_check.hpp"

using namespace osculant;
using combinat::Partition;
using exactalg::Rational;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;
constexpr int kExitViolation = 3;

int cmd_predict(const std::string& problem_text) {
    auto problem = exper::parse_problem(problem_text);
    auto d = combinat::complex_count(problem);
    std::cout << "problem: " << problem.to_text() << "\n";
    std::cout << "complex solutions: " << d.get_str() << "\n";

    // topological lower bound when at most two occurrences are not
    // hypersurfaces
    std::vector<Partition> heavy;
    for (const auto& [p, m] : problem.conditions)
        if (!(p == Partition{1}))
            for (int i = 0; i < m; ++i) heavy.push_back(p);
    if (heavy.size() <= 2) {
        Partition lambda = heavy.size() >= 1 ? heavy[0] : Partition{};
        Partition mu = heavy.size() >= 2 ? heavy[1] : Partition{};
        Partition lc = combinat::complement(lambda, problem.k, problem.n);
        if (lc.contains(mu)) {
            try {
                long long sigma = combinat::sign_imbalance(combinat::SkewShape(lc, mu), 16);
                std::cout << "sign-imbalance lower bound (" << lc.to_text()
                          << (mu.empty() ? "" : "/" + mu.to_text()) << "): " << sigma << "\n";
            } catch (const budget_error&) {
                std::cout << "sign-imbalance lower bound: shape too large to enumerate\n";
            }
        }
    }

    if (problem.is_hook_family()) {
        const bool merged = combinat::hook_complement(problem.k, problem.n) == Partition{1};
        std::cout << "hook family: predicted real counts per osculation type\n";
        for (int r_box = problem.n - 1; r_box >= 0; r_box -= 2) {
            auto set = combinat::predicted_real_counts(problem.k, problem.n, r_box);
            std::cout << "  r = " << (merged ? r_box + 1 : r_box) << " -> {";
            for (size_t i = 0; i < set.size(); ++i)
                std::cout << (i ? ", " : "") << set[i].get_str();
            std::cout << "}\n";
        }
    }
    return kExitOk;
}

int cmd_solve(const std::string& problem_text, const std::string& points_text, bool dump) {
    auto problem = exper::parse_problem(problem_text);
    std::vector<schubert::OsculationPoint> points;
    size_t pos = 0;
    while (pos <= points_text.size()) {
        size_t comma = points_text.find(',', pos);
        std::string piece = points_text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!piece.empty()) points.push_back(schubert::OsculationPoint::from_text(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    schubert::OsculatingInstance inst(problem, points);
    long long expected = combinat::complex_count(problem).get_si();
    groebner::SolveOptions options;
    options.parallel_minors = true;
    auto rep = groebner::solve_instance(inst, expected, options);
    std::cout << "chart: " << rep.chart << "\n";
    std::cout << "num_complex: " << rep.num_complex << "\n";
    std::cout << "num_real: " << rep.num_real << "\n";
    std::cout << "transversal: " << (rep.transversal ? "true" : "false") << "\n";
    if (dump) std::cout << "eliminant: " << exactalg::to_text(rep.eliminant) << "\n";
    if (!rep.randomization.empty()) {
        std::cout << "randomization:";
        for (int c : rep.randomization) std::cout << " " << c;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& log_path) {
    auto records = exper::read_log(log_path);
    if (records.empty()) throw usage_error("check: log is empty or missing: " + log_path);
    auto table = exper::tabulate(records);
    auto problem = exper::parse_problem(table.problem);
    auto report = exper::check_structures(table, problem);
    std::cout << report.to_text();
    return report.all_pass() ? kExitOk : kExitViolation;
}

int cmd_selftest() {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        exper::SeededRng rng(1);
        bool ok = true;
        for (int i = 0; i < 50; ++i) {
            long a = static_cast<long>(rng.range(-100000, 100000));
            long b = static_cast<long>(rng.range(1, 100000));
            long c = static_cast<long>(rng.range(-100000, 100000));
            long d = static_cast<long>(rng.range(1, 100000));
            Rational x(a, b), y(c, d);
            x.canonicalize();
            y.canonicalize();
            ok = ok && ((x + y) * Rational(b) * Rational(d) == Rational(a) * Rational(d) + Rational(c) * Rational(b));
        }
        check("rational arithmetic identity", ok);
    }
    {
        auto f = exactalg::unipoly_from_roots({Rational(1), Rational(-2), Rational(3)});
        check("sturm exact root count",
              exactalg::sturm_count_real_roots(exactalg::squarefree_part(f)) == 3);
    }
    {
        combinat::SchubertProblemSpec p(3, 6, {{Partition({2, 1}), 2}, {Partition({1}), 3}});
        std::vector<std::pair<Partition, int>> dual;
        for (const auto& [part, m] : p.conditions) dual.emplace_back(part.transpose(), m);
        check("complex count duality",
              combinat::complex_count(p) ==
                  combinat::complex_count(combinat::SchubertProblemSpec(3, 6, dual)));
    }
    {
        bool ok = true;
        for (int n = 4; n <= 9; ++n)
            for (int k = 2; k + 2 <= n; ++k)
                ok = ok && (exactalg::to_integer(combinat::sign_imbalance(
                                combinat::SkewShape(combinat::full_hook(k, n)))) ==
                            combinat::gaussian_binomial_at_minus_one(n - 2, k - 1));
        check("hook sign-imbalance identity", ok);
    }
    {
        exactalg::GaussianRational t(Rational(2), Rational(3));
        auto a = schubert::flag_matrix(schubert::OsculationPoint::finite(t), 2, 5);
        auto b = schubert::flag_matrix(schubert::OsculationPoint::finite(t.conj()), 2, 5);
        bool ok = true;
        for (size_t i = 0; i < a.rows(); ++i)
            for (size_t j = 0; j < a.cols(); ++j)
                ok = ok && (a.at(i, j).constant_value().conj() == b.at(i, j).constant_value());
        check("flag conjugation equivariance", ok);
    }
    {
        bool ok = true;
        for (int m = 2; m <= 4; ++m) {
            exactalg::UniPoly f = exactalg::UniPoly::constant(Rational(1));
            for (int j = 0; j < m; ++j)
                f *= exactalg::UniPoly({Rational(static_cast<long>((j + 1) * (j + 1))), Rational(0), Rational(1)});
            auto census = hookfam::mod4_factorization_census(f, m);
            ok = ok && census.nonreal_count % 4 == 0 &&
                 census.self_conjugate_count == exactalg::to_integer(1ll << m);
        }
        check("factorization census mod 4", ok);
    }
    {
        check("determinant identity (3,6)", hookfam::verify_det_identity(3, 6));
        check("determinant identity negative control", !hookfam::verify_det_identity(3, 6, true));
    }
    return failures == 0 ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and experiment runner for osculating Schubert problems"};
    app.require_subcommand(1);

    std::string problem_text, points_text, log_path, config_path, format = "text";
    std::string out_path;
    long long per_type = 50;
    uint64_t seed = 1;
    int range = 12, threads = 0, kk = 0, nn = 0;
    bool dump = false, perturb = false;

    auto* predict = app.add_subcommand("predict", "combinatorial predictions for a problem");
    predict->add_option("problem", problem_text, "problem, e.g. \"GR(3,6): 2.1^2, 1^3\"")
        ->required();

    auto* solve = app.add_subcommand("solve", "solve one instance from explicit points");
    solve->add_option("--problem", problem_text)->required();
    solve->add_option("--points", points_text,
                      "comma-separated points in occurrence order, e.g. \"inf,0,1,1/2\"")
        ->required();
    solve->add_flag("--dump", dump, "print the eliminant");

    auto* run = app.add_subcommand("run", "run a seeded experiment");
    run->add_option("--config", config_path, "JSON config file");
    run->add_option("--problem", problem_text);
    run->add_option("--out", out_path, "record log path");
    run->add_option("--per-type", per_type);
    run->add_option("--seed", seed);
    run->add_option("--range", range);
    run->add_option("--threads", threads);

    auto* table = app.add_subcommand("table", "render a record log as a frequency table");
    table->add_option("--log", log_path)->required();
    table->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* check = app.add_subcommand("check", "check structural laws against a record log");
    check->add_option("--log", log_path)->required();

    auto* verify = app.add_subcommand("verify-identity", "verify the determinant identity");
    verify->add_option("--k", kk)->required();
    verify->add_option("--n", nn)->required();
    verify->add_flag("--perturb", perturb, "negative control: perturb one constant");

    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");
    (void)selftest;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (predict->parsed()) return cmd_predict(problem_text);
        if (solve->parsed()) return cmd_solve(problem_text, points_text, dump);
        if (run->parsed()) {
            exper::ExperimentConfig config;
            if (!config_path.empty()) {
                config = exper::ExperimentConfig::from_json_file(config_path);
            } else {
                if (problem_text.empty() || out_path.empty())
                    throw usage_error("run: need --config or both --problem and --out");
                config.problem = exper::parse_problem(problem_text);
                config.instances_per_type = per_type;
                config.master_seed = seed;
                config.point_range = range;
                config.output_path = out_path;
                config.threads = threads;
            }
            auto records = exper::run_experiment(config);
            long long kept = 0;
            for (const auto& r : records)
                if (r.kept()) ++kept;
            std::cout << "log: " << config.output_path << " (" << records.size() << " records, "
                      << kept << " kept)\n";
            return kExitOk;
        }
        if (table->parsed()) {
            auto records = exper::read_log(log_path);
            if (records.empty()) throw usage_error("table: log is empty or missing: " + log_path);
            auto fmt = format == "csv" ? exper::TableFormat::csv
                       : format == "json" ? exper::TableFormat::json
                                          : exper::TableFormat::text;
            std::cout << exper::render(exper::tabulate(records), fmt);
            return kExitOk;
        }
        if (check->parsed()) return cmd_check(log_path);
        if (verify->parsed()) {
            bool ok = hookfam::verify_det_identity(kk, nn, perturb);
            std::cout << "identity(" << kk << "," << nn << (perturb ? ", perturbed" : "")
                      << "): " << (ok ? "holds" : "fails") << "\n";
            if (perturb) return ok ? kExitViolation : kExitOk;
            return ok ? kExitOk : kExitViolation;
        }
        if (selftest->parsed()) return cmd_selftest();
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const degeneracy_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
