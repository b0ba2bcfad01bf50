#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "osculant/grammar.hpp"
#include "osculant/runner.hpp"
#include "osculant/structures.hpp"
#include "osculant/tables.hpp"

using namespace osculant;
using namespace osculant::exper;
using combinat::Partition;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("osculant_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

ExperimentConfig small_config(const std::string& out) {
    ExperimentConfig c;
    c.problem = parse_problem("GR(2,4): 1^4");
    c.instances_per_type = 6;
    c.master_seed = 424242;
    c.point_range = 10;
    c.output_path = out;
    c.threads = 2;
    return c;
}

} // namespace

TEST_CASE("problem grammar") {
    auto p = parse_problem("GR(3,6): 2.1^2, 1^3");
    CHECK(p.k == 3);
    CHECK(p.n == 6);
    CHECK(p.to_text() == "GR(3,6): 2.1^2, 1^3");
    auto q = parse_problem("GR(4,8): 3.3.3, 1^7");
    CHECK(q.conditions[0].first == Partition({3, 3, 3}));
    CHECK_THROWS_AS(parse_problem("GR(3,6) 1^9"), usage_error);
    CHECK_THROWS_AS(parse_problem("GR(3,6): 1^8"), usage_error);
    CHECK_THROWS_AS(parse_problem("3,6: 1^9"), usage_error);
    auto s = parse_skew("4.4.1/1");
    CHECK(s.outer == Partition({4, 4, 1}));
    CHECK(s.inner == Partition({1}));
}

TEST_CASE("record round-trip") {
    InstanceRecord r;
    r.problem = "GR(2,4): 1^4";
    r.k = 2;
    r.n = 4;
    r.instance_index = 3;
    r.attempt = 1;
    r.derived_seed = 12345678901234567ull;
    r.osculation_type = "1:2";
    r.points = {"inf", "0", "1/2+3/4*i", "1/2-3/4*i"};
    r.num_real = 2;
    r.num_complex = 2;
    r.transversal = true;
    r.elapsed_ms = 17;
    r.chart = "inf+0[1@inf,1@0,vars=2]";
    auto line = to_json_line(r);
    auto back = record_from_json_line(line);
    CHECK(back.problem == r.problem);
    CHECK(back.points == r.points);
    CHECK(back.derived_seed == r.derived_seed);
    CHECK(back.kept());
    CHECK(to_json_line(back) == line);
}

TEST_CASE("seed derivation is stable and order-free") {
    uint64_t a = derive_seed(1, "1:4", 0, 0);
    uint64_t b = derive_seed(1, "1:4", 1, 0);
    uint64_t c = derive_seed(1, "1:2", 0, 0);
    uint64_t d = derive_seed(2, "1:4", 0, 0);
    CHECK(a != b);
    CHECK(a != c);
    CHECK(a != d);
    CHECK(a == derive_seed(1, "1:4", 0, 0));
}

TEST_CASE("runner: deterministic, resumable, thread-count independent") {
    TempDir dir;

    auto c1 = small_config(dir.file("a.jsonl"));
    auto records1 = run_experiment(c1);
    CHECK(records1.size() >= 18); // 3 types x 6, plus any discards

    // identical master seed, fresh log: byte-identical canonical logs
    auto c2 = small_config(dir.file("b.jsonl"));
    run_experiment(c2);
    CHECK(canonical_log(c1.output_path) == canonical_log(c2.output_path));

    // a serial run matches the threaded one
    auto c3 = small_config(dir.file("c.jsonl"));
    c3.threads = 1;
    run_experiment(c3);
    CHECK(canonical_log(c1.output_path) == canonical_log(c3.output_path));

    // kill-and-resume: stop after 5 records, then resume to completion
    auto c4 = small_config(dir.file("d.jsonl"));
    c4.max_new_records = 5;
    run_experiment(c4);
    auto partial = read_log(c4.output_path);
    CHECK(partial.size() == 5);
    c4.max_new_records = -1;
    run_experiment(c4);
    CHECK(canonical_log(c1.output_path) == canonical_log(c4.output_path));

    // rerunning a finished log appends nothing
    auto before = canonical_log(c1.output_path);
    run_experiment(c1);
    CHECK(canonical_log(c1.output_path) == before);

    // different seed, different stream
    auto c5 = small_config(dir.file("e.jsonl"));
    c5.master_seed = 7;
    run_experiment(c5);
    CHECK(canonical_log(c5.output_path) != canonical_log(c1.output_path));

    // a log from another problem is rejected
    auto c6 = small_config(dir.file("a.jsonl"));
    c6.problem = parse_problem("GR(2,5): 1^6");
    CHECK_THROWS_AS(run_experiment(c6), domain_error);
}

TEST_CASE("runner: torn trailing line is tolerated on resume") {
    TempDir dir;
    auto c = small_config(dir.file("t.jsonl"));
    run_experiment(c);
    auto full = canonical_log(c.output_path);
    // append garbage half-line, as if the process died mid-write
    {
        std::ofstream out(c.output_path, std::ios::app);
        out << "{\"problem\": \"GR(2,4): 1^4\", \"k\": 2, \"n\"";
    }
    run_experiment(c);
    // the canonical view is unchanged (torn line ignored, nothing new)
    CHECK(canonical_log(c.output_path) == full);
}

TEST_CASE("records satisfy the invariants") {
    TempDir dir;
    auto c = small_config(dir.file("inv.jsonl"));
    auto records = run_experiment(c);
    int kept = 0;
    for (const auto& r : records) {
        if (!r.kept()) continue;
        ++kept;
        CHECK(r.num_real <= r.num_complex);
        CHECK((r.num_real - r.num_complex) % 2 == 0);
        CHECK(r.num_complex == 2);
    }
    CHECK(kept == 18);
}

TEST_CASE("tabulate and render") {
    TempDir dir;
    auto c = small_config(dir.file("tab.jsonl"));
    auto records = run_experiment(c);
    auto table = tabulate(records);
    CHECK(table.problem == "GR(2,4): 1^4");
    CHECK(table.num_complex == 2);
    REQUIRE(table.rows.size() == 3);
    // rows descending: r=4 first
    CHECK(table.rows[0].type_text == "1:4");
    CHECK(table.rows[1].type_text == "1:2");
    CHECK(table.rows[2].type_text == "1:0");
    // all-real row sits at 2; the r=0 row as well
    CHECK(table.rows[0].cells.at(2) == 6);
    CHECK(table.rows[2].cells.at(2) == 6);
    for (const auto& row : table.rows) CHECK(row.total == 6);

    auto text = render(table, TableFormat::text);
    CHECK(text.find("1:4") != std::string::npos);
    auto csv = render(table, TableFormat::csv);
    CHECK(csv.find("type,0,2,total") == 0);
    auto json = render(table, TableFormat::json);
    auto parsed = nlohmann::json::parse(json);
    CHECK(parsed.at("rows").size() == 3);
    // csv and json agree cell by cell
    for (size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = parsed.at("rows").at(i);
        for (const auto& [count, freq] : table.rows[i].cells) {
            long long cell = row.at("cells").at(std::to_string(count)).template get<long long>();
            CHECK(cell == freq);
        }
    }

    // empty record set gives an empty table
    auto empty = tabulate({});
    CHECK(empty.rows.empty());

    // mixed problems rejected
    auto other = records;
    other[0].problem = "GR(2,5): 1^6";
    CHECK_THROWS_AS(tabulate(other), domain_error);
}

TEST_CASE("structure checks on the small experiment") {
    TempDir dir;
    auto c = small_config(dir.file("chk.jsonl"));
    c.instances_per_type = 10;
    auto records = run_experiment(c);
    auto table = tabulate(records);
    auto report = check_structures(table, c.problem);
    INFO(report.to_text());
    CHECK(report.all_pass());
    // the laws that must be applicable here
    bool saw_parity = false, saw_mtv = false, saw_hook = false, saw_lower = false;
    for (const auto& l : report.laws) {
        if (l.law.find("parity") != std::string::npos) saw_parity = l.applicable;
        if (l.law.find("all-real") != std::string::npos) saw_mtv = l.applicable;
        if (l.law.find("hook family") != std::string::npos) saw_hook = l.applicable;
        if (l.law.find("lower bound") != std::string::npos) saw_lower = l.applicable;
    }
    CHECK(saw_parity);
    CHECK(saw_mtv);
    CHECK(saw_hook); // 1^4 in Gr(2,4) is the smallest family member
    CHECK(saw_lower);
}

TEST_CASE("structure checks flag violations") {
    TempDir dir;
    auto c = small_config(dir.file("bad.jsonl"));
    auto records = run_experiment(c);
    // forge an impossible record: odd real count
    for (auto& r : records)
        if (r.kept()) {
            r.num_real = 1;
            break;
        }
    auto report = check_structures(tabulate(records), c.problem);
    CHECK_FALSE(report.all_pass());
}
