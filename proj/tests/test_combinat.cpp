#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "osculant/rng.hpp"
#include "osculant/schur.hpp"
#include "osculant/tableaux.hpp"

using namespace osculant;
using namespace osculant::combinat;
using exactalg::Integer;
using exactalg::Rational;

namespace {

// Independent count of standard tableaux of a skew shape: the
// determinant formula N! det( 1 / (outer_i - inner_j - i + j)! ).
long long aitken_count(const SkewShape& shape) {
    const int rows = static_cast<int>(shape.outer.length());
    if (rows == 0) return 1;
    std::vector<std::vector<Rational>> m(static_cast<size_t>(rows),
                                         std::vector<Rational>(static_cast<size_t>(rows)));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= rows; ++j) {
            int e = shape.outer.part(static_cast<size_t>(i - 1)) -
                    shape.inner.part(static_cast<size_t>(j - 1)) - i + j;
            m[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                (e < 0) ? Rational(0)
                        : Rational(1) / Rational(exactalg::factorial(static_cast<unsigned long>(e)));
        }
    // cofactor determinant
    std::function<Rational(std::vector<int>, int)> det = [&](std::vector<int> cols,
                                                             int row) -> Rational {
        if (cols.empty()) return Rational(1);
        Rational acc(0);
        for (size_t idx = 0; idx < cols.size(); ++idx) {
            std::vector<int> rest;
            for (size_t x = 0; x < cols.size(); ++x)
                if (x != idx) rest.push_back(cols[x]);
            Rational term = m[static_cast<size_t>(row)][static_cast<size_t>(cols[idx])] *
                            det(rest, row + 1);
            if (idx % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    };
    std::vector<int> cols(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) cols[static_cast<size_t>(i)] = i;
    Rational d = det(cols, 0) * Rational(exactalg::factorial(shape.cell_count()));
    CHECK(d.get_den() == 1);
    return static_cast<long long>(d.get_num().get_si());
}

int inversion_sign(const std::vector<int>& word) {
    int inv = 0;
    for (size_t i = 0; i < word.size(); ++i)
        for (size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

} // namespace

TEST_CASE("partition basics") {
    Partition p({3, 1, 1, 0, 0});
    CHECK(p.length() == 3);
    CHECK(p.weight() == 5);
    CHECK(p == Partition({3, 1, 1}));
    CHECK(p.to_text() == "3.1.1");
    CHECK(Partition::from_text("3.1.1") == p);
    CHECK(Partition::from_text("0") == Partition{});
    CHECK_THROWS_AS(Partition({1, 2}), domain_error);
    CHECK_THROWS_AS(Partition::from_text("3..1"), domain_error);
}

TEST_CASE("complement") {
    CHECK(complement(Partition({3}), 3, 7) == Partition({4, 4, 1}));
    CHECK(complement(Partition{}, 3, 7) == Partition({4, 4, 4}));
    CHECK(complement(Partition({2, 2}), 3, 6) == Partition({3, 1, 1}));
    CHECK_THROWS_AS(complement(Partition({5}), 2, 6), domain_error);
}

TEST_CASE("hook complement and full hook") {
    CHECK(hook_complement(2, 6) == Partition({3}));
    CHECK(hook_complement(4, 8) == Partition({3, 3, 3}));
    CHECK(hook_complement(3, 8) == Partition({4, 4}));
    CHECK_THROWS_AS(hook_complement(1, 6), domain_error);
    CHECK_THROWS_AS(hook_complement(5, 6), domain_error);
    for (int n = 4; n <= 10; ++n)
        for (int k = 2; k + 2 <= n; ++k)
            CHECK(complement(hook_complement(k, n), k, n) == full_hook(k, n));
}

TEST_CASE("symmetry and diagonal length") {
    CHECK(Partition({2, 1}).is_symmetric());
    CHECK(Partition({2, 1}).diag_length() == 1);
    CHECK_FALSE(Partition({4, 3, 1}).is_symmetric());
    CHECK(Partition({3, 3, 3}).diag_length() == 3);
    CHECK(Partition({3, 3, 2}).is_symmetric());
    CHECK(Partition({1}).is_symmetric());
}

TEST_CASE("tableau enumeration: hooks give binomials") {
    for (int n = 4; n <= 9; ++n)
        for (int k = 2; k + 2 <= n; ++k) {
            long long count = count_tableaux(SkewShape(full_hook(k, n)));
            CHECK(count == exactalg::binomial(static_cast<unsigned long>(n - 2),
                                              static_cast<unsigned long>(k - 1))
                               .get_si());
        }
    CHECK(count_tableaux(SkewShape(Partition({1}))) == 1);
}

TEST_CASE("tableau enumeration: (4,4,1)/(1) matches the determinant oracle") {
    SkewShape shape(Partition({4, 4, 1}), Partition({1}));
    auto all = enumerate_tableaux(shape);
    CHECK(static_cast<long long>(all.size()) == aitken_count(shape));

    // the first tableau is the standard (reading-order) filling
    CHECK(all.front().entries == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8});

    // four specific fillings are present
    auto has = [&](std::vector<int> e) {
        return std::any_of(all.begin(), all.end(),
                           [&](const Tableau& t) { return t.entries == e; });
    };
    CHECK(has({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(has({3, 5, 7, 1, 4, 6, 8, 2}));
    CHECK(has({2, 3, 5, 1, 4, 6, 7, 8}));
    CHECK(has({1, 3, 6, 2, 4, 5, 8, 7}));
    for (const auto& t : all) CHECK(t.is_standard());
}

TEST_CASE("tableau enumeration respects the cell budget") {
    CHECK_THROWS_AS(enumerate_tableaux(SkewShape(Partition({7, 7}))), budget_error);
}

TEST_CASE("tableau sign matches inversion parity; transposition flips it") {
    SkewShape shape(Partition({4, 4, 1}), Partition({1}));
    auto all = enumerate_tableaux(shape);
    for (const auto& t : all) CHECK(tableau_sign(t) == inversion_sign(t.entries));

    Tableau std_fill = all.front();
    CHECK(tableau_sign(std_fill) == 1);
    // swap entries 3 and 4 (cells at end of row 1, start of row 2)
    Tableau swapped = std_fill;
    std::swap(swapped.entries[2], swapped.entries[3]);
    REQUIRE(swapped.is_standard());
    CHECK(tableau_sign(swapped) == -1);
}

TEST_CASE("sign imbalance") {
    CHECK(sign_imbalance(SkewShape(Partition({3, 1, 1}))) == 2);
    CHECK(sign_imbalance(SkewShape(Partition({2, 2}))) == 0);
    // brute-force sum as the oracle
    SkewShape shape(Partition({4, 4, 1}), Partition({1}));
    long long sum = 0;
    for (const auto& t : enumerate_tableaux(shape)) sum += tableau_sign(t);
    CHECK(sign_imbalance(shape) == std::abs(sum));
    long long count = count_tableaux(shape);
    CHECK(sign_imbalance(shape) <= count);
}

TEST_CASE("gaussian binomial at -1: subset inversion oracle") {
    // [N K]_q = sum over K-subsets of q^(inversions of the 0/1 word)
    auto oracle = [](int N, int K) {
        long long total = 0;
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            if (__builtin_popcount(mask) != K) continue;
            // ones at chosen positions; inversions = pairs (1 before 0)
            int inv = 0, zeros_right = 0;
            for (int pos = N - 1; pos >= 0; --pos) {
                if (mask & (1u << pos)) inv += zeros_right;
                else ++zeros_right;
            }
            total += (inv % 2 == 0) ? 1 : -1;
        }
        return std::llabs(total);
    };
    for (int N = 0; N <= 10; ++N)
        for (int K = 0; K <= N; ++K)
            CHECK(gaussian_binomial_at_minus_one(N, K) == exactalg::to_integer(oracle(N, K)));
    CHECK(gaussian_binomial_at_minus_one(4, 2) == 2);
    CHECK(gaussian_binomial_at_minus_one(3, 1) == 1);
    CHECK(gaussian_binomial_at_minus_one(5, 0) == 1);
}

TEST_CASE("sign imbalance of full hooks equals the q-binomial at -1") {
    for (int n = 4; n <= 10; ++n)
        for (int k = 2; k + 2 <= n; ++k) {
            long long sigma = sign_imbalance(SkewShape(full_hook(k, n)));
            CHECK(exactalg::to_integer(sigma) == gaussian_binomial_at_minus_one(n - 2, k - 1));
        }
}

TEST_CASE("complex counts from the literature") {
    auto count = [](int k, int n, std::vector<std::pair<Partition, int>> conds) {
        return complex_count(SchubertProblemSpec(k, n, std::move(conds)));
    };
    CHECK(count(2, 4, {{Partition({1}), 4}}) == 2);
    CHECK(count(3, 6, {{Partition({2, 1}), 2}, {Partition({1}), 3}}) == 6);
    CHECK(count(4, 8, {{Partition({3, 3, 3}), 1}, {Partition({1}), 7}}) == 20);
    for (int n = 4; n <= 10; ++n)
        for (int k = 2; k + 2 <= n; ++k) {
            Integer expect =
                exactalg::binomial(static_cast<unsigned long>(n - 2), static_cast<unsigned long>(k - 1));
            CHECK(count(k, n, {{hook_complement(k, n), 1}, {Partition({1}), n - 1}}) == expect);
        }
}

TEST_CASE("complex count invariances: reorder and duality") {
    exper::SeededRng rng(3);
    std::vector<SchubertProblemSpec> problems = {
        SchubertProblemSpec(3, 6, {{Partition({2, 1}), 2}, {Partition({1}), 3}}),
        SchubertProblemSpec(2, 5, {{Partition({2}), 1}, {Partition({1}), 4}}),
        SchubertProblemSpec(3, 6, {{Partition({2, 2}), 1}, {Partition({1}), 5}}),
    };
    for (const auto& p : problems) {
        // reorder: pass the conditions in reversed order (the spec type
        // normalizes order internally, so build with shuffled input)
        std::vector<std::pair<Partition, int>> rev(p.conditions.rbegin(), p.conditions.rend());
        CHECK(complex_count(p) == complex_count(SchubertProblemSpec(p.k, p.n, rev)));

        // duality: transpose all conditions in Gr(n-k, n)
        std::vector<std::pair<Partition, int>> dual;
        for (const auto& [part, m] : p.conditions) dual.emplace_back(part.transpose(), m);
        CHECK(complex_count(p) == complex_count(SchubertProblemSpec(p.n - p.k, p.n, dual)));
    }
}

TEST_CASE("nu values") {
    // closed-form oracle: sum_i C(c,i) C(r, target-2i)
    auto oracle = [](int k, int n, int r) {
        int c = (n - 2 - r) / 2;
        int target = n - k - 1;
        Integer total = 0;
        for (int i = 0; 2 * i <= target; ++i) {
            if (i > c) break;
            total += exactalg::binomial(static_cast<unsigned long>(c), static_cast<unsigned long>(i)) *
                     exactalg::binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(target - 2 * i));
        }
        return total;
    };
    for (int n = 4; n <= 13; ++n)
        for (int k = 1; k < n; ++k)
            for (int r = (n - 2) % 2; r <= n - 2; r += 2)
                CHECK(nu(k, n, r) == oracle(k, n, r));

    std::vector<long long> expected513 = {10, 18, 38, 78, 162, 330};
    int idx = 0;
    for (int r = 1; r <= 11; r += 2) CHECK(nu(5, 13, r).get_si() == expected513[idx++]);
    CHECK(nu(4, 8, 0) == 0);
    CHECK(nu(4, 8, 2) == 4);
    CHECK(nu(4, 8, 4) == 8);
    for (int n = 4; n <= 10; ++n)
        for (int k = 2; k + 2 <= n; ++k)
            CHECK(nu(k, n, n - 2) == exactalg::binomial(static_cast<unsigned long>(n - 2),
                                                        static_cast<unsigned long>(k - 1)));
    CHECK_THROWS_AS(nu(2, 6, 1), domain_error); // parity violation
}

TEST_CASE("nu symmetry and monotonicity") {
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k < n; ++k)
            for (int r = (n - 2) % 2; r <= n - 2; r += 2) {
                CHECK(nu(k, n, r) == nu(n - k, n, r));
                if (r + 2 <= n - 2) CHECK(nu(k, n, r) <= nu(k, n, r + 2));
            }
}

TEST_CASE("predicted real counts") {
    auto as_ll = [](const std::vector<Integer>& v) {
        std::vector<long long> out;
        for (const auto& x : v) out.push_back(x.get_si());
        return out;
    };
    CHECK(as_ll(predicted_real_counts(4, 8, 1)) == std::vector<long long>{0, 4, 8, 20});
    CHECK(as_ll(predicted_real_counts(2, 8, 7)) == std::vector<long long>{6});
    CHECK(as_ll(predicted_real_counts(2, 8, 1)) == std::vector<long long>{0, 2, 4, 6});
    CHECK_THROWS_AS(predicted_real_counts(2, 8, 2), domain_error);
    // minimum element is nu at the window's lower end
    CHECK(predicted_real_counts(3, 7, 4).front() == nu(3, 7, 3));
    CHECK(predicted_real_counts(2, 5, 0) == predicted_real_counts(2, 5, 2));
}

TEST_CASE("problem text and canonical order") {
    SchubertProblemSpec p(4, 8, {{Partition({1}), 7}, {Partition({3, 3, 3}), 1}});
    CHECK(p.to_text() == "GR(4,8): 3.3.3, 1^7");
    CHECK(p.occurrences().size() == 8);
    CHECK(p.occurrences()[0] == Partition({3, 3, 3}));
    CHECK(p.is_hook_family());
    CHECK(p.is_symmetric());
    SchubertProblemSpec q(2, 4, {{Partition({1}), 4}});
    CHECK(q.is_hook_family()); // the Gr(2,4) member merges into 1^4
    CHECK_THROWS_AS(SchubertProblemSpec(2, 4, {{Partition({1}), 3}}), domain_error);
    CHECK_THROWS_AS(SchubertProblemSpec(2, 4, {{Partition({3}), 1}, {Partition({1}), 1}}),
                    domain_error);
}
