#pragma once

#include <map>
#include <vector>

#include "osculant/partition.hpp"
#include "osculant/rational.hpp"

namespace osculant::combinat {

using exactalg::Integer;

// A Schubert problem: conditions with multiplicities on Gr(k,n),
// weights summing to k(n-k).
struct SchubertProblemSpec {
    int k = 0;
    int n = 0;
    // kept sorted by descending weight, then descending lex; this fixed
    // order is also the canonical occurrence order used everywhere else
    std::vector<std::pair<Partition, int>> conditions;

    SchubertProblemSpec() = default;
    SchubertProblemSpec(int k_, int n_, std::vector<std::pair<Partition, int>> conds);

    int total_multiplicity() const;
    // condition of each occurrence, in canonical order
    std::vector<Partition> occurrences() const;
    bool is_hook_family() const;
    bool is_symmetric() const;
    std::string to_text() const;
};

inline constexpr long long kDefaultSchurTermBudget = 1000000;

// Coefficients of the product of Schur classes, truncated to the
// k x (n-k) box, by iterated Littlewood-Richardson expansion.
std::map<Partition, Integer> schur_product_expand(const Partition& mu, const Partition& lambda,
                                                  int k, int n);

// Number of complex solutions: coefficient of the full box in the
// product of the condition classes.
Integer complex_count(const SchubertProblemSpec& problem,
                      long long term_budget = kDefaultSchurTermBudget);

// q-binomial [N over K]_q evaluated at q = -1, by exact expansion of
// the polynomial (Pascal-style recurrence).
Integer gaussian_binomial_at_minus_one(int N, int K);

// Coefficient of x^(n-k-1) y^(k-1) in (x+y)^r (x^2+y^2)^c with
// c = (n-2-r)/2. Requires 0 <= r <= n-2 and r == n-2 mod 2.
Integer nu(int k, int n, int r);

// Distinct values nu(k,n,r) for r in [r_box-1, n-2] with the parity of
// n-2, ascending. r_box must have the parity of n-1.
std::vector<Integer> predicted_real_counts(int k, int n, int r_box);

} // namespace osculant::combinat
