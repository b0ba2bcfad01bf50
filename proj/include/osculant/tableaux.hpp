#pragma once

#include "osculant/partition.hpp"

namespace osculant::combinat {

// Standard Young tableau on a skew shape: cells hold 1..N, rows and
// columns strictly increasing.
struct Tableau {
    SkewShape shape;
    // entries aligned with shape.cells() (reading order)
    std::vector<int> entries;

    bool is_standard() const;
    // word read in reading order; the standard filling gives 1..N
    const std::vector<int>& word() const { return entries; }
};

inline constexpr size_t kDefaultTableauCellBudget = 12;

// The first element is always the standard filling (numbers in
// reading order).
std::vector<Tableau> enumerate_tableaux(const SkewShape& shape,
                                        size_t cell_budget = kDefaultTableauCellBudget);

// Parity of the permutation taking the standard filling to T.
int tableau_sign(const Tableau& t);

// |sum of signs over all standard tableaux of the shape|
long long sign_imbalance(const SkewShape& shape,
                         size_t cell_budget = kDefaultTableauCellBudget);

long long count_tableaux(const SkewShape& shape,
                         size_t cell_budget = kDefaultTableauCellBudget);

} // namespace osculant::combinat
