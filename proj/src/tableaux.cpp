#include "osculant/tableaux.hpp"

#include <cstdlib>
#include <functional>
#include <map>

namespace osculant::combinat {

namespace {

struct Grid {
    std::vector<std::pair<int, int>> cells;      // reading order
    std::map<std::pair<int, int>, size_t> index; // cell -> position in reading order

    explicit Grid(const SkewShape& shape) : cells(shape.cells()) {
        for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
    }
    bool has(int r, int c) const { return index.count({r, c}) != 0; }
    size_t at(int r, int c) const { return index.at({r, c}); }
};

} // namespace

bool Tableau::is_standard() const {
    Grid g(shape);
    if (entries.size() != g.cells.size()) return false;
    std::vector<bool> seen(entries.size() + 1, false);
    for (int v : entries) {
        if (v < 1 || v > static_cast<int>(entries.size()) || seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = true;
    }
    for (size_t i = 0; i < g.cells.size(); ++i) {
        auto [r, c] = g.cells[i];
        if (g.has(r, c + 1) && entries[g.at(r, c + 1)] <= entries[i]) return false;
        if (g.has(r + 1, c) && entries[g.at(r + 1, c)] <= entries[i]) return false;
    }
    return true;
}

std::vector<Tableau> enumerate_tableaux(const SkewShape& shape, size_t cell_budget) {
    const size_t n = shape.cell_count();
    if (n > cell_budget)
        throw budget_error("tableau enumeration: shape " + shape.to_text() + " has " +
                           std::to_string(n) + " cells, budget is " + std::to_string(cell_budget));

    Grid g(shape);
    std::vector<Tableau> out;
    std::vector<int> filling(n, 0);

    // Place values 1..n one at a time; a cell can take the next value
    // once its left and upper neighbours (inside the shape) are filled.
    // Scanning candidate cells in reading order makes the standard
    // filling the first tableau produced.
    std::function<void(int)> rec = [&](int value) {
        if (value > static_cast<int>(n)) {
            out.push_back(Tableau{shape, filling});
            return;
        }
        for (size_t i = 0; i < n; ++i) {
            if (filling[i] != 0) continue;
            auto [r, c] = g.cells[i];
            if (g.has(r, c - 1) && filling[g.at(r, c - 1)] == 0) continue;
            if (g.has(r - 1, c) && filling[g.at(r - 1, c)] == 0) continue;
            filling[i] = value;
            rec(value + 1);
            filling[i] = 0;
        }
    };
    rec(1);
    return out;
}

int tableau_sign(const Tableau& t) {
    if (!t.is_standard()) throw domain_error("tableau_sign: not a standard tableau");
    // parity of the word as a permutation of 1..N
    std::vector<int> w = t.entries;
    int sign = 1;
    std::vector<bool> seen(w.size(), false);
    for (size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(w[j] - 1);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

long long sign_imbalance(const SkewShape& shape, size_t cell_budget) {
    long long sum = 0;
    for (const auto& t : enumerate_tableaux(shape, cell_budget)) sum += tableau_sign(t);
    return std::llabs(sum);
}

long long count_tableaux(const SkewShape& shape, size_t cell_budget) {
    return static_cast<long long>(enumerate_tableaux(shape, cell_budget).size());
}

} // namespace osculant::combinat
