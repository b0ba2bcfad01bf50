#pragma once

#include "osculant/partition.hpp"
#include "osculant/polymatrix.hpp"

namespace osculant::schubert {

using combinat::Partition;
using exactalg::GaussPolyMatrix;

enum class ChartKind { full, at_infinity, at_zero_and_infinity };

// Local coordinates for the Grassmannian, for a Schubert cell anchored
// at infinity, or for the intersection of cells anchored at infinity
// and at zero. The k x n pattern marks each entry as a pivot 1, a
// forced zero, or a fresh variable; the variable order (row-major over
// the pattern, then possibly rotated) is part of the chart.
class Chart {
  public:
    struct Cell {
        enum class Kind { one, zero, variable } kind = Kind::zero;
        int var = -1; // index into variable list when kind == variable
    };

    static Chart full(int k, int n);
    static Chart at_infinity(int k, int n, const Partition& lambda);
    static Chart at_zero_and_infinity(int k, int n, const Partition& mu, const Partition& lambda);

    ChartKind kind() const { return kind_; }
    int k() const { return k_; }
    int n() const { return n_; }
    const Partition& lambda() const { return lambda_; }
    const Partition& mu() const { return mu_; }
    size_t var_count() const { return slot_names_.size(); }
    // names in the declared (lex) order
    std::vector<std::string> var_names() const;
    const Cell& cell(int row, int col) const {
        return pattern_[static_cast<size_t>(row * n_ + col)];
    }

    // Move variable `var` to the end of the declared order.
    void rotate_var_last(int var);

    GaussPolyMatrix matrix() const;

    // row of 1/0/x grids, for docs and tests
    std::string to_ascii() const;
    std::string descriptor() const;

  private:
    Chart(ChartKind kind, int k, int n, Partition lambda, Partition mu);
    void assign_vars();

    ChartKind kind_;
    int k_, n_;
    Partition lambda_, mu_;
    std::vector<Cell> pattern_;
    std::vector<std::string> slot_names_; // by creation (row-major) slot
    std::vector<int> var_order_;          // declared order, as a list of slots
};

} // namespace osculant::schubert
