#pragma once

#include <optional>

#include "osculant/multipoly.hpp"

namespace osculant::groebner {

using exactalg::MultiPoly;

// Zero-dimensional target system over Q. The variable list fixes the
// lex order; the last variable is the elimination target.
struct PolySystem {
    std::vector<std::string> variables;
    std::vector<MultiPoly> generators;
};

struct GroebnerBudget {
    long long max_pairs = 200000;
    long long max_basis = 4000;
    long long max_terms = 2000000; // per-polynomial term cap
};

// Reduced lex Groebner basis (monic, tails reduced). Deterministic:
// pair selection by smallest lcm degree, then lex.
std::vector<MultiPoly> buchberger_lex(const PolySystem& system,
                                      const GroebnerBudget& budget = {});

// Full normal form of p modulo basis.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

// The unique basis element univariate in the last variable.
exactalg::UniPoly eliminant(const std::vector<MultiPoly>& basis, size_t last_var);

// Coordinates of all solutions expressed through the eliminant's root:
// basis elements x_j - q_j(theta) with theta the last variable.
// Present only when the reduced basis is in shape position.
struct ShapeCoordinates {
    exactalg::UniPoly eliminant;              // in theta
    std::vector<exactalg::UniPoly> coords;    // coords[j] = q_j, j < last_var
};

std::optional<ShapeCoordinates> shape_coordinates(const std::vector<MultiPoly>& basis,
                                                  size_t nvars);

// Exact presolve: a variable occurring linearly with a nonzero constant
// coefficient in some generator is solved for and substituted away. The
// quotient ring is unchanged, so solution counts and reality are
// preserved; the steps allow recovering the eliminated coordinates.
struct LinearReduction {
    size_t full_nvars = 0;
    std::vector<size_t> live; // reduced position -> full variable index
    struct Step {
        size_t var;      // full variable index
        MultiPoly expr;  // over the full list, free of `var`
    };
    std::vector<Step> steps; // in elimination order
};

std::pair<PolySystem, LinearReduction> eliminate_linear(const PolySystem& system);

} // namespace osculant::groebner
