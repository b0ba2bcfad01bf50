#pragma once

#include "osculant/equations.hpp"
#include "osculant/groebner.hpp"
#include "osculant/unipoly.hpp"

namespace osculant::groebner {

using exactalg::UniPoly;
using schubert::Chart;
using schubert::OsculatingInstance;

struct SolveReport {
    long long num_complex = 0; // degree of the squarefree eliminant
    long long num_real = 0;    // Sturm count on the squarefree eliminant
    UniPoly eliminant;         // squarefree
    bool transversal = false;  // eliminant squarefree of the expected degree
    std::string chart;         // chart descriptor
    // randomization: coefficients of the linear functional added to the
    // last variable; empty when no retry was needed
    std::vector<int> randomization;
    // shape-position data for downstream checks, when available
    std::optional<ShapeCoordinates> shape;
    // the system that was solved (after any randomization)
    PolySystem system;
};

struct SolveOptions {
    GroebnerBudget budget;
    uint64_t randomization_seed = 1;
    int max_retries = 5;
    int coeff_bound = 20; // |c| <= 20 for the linear functional
    bool parallel_minors = false;
};

// Solve a zero-dimensional system with a known expected solution count.
// Retries with a randomized linear functional on the last variable when
// the squarefree eliminant degree falls short of `expected` (shape
// position failure); a persistent shortfall is reported as
// transversal = false rather than an error.
SolveReport solve_system(const PolySystem& system, long long expected,
                         const SolveOptions& options = {});

// An instance ready for the solver: chart, assembled equations after
// the linear presolve, and the data needed to map solutions back to
// chart coordinates.
struct BuiltInstance {
    PolySystem system; // reduced, elimination variable last
    schubert::InstanceSystem isys;
    LinearReduction reduction;
};

BuiltInstance build_system(const OsculatingInstance& instance, bool parallel_minors = false);

// Full pipeline: chart selection, equations, presolve, Groebner, Sturm.
SolveReport solve_instance(const OsculatingInstance& instance, long long expected,
                           const SolveOptions& options = {});

} // namespace osculant::groebner
