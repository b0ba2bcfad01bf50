#pragma once

#include "osculant/equations.hpp"
#include "osculant/solve.hpp"

namespace osculant::schubert {

struct WronskiOrderReport {
    bool ok = false;
    std::string detail; // first failure when not ok
};

// For every solution of a solved instance at once: substitute the
// chart-variable values (expressed in the eliminant's root theta) into
// the chart, form the Wronskian over Q(i)[theta]/(eliminant), and check
// that it vanishes at each osculation point to order exactly the weight
// of that point's condition. Exactness of each order is a gcd condition
// against the eliminant, so the check covers all roots simultaneously.
WronskiOrderReport verify_wronskian_orders(const Chart& chart,
                                           const std::vector<std::pair<Partition, OsculationPoint>>& points,
                                           const exactalg::UniPoly& eliminant,
                                           const std::vector<exactalg::UniPoly>& chart_values);

// Wrapper taking the solver output: unfolds the shape-position
// coordinates, the randomizing functional, and the linear presolve
// back into full chart coordinates.
WronskiOrderReport verify_wronskian_orders(const groebner::BuiltInstance& built,
                                           const groebner::SolveReport& report);

} // namespace osculant::schubert
