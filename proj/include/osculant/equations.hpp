#pragma once

#include "osculant/chart.hpp"
#include "osculant/flags.hpp"
#include "osculant/problem.hpp"

namespace osculant::schubert {

using exactalg::MultiPoly;

// Rank equations for membership in X_nu(t), in the chart's coordinates:
// for each i with nu_i > 0, all minors of size n - nu_i + 1 of the chart
// matrix stacked over flag_matrix(t, n-k+i-nu_i, n). Equations for a
// nonreal t are returned split into real and imaginary parts over Q;
// the caller passes one member of each conjugate pair only.
std::vector<MultiPoly> condition_equations(const Chart& chart, const Partition& nu,
                                           const OsculationPoint& t, bool parallel = false);

struct InstanceSystem {
    Chart chart;
    std::vector<MultiPoly> equations;
    // Moebius map applied to the points, t -> (a t + b) / (c t + d);
    // identity when no change of coordinates was needed
    Rational a = 1, b = 0, c = 0, d = 1;
    // transformed points in occurrence order (anchors included)
    std::vector<std::pair<Partition, OsculationPoint>> points;
};

// Chart selection and equation assembly for an instance. Greedy
// anchoring: the real point whose condition has the largest weight goes
// to infinity, the next one to zero, via a real projective change of
// coordinates applied to the points only. Falls back to the plain
// chart when no real points exist.
InstanceSystem instance_system(const OsculatingInstance& instance, bool parallel = false);

// Equation blocks for every occurrence not consumed by the chart's
// anchors; each conjugate pair contributes one merged real block.
std::vector<MultiPoly>
assemble_equations(const Chart& chart,
                   const std::vector<std::pair<Partition, OsculationPoint>>& points,
                   bool parallel = false);

OsculationPoint apply_moebius(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const OsculationPoint& t);

} // namespace osculant::schubert
