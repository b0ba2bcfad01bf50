#pragma once

#include "osculant/problem.hpp"
#include "osculant/rng.hpp"

namespace osculant::exper {

using schubert::OsculatingInstance;
using schubert::OsculationPoint;
using schubert::OsculationType;
using combinat::SchubertProblemSpec;

// Draw an instance of the requested osculation type: per condition,
// the requested number of distinct real points (infinity and zero go
// to the heaviest conditions first, the rest are integers or simple
// rationals in [-R, R]) and conjugate pairs p +- q i with q != 0.
// All points are globally distinct.
OsculatingInstance sample_instance(const SchubertProblemSpec& problem,
                                   const OsculationType& type, SeededRng& rng,
                                   int point_range = 12);

} // namespace osculant::exper
