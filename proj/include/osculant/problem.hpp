#pragma once

#include "osculant/points.hpp"
#include "osculant/schur.hpp"

namespace osculant::schubert {

using combinat::Partition;
using combinat::SchubertProblemSpec;

// Per condition, how many of its osculation points are real
// (infinity is a real point). Parity must match the multiplicity.
struct OsculationType {
    // aligned with problem.conditions
    std::vector<int> real_counts;

    std::string to_text(const SchubertProblemSpec& problem) const;
    friend auto operator<=>(const OsculationType&, const OsculationType&) = default;
};

// An assignment of pairwise distinct osculation points to the
// condition occurrences of a Schubert problem, closed under
// conjugation with matching conditions.
struct OsculatingInstance {
    SchubertProblemSpec problem;
    // one entry per occurrence, in the problem's canonical occurrence order
    std::vector<std::pair<Partition, OsculationPoint>> assignment;

    OsculatingInstance(SchubertProblemSpec prob,
                       std::vector<OsculationPoint> points_in_occurrence_order);

    OsculationType osculation_type() const;
};

// Admissible osculation types for a problem, sorted descending
// (the all-real type first).
std::vector<OsculationType> admissible_types(const SchubertProblemSpec& problem);

} // namespace osculant::schubert
