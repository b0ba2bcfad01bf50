#pragma once

#include "osculant/tables.hpp"

namespace osculant::exper {

// One structural law checked against a frequency table.
struct LawResult {
    std::string law;
    bool applicable = false;
    bool pass = true;
    std::string detail;
};

struct StructureReport {
    std::vector<LawResult> laws;
    bool all_pass() const {
        for (const auto& l : laws)
            if (l.applicable && !l.pass) return false;
        return true;
    }
    std::string to_text() const;
};

// Checks, where applicable: column parity; the all-real row sitting
// entirely at the complex count; the topological lower bound for
// problems with at most two non-hypersurface occurrences; the mod-4
// congruence for symmetric problems in Gr(k,2k); and the predicted
// support and lower bound for the hook family.
StructureReport check_structures(const FrequencyTable& table, const SchubertProblemSpec& problem);

} // namespace osculant::exper
