#include "osculant/problem.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace osculant::schubert {

std::string OsculationType::to_text(const SchubertProblemSpec& problem) const {
    std::string s;
    for (size_t i = 0; i < real_counts.size(); ++i) {
        if (i) s += ",";
        s += problem.conditions[i].first.to_text() + ":" + std::to_string(real_counts[i]);
    }
    return s;
}

OsculatingInstance::OsculatingInstance(SchubertProblemSpec prob,
                                       std::vector<OsculationPoint> points)
    : problem(std::move(prob)) {
    auto occs = problem.occurrences();
    if (points.size() != occs.size())
        throw domain_error("instance: expected " + std::to_string(occs.size()) +
                           " points, got " + std::to_string(points.size()));
    for (size_t i = 0; i < occs.size(); ++i) assignment.emplace_back(occs[i], points[i]);

    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw domain_error("instance: osculation points must be pairwise distinct");

    // conjugation closure with matching conditions
    for (size_t i = 0; i < assignment.size(); ++i) {
        OsculationPoint want = assignment[i].second.conj();
        bool found = false;
        for (size_t j = 0; j < assignment.size(); ++j) {
            if (assignment[j].first == assignment[i].first && assignment[j].second == want) {
                found = true;
                break;
            }
        }
        if (!found)
            throw domain_error("instance: not conjugation-closed at point " +
                               assignment[i].second.to_text() + " with condition " +
                               assignment[i].first.to_text());
    }
}

OsculationType OsculatingInstance::osculation_type() const {
    OsculationType type;
    type.real_counts.assign(problem.conditions.size(), 0);
    for (const auto& [p, pt] : assignment) {
        if (!pt.is_real()) continue;
        for (size_t c = 0; c < problem.conditions.size(); ++c) {
            if (problem.conditions[c].first == p) {
                ++type.real_counts[c];
                break;
            }
        }
    }
    return type;
}

std::vector<OsculationType> admissible_types(const SchubertProblemSpec& problem) {
    std::vector<std::vector<int>> axes;
    for (const auto& [p, mult] : problem.conditions) {
        std::vector<int> vals;
        for (int r = mult; r >= 0; r -= 2) vals.push_back(r);
        axes.push_back(std::move(vals));
    }
    std::vector<OsculationType> out;
    std::vector<int> cur(axes.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == axes.size()) {
            out.push_back(OsculationType{cur});
            return;
        }
        for (int v : axes[i]) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

} // namespace osculant::schubert
