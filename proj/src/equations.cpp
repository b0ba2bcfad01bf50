#include "osculant/equations.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace osculant::schubert {

using exactalg::GaussMultiPoly;
using exactalg::GaussPolyMatrix;
using exactalg::GaussianRational;

namespace {

void subsets_of_size(size_t n, size_t k,
                     const std::function<void(const std::vector<size_t>&)>& emit) {
    if (k > n) return;
    if (k == 0) {
        emit({});
        return;
    }
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        emit(idx);
        size_t i = k;
        bool found = false;
        while (i-- > 0) {
            if (idx[i] != i + n - k) {
                found = true;
                break;
            }
        }
        if (!found) return;
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<MultiPoly> condition_equations(const Chart& chart, const Partition& nu,
                                           const OsculationPoint& t, bool parallel) {
    if (nu.weight() == 0) throw domain_error("condition_equations: empty condition");
    const int k = chart.k(), n = chart.n();

    const bool inf_anchored = chart.kind() != ChartKind::full;
    const bool zero_anchored = chart.kind() == ChartKind::at_zero_and_infinity;
    const bool t_is_zero = !t.is_infinity() && t.value().is_zero();
    if ((t.is_infinity() && inf_anchored) || (t_is_zero && zero_anchored))
        throw domain_error("condition_equations: point collides with a chart anchor; "
                           "fold the condition into the chart instead");

    GaussPolyMatrix cm = chart.matrix();

    // gather every minor selection of every rank condition, then
    // evaluate the batch (optionally in parallel; each determinant is
    // independent)
    std::vector<GaussPolyMatrix> stacks;
    struct Job {
        size_t stack;
        std::vector<size_t> rows, cols;
    };
    std::vector<Job> jobs;
    for (int i = 1; i <= k; ++i) {
        int nui = nu.part(static_cast<size_t>(i - 1));
        if (nui == 0) continue;
        int flag_dim = n - k + i - nui;
        stacks.push_back(GaussPolyMatrix::stacked(cm, flag_matrix(t, flag_dim, n)));
        size_t si = stacks.size() - 1;
        size_t size = static_cast<size_t>(n - nui + 1);
        std::vector<std::vector<size_t>> rowsets, colsets;
        subsets_of_size(stacks[si].rows(), size,
                        [&](const std::vector<size_t>& rs) { rowsets.push_back(rs); });
        subsets_of_size(static_cast<size_t>(n), size,
                        [&](const std::vector<size_t>& cs) { colsets.push_back(cs); });
        for (const auto& rs : rowsets)
            for (const auto& cs : colsets) jobs.push_back(Job{si, rs, cs});
    }

    std::vector<GaussMultiPoly> minors(jobs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long j = 0; j < static_cast<long long>(jobs.size()); ++j) {
            const Job& job = jobs[static_cast<size_t>(j)];
            minors[static_cast<size_t>(j)] = minor_det(stacks[job.stack], job.rows, job.cols);
        }
    } else {
        for (const Job& job : jobs) {
            size_t j = static_cast<size_t>(&job - jobs.data());
            minors[j] = minor_det(stacks[job.stack], job.rows, job.cols);
        }
    }

    const bool real_point = t.is_real();
    std::vector<MultiPoly> out;
    for (const auto& p : minors) {
        if (p.is_zero()) continue;
        auto [re, im] = exactalg::split_real_imaginary(p);
        if (real_point && !im.is_zero())
            throw domain_error("condition_equations: real point produced complex coefficients");
        if (!re.is_zero()) out.push_back(std::move(re));
        if (!real_point && !im.is_zero()) out.push_back(std::move(im));
    }
    return out;
}

OsculationPoint apply_moebius(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& d, const OsculationPoint& t) {
    GaussianRational ga(a), gb(b), gc(c), gd(d);
    if (t.is_infinity()) {
        if (c == 0) return OsculationPoint::infinity();
        return OsculationPoint::finite(ga / gc);
    }
    GaussianRational num = ga * t.value() + gb;
    GaussianRational den = gc * t.value() + gd;
    if (den.is_zero()) return OsculationPoint::infinity();
    return OsculationPoint::finite(num / den);
}

InstanceSystem instance_system(const OsculatingInstance& instance, bool parallel) {
    const auto& problem = instance.problem;
    const int k = problem.k, n = problem.n;

    // anchors among the real points: largest condition weight first,
    // ties broken by the fixed occurrence order
    std::vector<size_t> reals;
    for (size_t i = 0; i < instance.assignment.size(); ++i)
        if (instance.assignment[i].second.is_real()) reals.push_back(i);
    std::stable_sort(reals.begin(), reals.end(), [&](size_t x, size_t y) {
        return instance.assignment[x].first.weight() > instance.assignment[y].first.weight();
    });

    InstanceSystem sys{Chart::full(k, n), {}, 1, 0, 0, 1, instance.assignment};
    std::optional<size_t> inf_anchor, zero_anchor;
    if (!reals.empty()) inf_anchor = reals[0];
    if (reals.size() >= 2) zero_anchor = reals[1];

    if (inf_anchor) {
        const OsculationPoint& P = instance.assignment[*inf_anchor].second;
        std::optional<OsculationPoint> Q;
        if (zero_anchor) Q = instance.assignment[*zero_anchor].second;
        bool inf_ok = P.is_infinity();
        bool zero_ok = !Q || (!Q->is_infinity() && Q->value().is_zero());
        if (!inf_ok || !zero_ok) {
            Rational a, b, c, d;
            if (P.is_infinity()) {
                // shift: Q -> 0, infinity fixed
                a = 1, b = -Q->value().re, c = 0, d = 1;
            } else if (Q && Q->is_infinity()) {
                // invert: P -> infinity, infinity -> 0
                a = 0, b = 1, c = 1, d = -P.value().re;
            } else if (Q) {
                // P -> infinity, Q -> 0
                a = 1, b = -Q->value().re, c = 1, d = -P.value().re;
            } else {
                a = 0, b = 1, c = 1, d = -P.value().re;
            }
            sys.a = a, sys.b = b, sys.c = c, sys.d = d;
            for (auto& [cond, pt] : sys.points) pt = apply_moebius(a, b, c, d, pt);
        }
    }

    if (inf_anchor && zero_anchor) {
        sys.chart = Chart::at_zero_and_infinity(k, n, sys.points[*zero_anchor].first,
                                                sys.points[*inf_anchor].first);
    } else if (inf_anchor) {
        sys.chart = Chart::at_infinity(k, n, sys.points[*inf_anchor].first);
    }

    sys.equations = assemble_equations(sys.chart, sys.points, parallel);
    return sys;
}

std::vector<MultiPoly>
assemble_equations(const Chart& chart,
                   const std::vector<std::pair<Partition, OsculationPoint>>& points,
                   bool parallel) {
    std::vector<MultiPoly> out;
    std::vector<bool> done(points.size(), false);
    // occurrences sitting at an anchor are folded into the chart
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& pt = points[i].second;
        bool at_inf = pt.is_infinity();
        bool at_zero = !at_inf && pt.value().is_zero();
        if ((at_inf && chart.kind() != ChartKind::full) ||
            (at_zero && chart.kind() == ChartKind::at_zero_and_infinity))
            done[i] = true;
    }
    for (size_t i = 0; i < points.size(); ++i) {
        if (done[i]) continue;
        const auto& [cond, pt] = points[i];
        if (!pt.is_real()) {
            OsculationPoint partner = pt.conj();
            for (size_t j = i + 1; j < points.size(); ++j) {
                if (!done[j] && points[j].first == cond && points[j].second == partner) {
                    done[j] = true;
                    break;
                }
            }
        }
        done[i] = true;
        auto eqs = condition_equations(chart, cond, pt, parallel);
        for (auto& e : eqs) out.push_back(std::move(e));
    }
    return out;
}

} // namespace osculant::schubert
