#include "osculant/sampler.hpp"

#include <set>

namespace osculant::exper {

using exactalg::GaussianRational;
using exactalg::Rational;

namespace {

Rational draw_rational(SeededRng& rng, int range, bool nonzero) {
    for (int tries = 0; tries < 1000; ++tries) {
        long long den = 1 + static_cast<long long>(rng.below(2)); // 1 or 2
        long long num = rng.range(-static_cast<long long>(range) * den,
                                  static_cast<long long>(range) * den);
        if (nonzero && num == 0) continue;
        Rational q(exactalg::Integer(static_cast<long>(num)), exactalg::Integer(static_cast<long>(den)));
        q.canonicalize();
        return q;
    }
    throw degeneracy_error("sampler: could not draw a nonzero rational");
}

} // namespace

OsculatingInstance sample_instance(const SchubertProblemSpec& problem,
                                   const OsculationType& type, SeededRng& rng, int point_range) {
    if (type.real_counts.size() != problem.conditions.size())
        throw domain_error("sampler: osculation type does not match the problem");
    for (size_t c = 0; c < problem.conditions.size(); ++c) {
        int a = problem.conditions[c].second;
        int r = type.real_counts[c];
        if (r < 0 || r > a || (a - r) % 2 != 0)
            throw domain_error("sampler: real count " + std::to_string(r) + " incompatible with multiplicity " +
                               std::to_string(a));
    }

    for (int range = point_range;; range *= 2) {
        std::set<OsculationPoint> used;
        std::vector<OsculationPoint> points;
        bool collision = false;

        // the first two real slots overall take the anchors; conditions
        // are already in descending canonical order
        int real_slot = 0;
        auto draw_real = [&]() -> OsculationPoint {
            if (real_slot == 0) {
                ++real_slot;
                return OsculationPoint::infinity();
            }
            if (real_slot == 1) {
                ++real_slot;
                return OsculationPoint::real(Rational(0));
            }
            ++real_slot;
            return OsculationPoint::real(draw_rational(rng, range, true));
        };

        for (size_t c = 0; c < problem.conditions.size() && !collision; ++c) {
            int a = problem.conditions[c].second;
            int r = type.real_counts[c];
            for (int i = 0; i < r; ++i) {
                OsculationPoint p = draw_real();
                if (!used.insert(p).second) {
                    collision = true;
                    break;
                }
                points.push_back(p);
            }
            if (collision) break;
            for (int i = 0; i < (a - r) / 2; ++i) {
                Rational re = draw_rational(rng, range, false);
                Rational im = draw_rational(rng, range, true);
                if (im < 0) im = -im;
                OsculationPoint p = OsculationPoint::finite(GaussianRational(re, im));
                OsculationPoint q = p.conj();
                if (!used.insert(p).second || !used.insert(q).second) {
                    collision = true;
                    break;
                }
                points.push_back(p);
                points.push_back(q);
            }
        }
        if (!collision) return OsculatingInstance(problem, points);
        if (range > point_range * 1024)
            throw degeneracy_error("sampler: persistent point collisions");
    }
}

} // namespace osculant::exper
