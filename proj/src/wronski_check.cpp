#include "osculant/wronski_check.hpp"

#include <functional>

namespace osculant::schubert {

using exactalg::GaussianRational;
using exactalg::GaussUniPoly;
using exactalg::Rational;
using exactalg::UniPoly;

namespace {

GaussUniPoly lift(const UniPoly& p) {
    std::vector<GaussianRational> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(q);
    return GaussUniPoly(std::move(c));
}

struct Quot {
    GaussUniPoly e; // the eliminant, monic and squarefree

    GaussUniPoly reduce(const GaussUniPoly& p) const {
        if (p.degree() < e.degree()) return p;
        return divmod(p, e).second;
    }
    bool is_zero(const GaussUniPoly& p) const { return reduce(p).is_zero(); }
    // nonvanishing at every root of the eliminant
    bool nonzero_at_every_root(const GaussUniPoly& p) const {
        GaussUniPoly r = reduce(p);
        if (r.is_zero()) return false;
        return exactalg::poly_gcd(r, e).degree() == 0;
    }
};

// polynomial in t with coefficients in Q(i)[theta]/(e)
using BiPoly = std::vector<GaussUniPoly>;

void trim(BiPoly& w) {
    while (!w.empty() && w.back().is_zero()) w.pop_back();
}

BiPoly mul(const Quot& q, const BiPoly& a, const BiPoly& b) {
    if (a.empty() || b.empty()) return {};
    BiPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    for (auto& c : r) c = q.reduce(c);
    trim(r);
    return r;
}

BiPoly add(const BiPoly& a, const BiPoly& b) {
    BiPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

BiPoly sub(const BiPoly& a, const BiPoly& b) {
    BiPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

BiPoly derivative(const BiPoly& w) {
    if (w.size() <= 1) return {};
    BiPoly r(w.size() - 1);
    for (size_t i = 1; i < w.size(); ++i)
        r[i - 1] = w[i].scaled(GaussianRational(Rational(static_cast<long>(i))));
    return r;
}

// Horner evaluation at a fixed point, in the quotient ring.
GaussUniPoly eval_at(const Quot& q, const BiPoly& w, const GaussianRational& p) {
    GaussUniPoly acc;
    for (size_t i = w.size(); i-- > 0;) acc = q.reduce(acc.scaled(p) + w[i]);
    return acc;
}

// Synthetic division by (t - p); the caller checks the remainder.
BiPoly deflate(const Quot& q, const BiPoly& w, const GaussianRational& p) {
    if (w.empty()) return {};
    BiPoly quot(w.size() > 1 ? w.size() - 1 : 0);
    GaussUniPoly carry;
    for (size_t i = w.size(); i-- > 1;) {
        carry = q.reduce(carry.scaled(p) + w[i]);
        quot[i - 1] = carry;
    }
    trim(quot);
    return quot;
}

// Evaluate a rational multivariate polynomial at theta-polynomial
// values, reducing along the way.
UniPoly eval_mpoly(const exactalg::MultiPoly& p, const std::vector<UniPoly>& values,
                   const UniPoly& modulus) {
    UniPoly acc;
    for (const auto& [m, c] : p.terms()) {
        UniPoly term = UniPoly::constant(c);
        for (size_t v = 0; v < values.size(); ++v)
            for (int e = 0; e < m[v]; ++e) {
                term = term * values[v];
                if (term.degree() >= modulus.degree()) term = divmod(term, modulus).second;
            }
        acc = acc + term;
    }
    if (acc.degree() >= modulus.degree()) acc = divmod(acc, modulus).second;
    return acc;
}

} // namespace

WronskiOrderReport verify_wronskian_orders(
    const Chart& chart, const std::vector<std::pair<Partition, OsculationPoint>>& points,
    const exactalg::UniPoly& eliminant, const std::vector<UniPoly>& chart_values) {
    WronskiOrderReport rep;

    if (eliminant.degree() < 1) {
        rep.detail = "eliminant is trivial";
        return rep;
    }
    if (!exactalg::is_squarefree(eliminant)) {
        rep.detail = "eliminant is not squarefree";
        return rep;
    }
    Quot q{lift(exactalg::monic(eliminant))};

    const int k = chart.k(), n = chart.n();
    if (chart.var_count() != chart_values.size()) {
        rep.detail = "chart values do not match the chart";
        return rep;
    }
    std::vector<GaussUniPoly> val;
    val.reserve(chart_values.size());
    for (const auto& v : chart_values) val.push_back(lift(v));
    auto cm = chart.matrix();

    // rows as polynomials in t over the quotient ring, under the
    // anchored orientation e_b <-> (-1)^(b-1) t^(n-b)/(n-b)!
    std::vector<BiPoly> rows(static_cast<size_t>(k));
    for (int a = 0; a < k; ++a) {
        BiPoly row(static_cast<size_t>(n));
        for (int b = 0; b < n; ++b) {
            const auto& entry = cm.at(static_cast<size_t>(a), static_cast<size_t>(b));
            GaussUniPoly v;
            if (entry.is_zero()) {
                // stays zero
            } else if (entry.is_constant()) {
                v = GaussUniPoly::constant(entry.constant_value());
            } else {
                size_t var = 0;
                bool found = false;
                for (size_t x = 0; x < val.size(); ++x)
                    if (entry.uses_var(x)) {
                        var = x;
                        found = true;
                        break;
                    }
                if (!found) {
                    rep.detail = "unexpected chart entry";
                    return rep;
                }
                v = val[var];
            }
            Rational fact(exactalg::factorial(static_cast<unsigned long>(n - 1 - b)));
            Rational scale = Rational(1) / fact;
            if (b % 2 != 0) scale = -scale;
            row[static_cast<size_t>(n - 1 - b)] = q.reduce(v.scaled(GaussianRational(scale)));
        }
        trim(row);
        rows[static_cast<size_t>(a)] = std::move(row);
    }

    // Wronski matrix and its determinant
    std::vector<std::vector<BiPoly>> wm(static_cast<size_t>(k),
                                        std::vector<BiPoly>(static_cast<size_t>(k)));
    for (int j = 0; j < k; ++j) {
        wm[0][static_cast<size_t>(j)] = rows[static_cast<size_t>(j)];
        for (int d = 1; d < k; ++d)
            wm[static_cast<size_t>(d)][static_cast<size_t>(j)] =
                derivative(wm[static_cast<size_t>(d - 1)][static_cast<size_t>(j)]);
    }
    std::function<BiPoly(std::vector<size_t>, size_t)> det = [&](std::vector<size_t> cols,
                                                                 size_t row) -> BiPoly {
        if (cols.empty()) return BiPoly{GaussUniPoly::constant(GaussianRational(1))};
        BiPoly acc;
        for (size_t idx = 0; idx < cols.size(); ++idx) {
            std::vector<size_t> rest;
            for (size_t x = 0; x < cols.size(); ++x)
                if (x != idx) rest.push_back(cols[x]);
            BiPoly term = mul(q, wm[row][cols[idx]], det(rest, row + 1));
            acc = (idx % 2 == 0) ? add(acc, term) : sub(acc, term);
        }
        return acc;
    };
    std::vector<size_t> cols(static_cast<size_t>(k));
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    BiPoly w = det(cols, 0);
    if (w.empty()) {
        rep.detail = "wronskian vanishes identically on some solution";
        return rep;
    }

    const int d_total = k * (n - k);

    // order at infinity: top coefficients of w as a degree-D form
    int inf_weight = 0;
    for (const auto& [cond, pt] : points)
        if (pt.is_infinity()) inf_weight = cond.weight();
    for (int j = d_total; j > d_total - inf_weight; --j) {
        if (j < static_cast<int>(w.size()) && !w[static_cast<size_t>(j)].is_zero()) {
            rep.detail = "order at infinity below " + std::to_string(inf_weight);
            return rep;
        }
    }
    {
        int top = d_total - inf_weight;
        GaussUniPoly lead = (top >= 0 && top < static_cast<int>(w.size()))
                                ? w[static_cast<size_t>(top)]
                                : GaussUniPoly{};
        if (!q.nonzero_at_every_root(lead)) {
            rep.detail = "order at infinity exceeds " + std::to_string(inf_weight) +
                         " on some solution";
            return rep;
        }
    }

    // finite points, one at a time
    for (const auto& [cond, pt] : points) {
        if (pt.is_infinity()) continue;
        const GaussianRational& p = pt.value();
        const int target = cond.weight();
        BiPoly cur = w;
        for (int o = 0; o < target; ++o) {
            GaussUniPoly r = eval_at(q, cur, p);
            if (!q.is_zero(r)) {
                rep.detail = "order at " + pt.to_text() + " is " + std::to_string(o) +
                             ", expected " + std::to_string(target);
                return rep;
            }
            cur = deflate(q, cur, p);
        }
        GaussUniPoly r = eval_at(q, cur, p);
        if (!q.nonzero_at_every_root(r)) {
            rep.detail = "order at " + pt.to_text() + " exceeds " + std::to_string(target) +
                         " on some solution";
            return rep;
        }
    }

    rep.ok = true;
    return rep;
}

WronskiOrderReport verify_wronskian_orders(const groebner::BuiltInstance& built,
                                           const groebner::SolveReport& report) {
    WronskiOrderReport rep;
    if (!report.shape) {
        rep.detail = "no shape-position coordinates available";
        return rep;
    }
    const auto& shape = *report.shape;
    UniPoly e = exactalg::monic(shape.eliminant);
    if (!exactalg::is_squarefree(e)) {
        rep.detail = "eliminant is not squarefree";
        return rep;
    }

    const size_t m = built.system.variables.size();
    if (shape.coords.size() + 1 != m) {
        rep.detail = "shape coordinates do not match the system";
        return rep;
    }

    // values of the reduced variables in theta
    std::vector<UniPoly> val_red(m);
    for (size_t j = 0; j + 1 < m; ++j) val_red[j] = shape.coords[j];
    UniPoly theta({Rational(0), Rational(1)});
    val_red[m - 1] = theta;
    if (!report.randomization.empty()) {
        // the solved system had x_last := x_last + sum c_j x_j
        for (size_t j = 0; j + 1 < m; ++j)
            val_red[m - 1] =
                val_red[m - 1] + shape.coords[j].scaled(Rational(report.randomization[j]));
        if (val_red[m - 1].degree() >= e.degree())
            val_red[m - 1] = divmod(val_red[m - 1], e).second;
    }

    // back to full chart coordinates: live slots first, then replay the
    // linear presolve in reverse
    const auto& red = built.reduction;
    std::vector<UniPoly> val_full(red.full_nvars);
    for (size_t j = 0; j < m; ++j) val_full[red.live[j]] = val_red[j];
    for (size_t s = red.steps.size(); s-- > 0;) {
        const auto& step = red.steps[s];
        val_full[step.var] = eval_mpoly(step.expr, val_full, e);
    }

    return verify_wronskian_orders(built.isys.chart, built.isys.points, e, val_full);
}

} // namespace osculant::schubert
