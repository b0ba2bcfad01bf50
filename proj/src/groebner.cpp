#include "osculant/groebner.hpp"

#include <algorithm>
#include <list>
#include <optional>

namespace osculant::groebner {

using exactalg::Integer;
using exactalg::Mono;
using exactalg::Rational;

namespace {

MultiPoly make_monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading_coeff());
}

bool coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// The completion loop runs on primitive integer polynomials with
// pseudo-reduction; this keeps every step in mpz arithmetic and under
// content control, which is far cheaper than normalized rationals.
using ZTerms = std::map<Mono, Integer, std::greater<Mono>>;

struct ZPoly {
    ZTerms terms;

    bool is_zero() const { return terms.empty(); }
    const Mono& lm() const { return terms.begin()->first; }
    const Integer& lc() const { return terms.begin()->second; }

    void add(const Mono& m, const Integer& c) {
        if (c == 0) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    // this = a*this - b * t^shift * g
    void combine(const Integer& a, const Integer& b, const Mono& shift, const ZPoly& g) {
        if (a != 1)
            for (auto& [m, c] : terms) c *= a;
        for (const auto& [m, c] : g.terms) add(exactalg::mono_mul(shift, m), -(b * c));
    }

    void make_primitive() {
        if (terms.empty()) return;
        Integer content = 0;
        for (const auto& [m, c] : terms) {
            content = gcd(content, c);
            if (content == 1) break;
        }
        bool flip = lc() < 0;
        if (content == 1 && !flip) return;
        if (flip) content = -content;
        for (auto& [m, c] : terms) c /= content;
    }
};

ZPoly z_from(const MultiPoly& p) {
    ZPoly out;
    Integer den = 1;
    for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
    for (const auto& [m, c] : p.terms()) {
        Rational scaled = c * Rational(den);
        out.terms.emplace(m, scaled.get_num());
    }
    out.make_primitive();
    return out;
}

MultiPoly z_to_monic(const ZPoly& p, size_t nvars) {
    MultiPoly out(nvars);
    if (p.is_zero()) return out;
    Rational lead(p.lc());
    for (const auto& [m, c] : p.terms) out.add_term(m, Rational(c) / lead);
    return out;
}

// Full division: pseudo-reduce while some leading monomial divides,
// move irreducible leading terms to the remainder. The result is exact
// up to a positive constant factor, which is all the ideal cares
// about. Basis elements must be primitive with positive leading
// coefficients.
ZPoly z_normal_form(ZPoly p, const std::vector<ZPoly>& basis, long long max_terms) {
    ZPoly rem;
    long long steps = 0;
    auto joint_primitive = [&]() {
        Integer content = 0;
        for (const auto& [m, c] : p.terms) {
            content = gcd(content, c);
            if (content == 1) return;
        }
        for (const auto& [m, c] : rem.terms) {
            content = gcd(content, c);
            if (content == 1) return;
        }
        if (content == 0 || content == 1) return;
        for (auto& [m, c] : p.terms) c /= content;
        for (auto& [m, c] : rem.terms) c /= content;
    };
    while (!p.is_zero()) {
        const Mono lm = p.lm();
        const ZPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && exactalg::mono_divides(g.lm(), lm)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            rem.add(lm, p.lc());
            p.terms.erase(p.terms.begin());
            continue;
        }
        Integer d = gcd(p.lc(), reducer->lc());
        Integer a = reducer->lc() / d;
        Integer b = p.lc() / d;
        // the remainder scales with p to keep the decomposition exact
        if (a != 1)
            for (auto& [m, c] : rem.terms) c *= a;
        p.combine(a, b, exactalg::mono_div(lm, reducer->lm()), *reducer);
        if (++steps % 8 == 0) joint_primitive();
        if (static_cast<long long>(p.terms.size()) > max_terms)
            throw budget_error("buchberger: term budget exceeded during reduction");
    }
    rem.make_primitive();
    return rem;
}

} // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem(p.nvars());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Mono& lm = work.leading_mono();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (exactalg::mono_divides(g.leading_mono(), lm)) {
                Rational factor = work.leading_coeff() / g.leading_coeff();
                work.sub_mul(factor, exactalg::mono_div(lm, g.leading_mono()), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            // move the irreducible leading term to the remainder
            Rational c = work.leading_coeff();
            Mono m = lm;
            rem.add_term(m, c);
            MultiPoly lt(p.nvars());
            lt.add_term(m, c);
            work -= lt;
        }
    }
    return rem;
}

std::vector<MultiPoly> buchberger_lex(const PolySystem& system, const GroebnerBudget& budget) {
    const size_t nvars = system.variables.size();
    std::vector<ZPoly> basis;
    for (const auto& g : system.generators) {
        if (g.nvars() != nvars) throw domain_error("buchberger: generator variable mismatch");
        if (!g.is_zero()) basis.push_back(z_from(g));
    }

    struct Pair {
        size_t i, j;
        Mono lcm;
        int deg;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return a.lcm < b.lcm;
    };

    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            Mono l = exactalg::mono_lcm(basis[i].lm(), basis[j].lm());
            pairs.push_back(Pair{i, j, l, exactalg::mono_total_degree(l)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

    long long steps = 0;
    while (!pairs.empty()) {
        if (++steps > budget.max_pairs)
            throw budget_error("buchberger: pair budget exhausted after " +
                               std::to_string(steps) + " steps with basis size " +
                               std::to_string(basis.size()));
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair pr = *it;
        pairs.erase(it);

        const ZPoly& f = basis[pr.i];
        const ZPoly& g = basis[pr.j];

        // first criterion: coprime leading monomials
        if (coprime(f.lm(), g.lm())) continue;
        // second (chain) criterion: some other basis element divides the
        // lcm and both linking pairs were already handled
        {
            bool skip = false;
            for (size_t l = 0; l < basis.size() && !skip; ++l) {
                if (l == pr.i || l == pr.j) continue;
                if (!exactalg::mono_divides(basis[l].lm(), pr.lcm)) continue;
                bool pending = false;
                for (const auto& q : pairs) {
                    if ((q.i == std::min(pr.i, l) && q.j == std::max(pr.i, l)) ||
                        (q.i == std::min(pr.j, l) && q.j == std::max(pr.j, l))) {
                        pending = true;
                        break;
                    }
                }
                if (!pending) skip = true;
            }
            if (skip) continue;
        }

        // integer S-polynomial
        Integer d = gcd(f.lc(), g.lc());
        ZPoly s;
        for (const auto& [m, c] : f.terms)
            s.add(exactalg::mono_mul(exactalg::mono_div(pr.lcm, f.lm()), m), (g.lc() / d) * c);
        for (const auto& [m, c] : g.terms)
            s.add(exactalg::mono_mul(exactalg::mono_div(pr.lcm, g.lm()), m), -((f.lc() / d) * c));

        ZPoly r = z_normal_form(std::move(s), basis, budget.max_terms);
        if (r.is_zero()) continue;
        basis.push_back(std::move(r));
        if (static_cast<long long>(basis.size()) > budget.max_basis)
            throw budget_error("buchberger: basis size budget exceeded");
        push_pairs_for(basis.size() - 1);
    }

    // interreduce: drop elements whose lead is divisible by another lead
    std::vector<ZPoly> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (exactalg::mono_divides(basis[j].lm(), basis[i].lm())) {
                if (basis[j].lm() == basis[i].lm() && j > i) continue;
                redundant = true;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    // reduce tails against the other elements and hand back monic
    std::vector<MultiPoly> final_basis;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<ZPoly> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        ZPoly nf = z_normal_form(reduced[i], others, budget.max_terms);
        if (!nf.is_zero()) final_basis.push_back(z_to_monic(nf, nvars));
    }
    std::sort(final_basis.begin(), final_basis.end(),
              [](const MultiPoly& a, const MultiPoly& b) { return a.leading_mono() > b.leading_mono(); });
    return final_basis;
}

exactalg::UniPoly eliminant(const std::vector<MultiPoly>& basis, size_t last_var) {
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.is_univariate_in(last_var)) return g.to_unipoly(last_var);
    }
    throw degeneracy_error("eliminant: no univariate element in the last variable "
                           "(positive-dimensional ideal)");
}

std::pair<PolySystem, LinearReduction> eliminate_linear(const PolySystem& system) {
    const size_t nf = system.variables.size();
    LinearReduction red;
    red.full_nvars = nf;
    std::vector<bool> dead(nf, false);
    std::vector<MultiPoly> gens;
    for (const auto& g : system.generators)
        if (!g.is_zero()) gens.push_back(g);

    while (true) {
        // candidate: generator linear in a live variable with a nonzero
        // constant coefficient; prefer the shortest substitution
        size_t best_gen = gens.size(), best_var = nf;
        size_t best_cost = SIZE_MAX;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            const auto& g = gens[gi];
            for (size_t v = 0; v < nf; ++v) {
                if (dead[v] || g.degree_in(v) != 1) continue;
                bool const_coeff = true;
                for (const auto& [m, c] : g.terms()) {
                    if (m[v] != 1) continue;
                    for (size_t w = 0; w < nf && const_coeff; ++w)
                        if (w != v && m[w] > 0) const_coeff = false;
                }
                if (!const_coeff) continue;
                size_t cost = g.term_count();
                if (cost < best_cost) {
                    best_cost = cost;
                    best_gen = gi;
                    best_var = v;
                }
            }
        }
        if (best_gen == gens.size()) break;

        const MultiPoly g = gens[best_gen];
        Rational coeff(0);
        MultiPoly rest(nf);
        for (const auto& [m, c] : g.terms()) {
            if (m[best_var] == 1)
                coeff = c;
            else
                rest.add_term(m, c);
        }
        MultiPoly expr = rest.scaled(Rational(-1) / coeff);
        gens.erase(gens.begin() + static_cast<long>(best_gen));
        for (auto& h : gens)
            if (h.uses_var(best_var)) h = h.substitute(best_var, expr);
        gens.erase(std::remove_if(gens.begin(), gens.end(),
                                  [](const MultiPoly& h) { return h.is_zero(); }),
                   gens.end());
        dead[best_var] = true;
        red.steps.push_back(LinearReduction::Step{best_var, expr});
    }

    for (size_t v = 0; v < nf; ++v)
        if (!dead[v]) red.live.push_back(v);

    // compact the survivors
    std::vector<size_t> perm(nf, nf);
    for (size_t j = 0; j < red.live.size(); ++j) perm[red.live[j]] = j;
    PolySystem out;
    for (size_t j = 0; j < red.live.size(); ++j)
        out.variables.push_back(system.variables[red.live[j]]);
    for (const auto& g : gens) out.generators.push_back(g.remapped(perm, red.live.size()));
    return {out, red};
}

std::optional<ShapeCoordinates> shape_coordinates(const std::vector<MultiPoly>& basis,
                                                  size_t nvars) {
    if (nvars == 0) return std::nullopt;
    const size_t last = nvars - 1;
    ShapeCoordinates out;
    out.coords.assign(nvars - 1, exactalg::UniPoly{});
    std::vector<bool> have(nvars - 1, false);
    bool have_elim = false;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (g.is_univariate_in(last)) {
            out.eliminant = g.to_unipoly(last);
            have_elim = true;
            continue;
        }
        // expect x_j - q_j(theta)
        const Mono& lm = g.leading_mono();
        size_t var = nvars;
        for (size_t v = 0; v < last; ++v)
            if (lm[v] > 0) {
                if (lm[v] != 1 || var != nvars) return std::nullopt;
                var = v;
            }
        if (var == nvars || lm[last] != 0) return std::nullopt;
        exactalg::UniPoly q;
        bool first = true;
        for (const auto& [m, c] : g.terms()) {
            if (first) {
                first = false; // the leading x_var term
                if (c != 1) return std::nullopt;
                continue;
            }
            for (size_t v = 0; v < last; ++v)
                if (m[v] > 0) return std::nullopt;
            q.set_coeff(static_cast<size_t>(m[last]), q.coeff(static_cast<size_t>(m[last])) - c);
        }
        if (have[var]) return std::nullopt;
        have[var] = true;
        out.coords[var] = q;
    }
    if (!have_elim) return std::nullopt;
    for (bool h : have)
        if (!h) return std::nullopt;
    return out;
}

} // namespace osculant::groebner
