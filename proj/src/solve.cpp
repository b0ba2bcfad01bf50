#include "osculant/solve.hpp"

namespace osculant::groebner {

using exactalg::MultiPoly;
using exactalg::Rational;

namespace {

// splitmix64, the usual seed scrambler
uint64_t mix(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

BuiltInstance build_system(const OsculatingInstance& instance, bool parallel_minors) {
    schubert::InstanceSystem isys = schubert::instance_system(instance, parallel_minors);

    PolySystem full;
    full.variables = isys.chart.var_names();
    full.generators = isys.equations;

    auto [reduced, reduction] = eliminate_linear(full);

    const size_t nv = reduced.variables.size();
    if (nv > 1 && !reduced.generators.empty()) {
        // elimination variable: the one appearing in fewest equations,
        // ties toward the later variable
        std::vector<int> uses(nv, 0);
        for (const auto& e : reduced.generators)
            for (size_t v = 0; v < nv; ++v)
                if (e.uses_var(v)) ++uses[v];
        size_t best = 0;
        for (size_t v = 1; v < nv; ++v)
            if (uses[v] <= uses[best]) best = v;
        if (best != nv - 1) {
            // rotate it to the end of the declared order
            std::vector<size_t> perm(nv);
            size_t next = 0;
            for (size_t v = 0; v < nv; ++v)
                if (v != best) perm[v] = next++;
            perm[best] = nv - 1;
            for (auto& g : reduced.generators) g = g.remapped(perm, nv);
            std::vector<std::string> names(nv);
            std::vector<size_t> live(nv);
            for (size_t v = 0; v < nv; ++v) {
                names[perm[v]] = reduced.variables[v];
                live[perm[v]] = reduction.live[v];
            }
            reduced.variables = std::move(names);
            reduction.live = std::move(live);
        }
    }

    return BuiltInstance{std::move(reduced), std::move(isys), std::move(reduction)};
}

SolveReport solve_system(const PolySystem& system, long long expected,
                         const SolveOptions& options) {
    const size_t nv = system.variables.size();

    if (nv == 0) {
        // no unknowns left: either the single point survives, or a
        // nonzero constant generator rules everything out
        SolveReport rep;
        rep.system = system;
        bool inconsistent = false;
        for (const auto& g : system.generators)
            if (!g.is_zero()) inconsistent = true;
        rep.num_complex = inconsistent ? 0 : 1;
        rep.num_real = rep.num_complex;
        rep.transversal = (expected == rep.num_complex);
        return rep;
    }

    SolveReport best;
    best.num_complex = -1;

    uint64_t state = options.randomization_seed;
    std::vector<int> functional; // empty on the first attempt

    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        PolySystem current = system;
        if (!functional.empty()) {
            // substitute x_last := x_last + sum c_j x_j in every generator
            MultiPoly repl = MultiPoly::variable(nv, nv - 1);
            for (size_t j = 0; j + 1 < nv; ++j)
                repl += MultiPoly::variable(nv, j).scaled(Rational(functional[j]));
            for (auto& g : current.generators) g = g.substitute(nv - 1, repl);
        }

        SolveReport rep;
        rep.system = current;
        rep.randomization = functional;

        auto basis = buchberger_lex(current, options.budget);
        UniPoly elim = eliminant(basis, nv - 1);
        UniPoly sf = (elim.degree() <= 0) ? UniPoly::constant(Rational(1))
                                          : exactalg::squarefree_part(elim);
        rep.eliminant = sf;
        rep.num_complex = std::max<long>(0L, sf.degree());
        rep.num_real = (sf.degree() <= 0) ? 0 : exactalg::sturm_count_real_roots(sf);
        rep.transversal = (elim.degree() == sf.degree()) && (rep.num_complex == expected);
        rep.shape = shape_coordinates(basis, nv);

        if (rep.num_complex > expected)
            throw degeneracy_error("solve: eliminant degree " + std::to_string(rep.num_complex) +
                                   " exceeds the expected count " + std::to_string(expected));

        if (rep.transversal) return rep;
        if (rep.num_complex > best.num_complex) best = rep;

        if (nv < 2) break;
        // shape-position retry with a fresh small-integer functional
        functional.assign(nv - 1, 0);
        for (size_t j = 0; j + 1 < nv; ++j) {
            state = mix(state);
            int c = static_cast<int>(state % (2ull * options.coeff_bound)) - options.coeff_bound;
            if (c >= 0) ++c; // nonzero
            functional[static_cast<size_t>(j)] = c;
        }
    }
    best.transversal = false;
    return best;
}

SolveReport solve_instance(const OsculatingInstance& instance, long long expected,
                           const SolveOptions& options) {
    auto built = build_system(instance, options.parallel_minors);
    SolveReport rep = solve_system(built.system, expected, options);
    rep.chart = built.isys.chart.descriptor();
    return rep;
}

} // namespace osculant::groebner
