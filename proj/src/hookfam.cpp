#include "osculant/hookfam.hpp"

namespace osculant::hookfam {

using combinat::SchubertProblemSpec;
using exactalg::GaussianRational;
using exactalg::GaussUniPoly;
using exactalg::Mono;
using schubert::OsculatingInstance;

HookInstance::HookInstance(int k_, int n_, std::vector<OsculationPoint> pts)
    : k(k_), n(n_), points(std::move(pts)) {
    if (k < 2 || n - k < 2) throw domain_error("hook instance: need k >= 2 and n-k >= 2");
    if (points.size() != static_cast<size_t>(n - 1))
        throw domain_error("hook instance: expected " + std::to_string(n - 1) + " points");
    for (const auto& p : points)
        if (p.is_infinity()) throw domain_error("hook instance: points must be finite");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw domain_error("hook instance: points must be distinct");

    GaussUniPoly prod = GaussUniPoly::constant(GaussianRational(1));
    for (const auto& p : points) prod *= GaussUniPoly::linear_root(p.value());
    std::vector<Rational> coeffs;
    for (const auto& c : prod.coeffs()) {
        if (c.im != 0)
            throw domain_error("hook instance: points are not conjugation-closed");
        coeffs.push_back(c.re);
    }
    f = UniPoly(std::move(coeffs));
}

OsculatingInstance HookInstance::instance() const {
    SchubertProblemSpec problem(
        k, n, {{combinat::hook_complement(k, n), 1}, {Partition{1}, n - 1}});
    // canonical occurrence order: the heavy condition first (for
    // Gr(2,4) everything merges into hypersurfaces and any order works)
    std::vector<OsculationPoint> pts;
    pts.push_back(OsculationPoint::infinity());
    for (const auto& p : points) pts.push_back(p);
    return OsculatingInstance(problem, pts);
}

Integer predicted_real_count(const HookInstance& instance) {
    UniPoly fp = instance.f.derivative();
    if (!exactalg::is_squarefree(fp))
        throw degeneracy_error("hook instance: f' is not squarefree, resample");
    int r = exactalg::sturm_count_real_roots(exactalg::squarefree_part(fp));
    return combinat::nu(instance.k, instance.n, r);
}

PolyMatrix H_matrix(const Rational& f0, const std::vector<Rational>& gcoeffs,
                    const std::vector<Rational>& hcoeffs) {
    const int nk = static_cast<int>(gcoeffs.size()); // n - k
    const int k = static_cast<int>(hcoeffs.size());
    if (nk < 2 || k < 2) throw domain_error("H_matrix: need k >= 2 and n-k >= 2");
    if (gcoeffs.back() != 1 || hcoeffs.back() != 1)
        throw domain_error("H_matrix: leading coefficients must be 1");
    for (int j = 0; j + 1 < k; ++j)
        if (hcoeffs[static_cast<size_t>(j)] == 0)
            throw domain_error("H_matrix: h coefficients below the leading one must be nonzero");
    const int n = nk + k;

    PolyMatrix m(static_cast<size_t>(k), static_cast<size_t>(n), 0);
    auto set = [&](int i, int j, const Rational& v) {
        m.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) =
            MultiPoly::constant(0, v);
    };
    for (int j = 1; j <= nk; ++j) {
        // c_j = (-1)^(n-k-j+1) (n-k-j)!
        Rational c(exactalg::factorial(static_cast<unsigned long>(nk - j)));
        if ((nk - j + 1) % 2 != 0) c = -c;
        set(1, j, c * gcoeffs[static_cast<size_t>(nk - j)]);
    }
    set(1, nk + 1, f0 / hcoeffs[0]);
    for (int i = 2; i <= k; ++i) {
        set(i, nk + i - 1, Rational(-(i - 1)));
        set(i, nk + i, hcoeffs[static_cast<size_t>(i - 2)] / hcoeffs[static_cast<size_t>(i - 1)]);
    }
    return m;
}

bool verify_det_identity(int k, int n, bool perturb) {
    if (k < 2 || n - k < 2) throw domain_error("verify_det_identity: need k >= 2 and n-k >= 2");
    if (n > 9) throw budget_error("verify_det_identity: symbolic budget admits n <= 9");
    const int nk = n - k;

    // variables: t, f0, g_0..g_(nk-2), h_0..h_(k-2)
    const size_t nv = 2 + static_cast<size_t>(nk - 1) + static_cast<size_t>(k - 1);
    const size_t vt = 0, vf0 = 1;
    auto vg = [&](int i) { return 2 + static_cast<size_t>(i); };             // i < nk-1
    auto vh = [&](int j) { return 2 + static_cast<size_t>(nk - 1 + j); };    // j < k-1

    auto g_sym = [&](int i) {
        return (i == nk - 1) ? MultiPoly::constant(nv, Rational(1))
                             : MultiPoly::variable(nv, vg(i));
    };
    auto h_sym = [&](int j) {
        return (j == k - 1) ? MultiPoly::constant(nv, Rational(1))
                            : MultiPoly::variable(nv, vh(j));
    };
    auto t_pow = [&](int e, const Rational& scale) {
        MultiPoly p(nv);
        Mono m(nv, 0);
        m[vt] = e;
        p.add_term(m, scale);
        return p;
    };

    // H with denominators cleared: row 1 scaled by h_0, row i by h_(i-1);
    // the combined factor is h_0 ... h_(k-2)
    PolyMatrix top(static_cast<size_t>(k), static_cast<size_t>(n), nv);
    for (int j = 1; j <= nk; ++j) {
        Rational c(exactalg::factorial(static_cast<unsigned long>(nk - j)));
        if ((nk - j + 1) % 2 != 0) c = -c;
        if (perturb && j == 1) c += 1;
        top.at(0, static_cast<size_t>(j - 1)) = g_sym(nk - j).scaled(c) * h_sym(0);
    }
    top.at(0, static_cast<size_t>(nk)) = MultiPoly::variable(nv, vf0);
    for (int i = 2; i <= k; ++i) {
        top.at(static_cast<size_t>(i - 1), static_cast<size_t>(nk + i - 2)) =
            h_sym(i - 1).scaled(Rational(-(i - 1)));
        top.at(static_cast<size_t>(i - 1), static_cast<size_t>(nk + i - 1)) = h_sym(i - 2);
    }

    PolyMatrix flag(static_cast<size_t>(nk), static_cast<size_t>(n), nv);
    for (int a = 1; a <= nk; ++a)
        for (int b = a; b <= n; ++b)
            flag.at(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)) = t_pow(
                b - a, Rational(1) / Rational(exactalg::factorial(static_cast<unsigned long>(b - a))));

    MultiPoly lhs = determinant(PolyMatrix::stacked(top, flag));

    MultiPoly bracket(nv);
    for (int i = 0; i <= nk - 1; ++i)
        for (int j = 0; j <= k - 1; ++j)
            bracket += t_pow(i + j + 1, Rational(1) / Rational(i + j + 1)) * g_sym(i) * h_sym(j);
    bracket += MultiPoly::variable(nv, vf0);
    MultiPoly rhs = bracket;
    if ((k * nk) % 2 != 0) rhs = -rhs;
    for (int j = 0; j <= k - 2; ++j) rhs *= h_sym(j);

    return lhs == rhs;
}

groebner::PolySystem direct_system(const HookInstance& instance) {
    const int k = instance.k, n = instance.n;
    UniPoly fp = instance.f.derivative();
    UniPoly phi = exactalg::monic(fp); // degree n-2

    // unknowns: g_0..g_(k-2), h_0..h_(n-k-2); leading coefficients are 1
    const size_t gu = static_cast<size_t>(k - 1);
    const size_t hu = static_cast<size_t>(n - k - 1);
    const size_t nv = gu + hu;
    groebner::PolySystem sys;
    for (size_t i = 0; i < gu; ++i) sys.variables.push_back("g" + std::to_string(i));
    for (size_t j = 0; j < hu; ++j) sys.variables.push_back("h" + std::to_string(j));

    auto gcoef = [&](int i) {
        return (i == k - 1) ? MultiPoly::constant(nv, Rational(1))
                            : MultiPoly::variable(nv, static_cast<size_t>(i));
    };
    auto hcoef = [&](int j) {
        return (j == n - k - 1) ? MultiPoly::constant(nv, Rational(1))
                                : MultiPoly::variable(nv, gu + static_cast<size_t>(j));
    };

    for (int d = 0; d <= n - 3; ++d) {
        MultiPoly eq(nv);
        for (int i = 0; i <= std::min(d, k - 1); ++i) {
            int j = d - i;
            if (j > n - k - 1) continue;
            eq += gcoef(i) * hcoef(j);
        }
        eq -= MultiPoly::constant(nv, phi.coeff(static_cast<size_t>(d)));
        sys.generators.push_back(std::move(eq));
    }
    return sys;
}

groebner::SolveReport solve_direct(const HookInstance& instance,
                                   const groebner::SolveOptions& options) {
    Integer expect = exactalg::binomial(static_cast<unsigned long>(instance.n - 2),
                                        static_cast<unsigned long>(instance.k - 1));
    auto rep = groebner::solve_system(direct_system(instance), expect.get_si(), options);
    rep.chart = "factorization";
    return rep;
}

FactorizationCensus mod4_factorization_census(const UniPoly& f, int m) {
    if (m < 1) throw domain_error("census: need m >= 1");
    if (f.degree() != 2 * m)
        throw domain_error("census: polynomial degree must be 2m = " + std::to_string(2 * m));
    if (!exactalg::is_squarefree(f)) throw domain_error("census: polynomial must be squarefree");

    const int r = exactalg::sturm_count_real_roots(exactalg::squarefree_part(f));
    const int c = (2 * m - r) / 2; // conjugate pairs

    FactorizationCensus out;
    out.total = exactalg::binomial(static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
    out.real_count = 0;
    // g takes p full conjugate pairs and m-2p real roots
    for (int p = 0; 2 * p <= m; ++p) {
        if (p > c) break;
        if (m - 2 * p > r) continue;
        out.real_count += exactalg::binomial(static_cast<unsigned long>(c), static_cast<unsigned long>(p)) *
                          exactalg::binomial(static_cast<unsigned long>(r), static_cast<unsigned long>(m - 2 * p));
    }
    out.nonreal_count = out.total - out.real_count;
    out.self_conjugate_count = (r == 0) ? Integer(Integer(1) << m) : Integer(0);
    return out;
}

} // namespace osculant::hookfam
