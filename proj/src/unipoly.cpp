#include "osculant/unipoly.hpp"

namespace osculant::exactalg {

UniPoly unipoly_from_roots(const std::vector<Rational>& roots) {
    UniPoly p = UniPoly::constant(Rational(1));
    for (const auto& r : roots) p *= UniPoly::linear_root(r);
    return p;
}

UniPoly monic(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("monic: zero polynomial");
    Rational inv = 1 / p.leading();
    return p.scaled(inv);
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        (void)q;
        x = y;
        // normalize to keep coefficient sizes in check
        y = r.is_zero() ? r : monic(r);
    }
    if (x.is_zero()) return x;
    return monic(x);
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = gcd(p, p.derivative());
    auto [q, r] = divmod(p, g);
    if (!r.is_zero()) throw domain_error("squarefree_part: inexact division");
    return monic(q);
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).degree() == 0;
}

namespace {

// Sign of p at -inf/+inf from its leading coefficient.
int sign_at_plus_inf(const UniPoly& p) { return sign(p.leading()); }
int sign_at_minus_inf(const UniPoly& p) {
    int s = sign(p.leading());
    return (p.degree() % 2 != 0) ? -s : s;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace

int sturm_count_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("sturm: zero polynomial");
    if (!is_squarefree(p)) throw domain_error("sturm: input is not squarefree");
    if (p.degree() == 0) return 0;

    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero()) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        auto [q, r] = divmod(a, b);
        (void)q;
        if (r.is_zero()) break;
        // next term is minus the remainder; scale only by a positive
        // constant so every sign is preserved
        Rational lead = abs(r.leading());
        chain.push_back((-r).scaled(1 / lead));
    }

    std::vector<int> lo, hi;
    lo.reserve(chain.size());
    hi.reserve(chain.size());
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        lo.push_back(sign_at_minus_inf(q));
        hi.push_back(sign_at_plus_inf(q));
    }
    return variations(lo) - variations(hi);
}

int vanishing_order(const UniPoly& p, const Rational& a) {
    if (p.is_zero()) throw domain_error("vanishing_order: zero polynomial");
    UniPoly cur = p;
    UniPoly lin = UniPoly::linear_root(a);
    int order = 0;
    while (true) {
        auto [q, r] = divmod(cur, lin);
        if (!r.is_zero()) return order;
        ++order;
        cur = q;
        if (cur.is_zero()) return order;
    }
}

std::string to_text(const UniPoly& p, const std::string& var) { return p.to_text(var); }

} // namespace osculant::exactalg
