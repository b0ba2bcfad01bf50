#pragma once

#include <map>
#include <vector>
#include <string>
#include <functional>

#include "osculant/rational.hpp"
#include "osculant/unipoly.hpp"

namespace osculant::exactalg {

// Exponent vector over an ordered variable list. Plain lexicographic
// comparison of the vectors is the lex monomial order for that list.
using Mono = std::vector<int>;

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
    // does a divide b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& b, const Mono& a) {
    Mono r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline int mono_total_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

// Sparse multivariate polynomial. Terms are kept sorted descending in
// lex order, so begin() is the leading term. The ambient variable list
// (its length and order) is fixed at construction and is owned by the
// chart or system, not the polynomial.
template <class K>
class MPoly {
  public:
    using TermMap = std::map<Mono, K, std::greater<Mono>>;

    MPoly() : nvars_(0) {}
    explicit MPoly(size_t nvars) : nvars_(nvars) {}

    static MPoly constant(size_t nvars, K v) {
        MPoly p(nvars);
        if (!coeff_is_zero(v)) p.terms_.emplace(Mono(nvars, 0), std::move(v));
        return p;
    }
    static MPoly variable(size_t nvars, size_t index, K scale = K(1)) {
        MPoly p(nvars);
        Mono m(nvars, 0);
        m[index] = 1;
        if (!coeff_is_zero(scale)) p.terms_.emplace(std::move(m), std::move(scale));
        return p;
    }

    size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Mono& leading_mono() const { return terms_.begin()->first; }
    const K& leading_coeff() const { return terms_.begin()->second; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_total_degree(leading_mono()) == 0);
    }
    K constant_value() const {
        if (terms_.empty()) return K(0);
        return terms_.begin()->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, mono_total_degree(m));
        return d;
    }

    int degree_in(size_t var) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
        return d;
    }

    bool uses_var(size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m[var] > 0) return true;
        return false;
    }

    // true when every monomial involves only `var`
    bool is_univariate_in(size_t var) const {
        for (const auto& [m, c] : terms_)
            for (size_t i = 0; i < nvars_; ++i)
                if (i != var && m[i] > 0) return false;
        return true;
    }

    void add_term(const Mono& m, const K& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(std::max(a.nvars_, b.nvars_));
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const K& s) const {
        MPoly r(nvars_);
        if (coeff_is_zero(s)) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    // this -= s * t^m * g, the reduction workhorse
    void sub_mul(const K& s, const Mono& m, const MPoly& g) {
        for (const auto& [mg, cg] : g.terms_) add_term(mono_mul(m, mg), -(s * cg));
    }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    K evaluate(const std::vector<K>& point) const {
        K acc(0);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < nvars_; ++i)
                for (int e = 0; e < m[i]; ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Substitute `var := replacement` by Horner on that variable.
    MPoly substitute(size_t var, const MPoly& replacement) const {
        int d = degree_in(var);
        // coefficients of this as a polynomial in `var`
        std::vector<MPoly> byDeg(static_cast<size_t>(d) + 1, MPoly(nvars_));
        for (const auto& [m, c] : terms_) {
            Mono stripped = m;
            int e = stripped[var];
            stripped[var] = 0;
            byDeg[static_cast<size_t>(e)].add_term(stripped, c);
        }
        MPoly acc(nvars_);
        for (size_t i = byDeg.size(); i-- > 0;) {
            acc = acc * replacement + byDeg[i];
        }
        return acc;
    }

    // Apply a variable permutation/compaction: term exponents move from
    // position v to perm[v]; perm must be injective on used variables.
    MPoly remapped(const std::vector<size_t>& perm, size_t new_nvars) const {
        MPoly r(new_nvars);
        for (const auto& [m, c] : terms_) {
            Mono mm(new_nvars, 0);
            for (size_t v = 0; v < nvars_; ++v) {
                if (m[v] == 0) continue;
                if (perm[v] >= new_nvars)
                    throw domain_error("remapped: used variable has no target slot");
                mm[perm[v]] += m[v];
            }
            r.add_term(mm, c);
        }
        return r;
    }

    // Re-embed into a wider variable list; existing indices keep their
    // meaning.
    MPoly with_nvars(size_t nv) const {
        if (nv == nvars_) return *this;
        if (nv < nvars_) throw domain_error("with_nvars: cannot shrink the variable list");
        MPoly r(nv);
        for (const auto& [m, c] : terms_) {
            Mono mm = m;
            mm.resize(nv, 0);
            r.terms_.emplace(std::move(mm), c);
        }
        return r;
    }

    // Keep only variable `var`, which must be the only one in use.
    Poly<K> to_unipoly(size_t var) const {
        Poly<K> r;
        for (const auto& [m, c] : terms_) r.set_coeff(static_cast<size_t>(m[var]), r.coeff(static_cast<size_t>(m[var])) + c);
        return r;
    }

    std::string to_text(const std::vector<std::string>& names) const;

  private:
    size_t nvars_;
    TermMap terms_;
};

using MultiPoly = MPoly<Rational>;
using GaussMultiPoly = MPoly<GaussianRational>;

// Coefficientwise split of a Q[i] polynomial into (Re, Im) over Q.
std::pair<MultiPoly, MultiPoly> split_real_imaginary(const GaussMultiPoly& p);

std::string default_var_name(size_t i);

// Canonical text form: monomials sorted descending, explicit signs,
// '^' powers. Used by debug dumps and golden files.
template <class K>
std::string MPoly<K>::to_text(const std::vector<std::string>& names) const {
    using exactalg::to_string;
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string coef = to_string(c);
        bool neg = !coef.empty() && coef[0] == '-';
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (neg) coef = coef.substr(1);
        std::string monos;
        for (size_t i = 0; i < nvars_; ++i) {
            if (m[i] == 0) continue;
            if (!monos.empty()) monos += "*";
            monos += (i < names.size()) ? names[i] : default_var_name(i);
            if (m[i] > 1) monos += "^" + std::to_string(m[i]);
        }
        if (monos.empty()) {
            out += coef;
        } else {
            if (coef != "1") out += coef + "*";
            out += monos;
        }
    }
    return out;
}

} // namespace osculant::exactalg
