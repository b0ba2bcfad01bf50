#pragma once

#include <vector>
#include <string>

#include "osculant/rational.hpp"

namespace osculant::exactalg {

// Dense univariate polynomial, coefficients lowest degree first.
// K must provide ring arithmetic; the zero polynomial has an empty
// coefficient vector.
template <class K>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return {}; }
    static Poly constant(K v) {
        Poly p;
        if (!coeff_is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }
    // t - a, then chained multiplication builds from_roots.
    static Poly linear_root(const K& a) { return Poly{K(-a), coeff_one((const K*)nullptr)}; }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention here
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& operator[](size_t i) const { return c_[i]; }
    K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const K& leading() const { return c_.back(); }

    void set_coeff(size_t i, K v) {
        if (i >= c_.size()) c_.resize(i + 1, K(0));
        c_[i] = std::move(v);
        trim();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const K& s) const {
        if (coeff_is_zero(s)) return {};
        Poly r = *this;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<K> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Poly(std::move(r));
    }

    K evaluate(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Division with remainder. Requires an invertible leading coefficient,
    // which is all we ever divide by (fields, or monic divisors over a ring).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw domain_error("polynomial division by zero");
        Poly rem = a;
        Poly quot;
        const long db = b.degree();
        while (!rem.is_zero() && rem.degree() >= db) {
            const long shift = rem.degree() - db;
            K q = rem.leading() / b.leading();
            quot.set_coeff(static_cast<size_t>(shift), q);
            // rem -= q * t^shift * b
            for (long i = 0; i <= db; ++i)
                rem.add_at(static_cast<size_t>(i + shift), -(q * b.c_[static_cast<size_t>(i)]));
            rem.trim();
        }
        return {quot, rem};
    }

    std::string to_text(const std::string& var = "t") const;

  private:
    void add_at(size_t i, K v) {
        if (i >= c_.size()) c_.resize(i + 1, K(0));
        c_[i] += v;
    }
    void trim() {
        while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

using UniPoly = Poly<Rational>;
using GaussUniPoly = Poly<GaussianRational>;

UniPoly unipoly_from_roots(const std::vector<Rational>& roots);
UniPoly monic(const UniPoly& p);
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Euclidean gcd over any coefficient field, monic result.
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r.is_zero() ? r : r.scaled(coeff_one((const K*)nullptr) / r.leading());
    }
    if (a.is_zero()) return a;
    return a.scaled(coeff_one((const K*)nullptr) / a.leading());
}

// p / gcd(p, p'), monic. Same distinct roots as p, all simple.
UniPoly squarefree_part(const UniPoly& p);

bool is_squarefree(const UniPoly& p);

// Number of distinct real roots via sign variations of the Sturm
// sequence at -inf and +inf (leading-coefficient signs only, no
// numeric evaluation). Input must be squarefree and nonzero.
int sturm_count_real_roots(const UniPoly& p);

// Largest e with (t - a)^e dividing p.
int vanishing_order(const UniPoly& p, const Rational& a);

std::string to_text(const UniPoly& p, const std::string& var = "t");

template <class K>
std::string Poly<K>::to_text(const std::string& var) const {
    using exactalg::to_string;
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (coeff_is_zero(c_[i])) continue;
        std::string coef = to_string(c_[i]);
        if (!out.empty()) {
            if (!coef.empty() && coef[0] == '-') {
                out += " - ";
                coef = coef.substr(1);
            } else {
                out += " + ";
            }
        }
        if (i == 0) {
            out += coef;
        } else {
            if (coef == "1")
                ;
            else if (coef == "-1")
                out += "-";
            else
                out += coef + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace osculant::exactalg
