#include "osculant/rational.hpp"

namespace osculant::exactalg {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw domain_error("empty rational literal");
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw domain_error("bad rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Integer binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string to_string(const GaussianRational& z) {
    if (z.im == 0) return z.re.get_str();
    Rational a = abs(z.im);
    return z.re.get_str() + (z.im > 0 ? "+" : "-") + a.get_str() + "*i";
}

} // namespace osculant::exactalg
