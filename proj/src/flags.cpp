#include "osculant/flags.hpp"

#include <functional>

namespace osculant::schubert {

using exactalg::GaussianRational;
using exactalg::GaussMultiPoly;
using exactalg::Rational;

GaussPolyMatrix flag_matrix(const OsculationPoint& t, int i, int n) {
    if (i < 1 || i > n) throw domain_error("flag_matrix: need 1 <= i <= n");
    GaussPolyMatrix m(static_cast<size_t>(i), static_cast<size_t>(n), 0);
    if (t.is_infinity()) {
        // span{e_(n+1-i), ..., e_n}
        for (int a = 1; a <= i; ++a)
            m.at(static_cast<size_t>(a - 1), static_cast<size_t>(n - i + a - 1)) =
                GaussMultiPoly::constant(0, GaussianRational(1));
        return m;
    }
    const GaussianRational& tv = t.value();
    for (int a = 1; a <= i; ++a) {
        GaussianRational power(1);
        for (int b = a; b <= n; ++b) {
            Rational fact(exactalg::factorial(static_cast<unsigned long>(b - a)));
            m.at(static_cast<size_t>(a - 1), static_cast<size_t>(b - 1)) =
                GaussMultiPoly::constant(0, power * GaussianRational(Rational(1) / fact));
            power *= tv;
        }
    }
    return m;
}

template <class K>
exactalg::Poly<K> wronskian(const exactalg::PolyMatrixT<K>& m, int n) {
    const size_t k = m.rows();
    if (m.cols() != static_cast<size_t>(n)) throw domain_error("wronskian: column count != n");
    if (!m.all_constant()) throw domain_error("wronskian: matrix must be constant");

    // rows as polynomials under e_b <-> (-1)^(b-1) t^(n-b)/(n-b)!; this
    // orientation is the one that sends the span of F_k(t0) to
    // c (t - t0)^(k(n-k))
    std::vector<exactalg::Poly<K>> rows;
    for (size_t a = 0; a < k; ++a) {
        std::vector<K> coeffs(static_cast<size_t>(n), K(0));
        for (int b = 1; b <= n; ++b) {
            Rational fact(exactalg::factorial(static_cast<unsigned long>(n - b)));
            K c = m.at(a, static_cast<size_t>(b - 1)).constant_value() / K(Rational(fact));
            if ((b - 1) % 2 != 0) c = -c;
            coeffs[static_cast<size_t>(n - b)] = c;
        }
        rows.emplace_back(std::move(coeffs));
    }

    if (exactalg::constant_rank(m) != k) throw domain_error("wronskian: matrix is rank-deficient");

    std::vector<std::vector<exactalg::Poly<K>>> w(k, std::vector<exactalg::Poly<K>>(k));
    for (size_t j = 0; j < k; ++j) {
        w[0][j] = rows[j];
        for (size_t d = 1; d < k; ++d) w[d][j] = w[d - 1][j].derivative();
    }
    std::function<exactalg::Poly<K>(std::vector<size_t>, size_t)> det =
        [&](std::vector<size_t> cols, size_t row) -> exactalg::Poly<K> {
        if (cols.empty()) return exactalg::Poly<K>::constant(K(1));
        exactalg::Poly<K> acc;
        for (size_t idx = 0; idx < cols.size(); ++idx) {
            std::vector<size_t> rest;
            for (size_t x = 0; x < cols.size(); ++x)
                if (x != idx) rest.push_back(cols[x]);
            exactalg::Poly<K> term = w[row][cols[idx]] * det(rest, row + 1);
            if (idx % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    };
    std::vector<size_t> cols(k);
    for (size_t i = 0; i < k; ++i) cols[i] = i;
    return det(cols, 0);
}

template exactalg::Poly<exactalg::Rational>
wronskian(const exactalg::PolyMatrixT<exactalg::Rational>& m, int n);
template exactalg::Poly<exactalg::GaussianRational>
wronskian(const exactalg::PolyMatrixT<exactalg::GaussianRational>& m, int n);

} // namespace osculant::schubert
