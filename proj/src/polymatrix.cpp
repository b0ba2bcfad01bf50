#include "osculant/polymatrix.hpp"

#include <unordered_map>

namespace osculant::exactalg {

namespace {

// Cofactor expansion along the first remaining row, memoized on the
// bitmask of still-active columns. The minors of a fixed row prefix are
// shared heavily between expansion branches.
template <class K>
MPoly<K> cofactor_det(const PolyMatrixT<K>& m, const std::vector<size_t>& rows,
                      const std::vector<size_t>& cols) {
    const size_t n = rows.size();
    if (n == 0) return MPoly<K>::constant(0, K(1));
    const size_t nvars = m.at(rows[0], cols[0]).nvars();
    if (n > 64) throw domain_error("determinant: selection too large");

    std::unordered_map<uint64_t, MPoly<K>> memo;
    // det of rows[level..] on the columns present in mask
    std::function<MPoly<K>(size_t, uint64_t)> rec = [&](size_t level, uint64_t mask) -> MPoly<K> {
        if (level == n) return MPoly<K>::constant(nvars, K(1));
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        MPoly<K> acc(nvars);
        int parity = 0;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask & (uint64_t(1) << j))) continue;
            const MPoly<K>& e = m.at(rows[level], cols[j]);
            if (!e.is_zero()) {
                MPoly<K> sub = rec(level + 1, mask & ~(uint64_t(1) << j));
                MPoly<K> term = e * sub;
                if (parity % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++parity;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    uint64_t full = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    return rec(0, full);
}

// Bareiss fraction-free elimination on a constant selection.
template <class K>
MPoly<K> bareiss_det(const PolyMatrixT<K>& m, const std::vector<size_t>& rows,
                     const std::vector<size_t>& cols) {
    const size_t n = rows.size();
    const size_t nvars = n ? m.at(rows[0], cols[0]).nvars() : 0;
    std::vector<std::vector<K>> a(n, std::vector<K>(n, K(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m.at(rows[i], cols[j]).constant_value();

    K prev(1);
    int swaps = 0;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (coeff_is_zero(a[k][k])) {
            size_t piv = k + 1;
            while (piv < n && coeff_is_zero(a[piv][k])) ++piv;
            if (piv == n) return MPoly<K>::constant(nvars, K(0));
            std::swap(a[k], a[piv]);
            ++swaps;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    K det = n ? a[n - 1][n - 1] : K(1);
    if (swaps % 2) det = -det;
    return MPoly<K>::constant(nvars, det);
}

template <class K>
MPoly<K> minor_det_impl(const PolyMatrixT<K>& m, const std::vector<size_t>& rowset,
                        const std::vector<size_t>& colset) {
    if (rowset.size() != colset.size()) throw domain_error("minor: non-square selection");
    for (size_t r : rowset)
        if (r >= m.rows()) throw domain_error("minor: row out of bounds");
    for (size_t c : colset)
        if (c >= m.cols()) throw domain_error("minor: column out of bounds");

    bool constant = true;
    for (size_t r : rowset)
        for (size_t c : colset)
            if (!m.at(r, c).is_constant()) {
                constant = false;
                break;
            }
    if (constant) return bareiss_det(m, rowset, colset);
    return cofactor_det(m, rowset, colset);
}

template <class K>
size_t rank_impl(const PolyMatrixT<K>& m) {
    std::vector<std::vector<K>> a(m.rows(), std::vector<K>(m.cols(), K(0)));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            if (!m.at(i, j).is_constant()) throw domain_error("rank: non-constant entry");
            a[i][j] = m.at(i, j).constant_value();
        }
    size_t rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && coeff_is_zero(a[piv][col])) ++piv;
        if (piv == m.rows()) continue;
        std::swap(a[row], a[piv]);
        for (size_t i = row + 1; i < m.rows(); ++i) {
            if (coeff_is_zero(a[i][col])) continue;
            K f = a[i][col] / a[row][col];
            for (size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

MultiPoly minor_det(const PolyMatrix& m, const std::vector<size_t>& rowset,
                    const std::vector<size_t>& colset) {
    return minor_det_impl(m, rowset, colset);
}
GaussMultiPoly minor_det(const GaussPolyMatrix& m, const std::vector<size_t>& rowset,
                         const std::vector<size_t>& colset) {
    return minor_det_impl(m, rowset, colset);
}

namespace {
template <class K>
MPoly<K> det_impl(const PolyMatrixT<K>& m) {
    if (m.rows() != m.cols()) throw domain_error("determinant: matrix is not square");
    std::vector<size_t> idx(m.rows());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return minor_det_impl(m, idx, idx);
}
} // namespace

MultiPoly determinant(const PolyMatrix& m) { return det_impl(m); }
GaussMultiPoly determinant(const GaussPolyMatrix& m) { return det_impl(m); }

size_t constant_rank(const GaussPolyMatrix& m) { return rank_impl(m); }
size_t constant_rank(const PolyMatrix& m) { return rank_impl(m); }

} // namespace osculant::exactalg
