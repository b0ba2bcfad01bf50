#pragma once

#include <vector>

#include "osculant/multipoly.hpp"

namespace osculant::exactalg {

// Rectangular grid of multivariate polynomials.
template <class K>
class PolyMatrixT {
  public:
    PolyMatrixT() : rows_(0), cols_(0) {}
    PolyMatrixT(size_t rows, size_t cols, size_t nvars)
        : rows_(rows), cols_(cols), data_(rows * cols, MPoly<K>(nvars)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    MPoly<K>& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const MPoly<K>& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    bool all_constant() const {
        for (const auto& p : data_)
            if (!p.is_constant()) return false;
        return true;
    }

    // Stack two matrices with the same column count; entries are
    // widened to the larger variable list.
    static PolyMatrixT stacked(const PolyMatrixT& top, const PolyMatrixT& bottom) {
        if (top.cols() != bottom.cols()) throw domain_error("stack: column mismatch");
        size_t nv = 0;
        if (top.rows() && top.cols()) nv = std::max(nv, top.at(0, 0).nvars());
        if (bottom.rows() && bottom.cols()) nv = std::max(nv, bottom.at(0, 0).nvars());
        PolyMatrixT r(top.rows() + bottom.rows(), top.cols(), nv);
        for (size_t i = 0; i < top.rows(); ++i)
            for (size_t j = 0; j < top.cols(); ++j) r.at(i, j) = top.at(i, j).with_nvars(nv);
        for (size_t i = 0; i < bottom.rows(); ++i)
            for (size_t j = 0; j < bottom.cols(); ++j)
                r.at(top.rows() + i, j) = bottom.at(i, j).with_nvars(nv);
        return r;
    }

  private:
    size_t rows_, cols_;
    std::vector<MPoly<K>> data_;
};

using PolyMatrix = PolyMatrixT<Rational>;
using GaussPolyMatrix = PolyMatrixT<GaussianRational>;

// Exact determinant of the square selection rowset x colset.
// Symbolic entries go through cofactor expansion with memoization on
// column subsets; all-constant matrices go through Bareiss elimination.
MultiPoly minor_det(const PolyMatrix& m, const std::vector<size_t>& rowset,
                    const std::vector<size_t>& colset);
GaussMultiPoly minor_det(const GaussPolyMatrix& m, const std::vector<size_t>& rowset,
                         const std::vector<size_t>& colset);

MultiPoly determinant(const PolyMatrix& m);
GaussMultiPoly determinant(const GaussPolyMatrix& m);

// Rank of a constant matrix by exact elimination.
size_t constant_rank(const GaussPolyMatrix& m);
size_t constant_rank(const PolyMatrix& m);

} // namespace osculant::exactalg
