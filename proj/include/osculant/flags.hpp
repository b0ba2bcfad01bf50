#pragma once

#include "osculant/points.hpp"
#include "osculant/polymatrix.hpp"
#include "osculant/unipoly.hpp"

namespace osculant::schubert {

using exactalg::GaussPolyMatrix;
using exactalg::GaussUniPoly;
using exactalg::UniPoly;

// The i x n matrix spanning the i-dimensional osculating subspace at t:
// entry (a,b) = t^(b-a)/(b-a)! for b >= a, zero otherwise. At infinity
// the rows are the last i standard basis vectors.
GaussPolyMatrix flag_matrix(const OsculationPoint& t, int i, int n);

// The rows of M, read against the basis e_b <-> t^(b-1)/(b-1)!, span a
// k-plane of polynomials; this is the determinant of its k x k Wronski
// matrix. M must be constant with rank k.
template <class K>
exactalg::Poly<K> wronskian(const exactalg::PolyMatrixT<K>& m, int n);

extern template exactalg::Poly<exactalg::Rational>
wronskian(const exactalg::PolyMatrixT<exactalg::Rational>& m, int n);
extern template exactalg::Poly<exactalg::GaussianRational>
wronskian(const exactalg::PolyMatrixT<exactalg::GaussianRational>& m, int n);

} // namespace osculant::schubert
