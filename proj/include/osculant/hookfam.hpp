#pragma once

#include "osculant/problem.hpp"
#include "osculant/solve.hpp"

namespace osculant::hookfam {

using combinat::Partition;
using exactalg::Integer;
using exactalg::MultiPoly;
using exactalg::PolyMatrix;
using exactalg::Rational;
using exactalg::UniPoly;
using schubert::OsculatingInstance;
using schubert::OsculationPoint;

// The one-per-Grassmannian family: the hook-complement condition at
// infinity and n-1 hypersurface conditions at finite points.
struct HookInstance {
    int k = 0;
    int n = 0;
    std::vector<OsculationPoint> points; // n-1 distinct finite points, conjugation-closed
    UniPoly f;                           // prod (t - t_i), rational coefficients

    HookInstance(int k_, int n_, std::vector<OsculationPoint> pts);

    // the corresponding osculating instance, condition at infinity first
    OsculatingInstance instance() const;
};

// nu(k, n, r) with r the number of real roots of f'; rejects a
// non-squarefree derivative.
Integer predicted_real_count(const HookInstance& instance);

// A monic factor pair g*h of the normalized derivative.
struct FactorizationPair {
    UniPoly g; // monic, degree k-1
    UniPoly h; // monic, degree n-k-1
};

// The k x n parameterization matrix with constants c_i =
// (-1)^(n-k-i+1) (n-k-i)!. Parameter conventions follow the
// closed-form determinant identity: gcoeffs has length n-k (top row,
// leading 1 fixed), hcoeffs has length k (subdiagonal ratios, leading 1
// fixed, all others nonzero).
PolyMatrix H_matrix(const Rational& f0, const std::vector<Rational>& gcoeffs,
                    const std::vector<Rational>& hcoeffs);

// Symbolic check of the determinant identity
//   det[H(f,g,h); F_{n-k}(t)] = (-1)^(k(n-k)) (sum t^(i+j+1)/(i+j+1) g_i h_j + f0)
// after clearing the h denominators. `perturb` flips one constant as a
// negative control.
bool verify_det_identity(int k, int n, bool perturb = false);

// Coefficientwise system for g*h = f'/(n-1) with monic g of degree k-1
// and monic h of degree n-k-1: n-2 equations in the n-2 unknown
// low-order coefficients.
groebner::PolySystem direct_system(const HookInstance& instance);

// Solve the factorization system and count; expected complex count is
// binomial(n-2, k-1).
groebner::SolveReport solve_direct(const HookInstance& instance,
                                   const groebner::SolveOptions& options = {});

// Counts of ordered monic degree-m factorizations of a squarefree real
// polynomial of degree 2m, derived combinatorially from its number of
// real roots: (nonreal pairs, self-conjugate pairs).
struct FactorizationCensus {
    Integer total;
    Integer real_count;
    Integer nonreal_count;
    Integer self_conjugate_count;
};

FactorizationCensus mod4_factorization_census(const UniPoly& f, int m);

} // namespace osculant::hookfam
