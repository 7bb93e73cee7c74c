#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dessin/partitions.hpp"
#include "dessin/vpoly.hpp"

namespace dessin {

// Truncated table of affine coordinates: entry(n,m) with n+m+1 <= D equals
// (-1)^n / ((m+n+1) m! n!) * prod_i prod_{j=-n}^{m} (v_i + j), the grading
// n+m+1 carrying the suppressed power of s.
struct AffineMatrix {
    int r = 0;
    int D = 0;
    std::map<std::pair<int, int>, VPoly> entries;

    const VPoly& entry(int n, int m) const;
};

AffineMatrix affine_coordinates(int r, int D);

// prod_{i=1..r} prod_{j=lo..hi} (v_i + j); empty range gives 1.
VPoly shifted_product(int r, int lo, int hi);

// Connected n-point generating polynomial sum_k N^circ_k(mu) prod v_i^{k_i},
// extracted from the affine-coordinate kernel: cycle sums over the l(mu)
// variables, coefficient of prod z_i^{-mu_i-1}, divided by z_mu.
VPoly connected_npoint(const Partition& mu, const AffineMatrix& am);

// Closed 1-point form: sum over k+l = n-1 of the diagonal kernel terms.
VPoly one_point_generating(int n, int r);

// Closed 2-point form (kernel-difference terms minus the product term),
// divided by n1 n2 (1 + delta_{n1,n2}).
VPoly two_point_generating(int n1, int n2, int r);

// Single-coefficient fast paths: the products factor per variable, so a
// monomial coefficient is a product of univariate coefficients.
Rational one_point_coefficient(int n, int r, const std::vector<int>& exps);
Rational two_point_coefficient(int n1, int n2, int r, const std::vector<int>& exps);

}  // namespace dessin
