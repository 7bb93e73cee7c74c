#pragma once

#include <vector>

#include "dessin/hurwitz.hpp"
#include "dessin/vpoly.hpp"

namespace dessin {

// Coefficients a_1..a_{r+1} of the degree-raising operator, determined by
// sum_k k a_k(v) prod_{j=0}^{k-2}(x-j) = prod_i (x+v_i).
struct OperatorSpec {
    int r = 0;
    std::vector<VPoly> a;  // a[k-1] = a_k, arity r

    const VPoly& coeff(int k) const { return a.at(k - 1); }
};

// Closed-form route: a_k = ((-1)^{k-1}/k!) e_r + (1/k) sum_j (...) e_j.
OperatorSpec a_coeffs_closed(int r);

// Independent triangular route: evaluate the defining relation at x = 0..r.
OperatorSpec a_coeffs_from_relation(int r);

// prod_{i=1..r} (v_i + c)
VPoly content_factor(int r, int c);

// Degree-raising operator of order k on the Schur basis: each s_mu maps to
// sum over addable boxes of k*[c(box)]_{k-1} s_{mu+box}.
GradedSeries apply_p_minus1(int k, const GradedSeries& g);

// Combined operator sum_k a_k P^{(k)}: each s_mu maps to
// sum over addable boxes of prod_i (c(box)+v_i) s_{mu+box}, applied directly
// via the content product (apply_p_minus1 is the cross-check route).
GradedSeries apply_combined(const OperatorSpec& spec, const GradedSeries& g);

// multiply every coefficient by a fixed polynomial
GradedSeries series_scale(const GradedSeries& g, const VPoly& factor);

// Partition function in the Schur basis, built by exponentiating the combined
// operator degree by degree: slice d+1 = (operator applied to slice d)/(d+1).
GradedSeries z_flow(int r, int D);

// Same series assembled termwise: coefficient of s_eta is
// principal_eval(eta) * prod_box prod_i (v_i + c(box)).
GradedSeries z_direct(int r, int D);

// Expand every s_eta through the character table and collect on p_mu.
GradedSeries to_powersum_basis(const GradedSeries& g, CorrelatorEngine& engine);

// Arity-1 flow exp(s(L_{-1} + v t_1))(1) built from the two box-adding
// actions (weight 1 and weight c(box)); degree-d coefficient of s_mu equals
// hook_content_eval(mu).
GradedSeries virasoro_flow(int D);

}  // namespace dessin
