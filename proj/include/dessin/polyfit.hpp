#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessin/hurwitz.hpp"
#include "dessin/kp.hpp"
#include "dessin/vpoly.hpp"

namespace dessin {

// Expansion of a fitted polynomial over binomial coefficients: value(n) =
// sum_d coeffs[d] * C(n,d), or the product basis C(n1,d1) C(n2,d2) in two
// variables. Obtained from iterated forward differences at 0.
struct BinomialExpansion {
    int dims = 1;
    std::map<std::vector<int>, Rational> coeffs;

    bool integral() const;
    bool nonnegative() const;
    Rational eval(const std::vector<long long>& x) const;
};

struct FitReport {
    bool ok = false;
    std::string message;
    VPoly fitted;          // arity = number of fit variables
    int degree = -1;       // total degree of the fitted polynomial
    std::vector<bool> holdout_ok;
    std::optional<BinomialExpansion> binomial;
    std::optional<bool> nonneg_integral;
    // points witnessing a fit failure (argument tuple, value)
    std::vector<std::pair<std::vector<long long>, Rational>> offending;
};

// Exact minimal-degree interpolation through the given points (distinct
// integer arguments) by divided differences. If max_degree >= 0 and the data
// needs a higher degree, the report flags failure instead of throwing:
// non-polynomiality is a result, not an error.
FitReport newton_fit(const std::vector<std::pair<long long, Rational>>& points,
                     int max_degree = -1);

BinomialExpansion binomial_expansion(const VPoly& poly);     // arity 1
BinomialExpansion binomial_expansion_2d(const VPoly& poly);  // arity 2

// Fits n -> n! N^bullet_{n-lambda_1..n-lambda_k,n..n}((mu,1^{n-|mu|})).
// Degree is bounded by |mu| + 2|lambda|; the minimum sample count is that
// bound plus 2. Holdout points are never used in the fit.
FitReport stanley_fit(int r, const Partition& lambda, const Partition& mu, int samples,
                      int holdout, CorrelatorEngine& engine);

// Fits the conjectural polynomial for z_mu N^circ over 1- or 2-part mu.
// Degree policy: start from the genus-motivated guess and raise it until the
// held-out points verify exactly; values come from the affine-coordinate
// closed forms unless a log-route engine is supplied.
FitReport conjecture_fit(int r, const std::vector<int>& k, int length, int nmax, int holdout,
                         CorrelatorEngine* log_engine = nullptr);

// True when the genus is a nonnegative integer (the correlator may be
// nonzero); used to skip known-zero samples.
bool vanishing_filter(int r, const std::vector<int>& k, const Partition& mu);

}  // namespace dessin
