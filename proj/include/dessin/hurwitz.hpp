#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dessin/characters.hpp"
#include "dessin/partitions.hpp"
#include "dessin/vpoly.hpp"

namespace dessin {

enum class Basis { schur, powersum };

// Degree-graded map Partition -> VPoly in either the Schur or the power-sum
// basis. The degree grading carries the bookkeeping power s^d structurally;
// there is no symbolic s variable anywhere.
class GradedSeries {
public:
    GradedSeries(Basis basis, int arity, int truncation);

    Basis basis() const { return basis_; }
    int arity() const { return arity_; }
    int truncation() const { return truncation_; }

    const std::map<Partition, VPoly>& slice(int d) const;
    // Adds into the coefficient of the index partition (degree = |index|);
    // terms beyond the truncation are dropped.
    void add(const Partition& index, const VPoly& coeff);
    void set(const Partition& index, VPoly coeff);
    VPoly coefficient(const Partition& index) const;

    friend bool operator==(const GradedSeries& a, const GradedSeries& b);

private:
    Basis basis_;
    int arity_;
    int truncation_;
    std::vector<std::map<Partition, VPoly>> slices_;
};

// Ordered list of ramification profiles, all partitions of a common d >= 1.
struct RamificationProfile {
    std::vector<Partition> profiles;

    explicit RamificationProfile(std::vector<Partition> ps);
    int degree() const { return profiles.front().size(); }
    int count() const { return static_cast<int>(profiles.size()); }
};

// --- permutations (images 0..d-1) ---
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm compose(const Perm& a, const Perm& b);  // (a.b)(x) = a(b(x))
Perm inverse(const Perm& a);
Partition cycle_type(const Perm& a);
// All permutations of cycle type mu, deterministic order.
std::vector<Perm> conjugacy_class(const Partition& mu);
// Does the group generated by the given permutations act transitively?
bool acts_transitively(const std::vector<Perm>& gens, int d);

// Weighted tuple counts (1/d! times the number of tuples with product e and
// the prescribed cycle types), by direct enumeration. The last factor is
// forced as the inverse of the product of the others. Degrees above the
// bound are refused.
Rational oracle_disconnected(const RamificationProfile& rp, int bound = 6, int jobs = 0);
// Same, restricted to tuples generating a transitive subgroup.
Rational oracle_connected(const RamificationProfile& rp, int bound = 6, int jobs = 0);

// Character-sum route for the disconnected count.
Rational burnside_disconnected(const RamificationProfile& rp, const CharTable& table);

// Genus solved from 2g - 2 = d(m-2) - sum of profile lengths; nullopt when
// half-integral or negative (the correlator vanishes).
std::optional<long long> riemann_hurwitz_genus(const RamificationProfile& rp);
std::optional<long long> riemann_hurwitz_genus(int r, const std::vector<int>& k, const Partition& mu);

// --- formal series in the p-variables (powersum basis) ---
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_log(const GradedSeries& g);  // needs degree-0 coefficient 1
GradedSeries series_exp(const GradedSeries& g);  // needs degree-0 coefficient 0

// Correlator engine: character tables, per-eta inner sums, and the log-series
// bridge between disconnected and connected correlators, all memoized. Not
// thread-safe; internal builds parallelize on their own.
class CorrelatorEngine {
public:
    explicit CorrelatorEngine(const CharCache* cache = nullptr, int jobs = 0);

    const CharTable& table(int d);

    // sum over partitions nu of d with l(nu) = len of chi^eta(C_nu)/z_nu
    Rational inner_sum(int d, int eta_index, int len);

    // N^bullet_{k_1..k_r}(mu); zero when some k_i is outside [1, |mu|].
    Rational disconnected_correlator(int r, const std::vector<int>& k, const Partition& mu);

    // sum_k N^bullet_k(mu) prod v_i^{k_i} as a VPoly in r variables
    VPoly disconnected_generating(int r, const Partition& mu);

    // Power-sum series of the partition function up to degree D.
    GradedSeries disconnected_series(int r, int D);

    // log of the above, memoized per (r, D)
    const GradedSeries& log_series(int r, int D);

    // N^circ_{k_1..k_r}(mu) via the log route.
    Rational connected_correlator(int r, const std::vector<int>& k, const Partition& mu);

    // coefficient of p_mu in log Z = sum_k N^circ_k(mu) prod v_i^{k_i}
    VPoly connected_generating(int r, const Partition& mu);

private:
    const CharCache* cache_;
    int jobs_;
    std::map<int, CharTable> tables_;
    std::map<int, std::vector<std::map<int, Rational>>> inner_;
    std::map<std::pair<int, int>, GradedSeries> logs_;
};

}  // namespace dessin
