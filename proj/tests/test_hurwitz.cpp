#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dessin/hurwitz.hpp"

using namespace dessin;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

RamificationProfile RP(std::vector<Partition> ps) { return RamificationProfile(std::move(ps)); }

// sum over length-constrained profile tuples of the tuple-count oracle
Rational oracle_correlator(int r, const std::vector<int>& k, const Partition& mu, bool connected) {
    const int d = mu.size();
    for (int ki : k)
        if (ki < 1 || ki > d) return Rational(0);
    std::vector<std::vector<Partition>> choices;
    for (int ki : k) choices.push_back(partitions_of(d, ki));
    Rational total(0);
    std::vector<Partition> tuple(r);
    std::function<void(int)> rec = [&](int level) {
        if (level == r) {
            std::vector<Partition> profiles = tuple;
            profiles.push_back(mu);
            const RamificationProfile rp(profiles);
            total += connected ? oracle_connected(rp) : oracle_disconnected(rp);
            return;
        }
        for (const auto& p : choices[level]) {
            tuple[level] = p;
            rec(level + 1);
        }
    };
    rec(0);
    return total;
}
}

TEST_CASE("permutation primitives") {
    const Perm a{1, 2, 0};  // 3-cycle
    CHECK(cycle_type(a) == P({3}));
    CHECK(compose(a, inverse(a)) == identity_perm(3));
    CHECK(cycle_type(identity_perm(4)) == P({1, 1, 1, 1}));
    // class sizes: |C_mu| = d!/z_mu, and every member has the right type
    for (int d = 1; d <= 6; ++d)
        for (const auto& mu : partitions_of(d)) {
            const auto cls = conjugacy_class(mu);
            CHECK(Int(cls.size()) == factorial(d) / z_factor(mu));
            for (const auto& g : cls) CHECK(cycle_type(g) == mu);
        }
}

TEST_CASE("transitivity") {
    CHECK(acts_transitively({identity_perm(1)}, 1));
    CHECK_FALSE(acts_transitively({identity_perm(2)}, 2));
    CHECK(acts_transitively({{1, 0}}, 2));
    CHECK(acts_transitively({{1, 0, 2}, {0, 2, 1}}, 3));
    CHECK_FALSE(acts_transitively({{1, 0, 2}}, 3));
}

TEST_CASE("tuple-count oracle on tiny cases") {
    CHECK(oracle_disconnected(RP({P({2}), P({2})})) == make_rational(1, 2));
    CHECK(oracle_connected(RP({P({2}), P({2})})) == make_rational(1, 2));
    CHECK(oracle_disconnected(RP({P({1, 1}), P({1, 1})})) == make_rational(1, 2));
    CHECK(oracle_connected(RP({P({1, 1}), P({1, 1})})) == 0);
    CHECK(oracle_disconnected(RP({P({1})})) == 1);
    CHECK(oracle_connected(RP({P({1})})) == 1);
    // two products of 3-cycle pairs hit a 3-cycle type
    CHECK(oracle_disconnected(RP({P({3}), P({3}), P({3})})) == make_rational(1, 3));
    CHECK(oracle_disconnected(RP({P({3}), P({2, 1}), P({2, 1})})) ==
          oracle_correlator(2, {2, 2}, P({3}), false));
}

TEST_CASE("oracle refuses degrees above the bound") {
    CHECK_THROWS_AS(oracle_disconnected(RP({P({7}), P({7})})), size_error);
    CHECK_NOTHROW(oracle_disconnected(RP({P({7}), P({7})}), 7));
}

TEST_CASE("burnside equals the oracle for all small profile tuples") {
    for (int d = 1; d <= 4; ++d) {
        const CharTable table = char_table(d);
        const auto parts = partitions_of(d);
        for (const auto& p1 : parts)
            for (const auto& p2 : parts) {
                const RamificationProfile two({p1, p2});
                CHECK(burnside_disconnected(two, table) == oracle_disconnected(two));
                for (const auto& p3 : parts) {
                    const RamificationProfile three({p1, p2, p3});
                    CHECK(burnside_disconnected(three, table) == oracle_disconnected(three));
                }
            }
    }
}

TEST_CASE("riemann-hurwitz bookkeeping") {
    // single unconstrained branch point over (n): 2g + k = 1
    CHECK(riemann_hurwitz_genus(1, {1}, P({4})) == 0);
    CHECK_FALSE(riemann_hurwitz_genus(1, {2}, P({4})).has_value());
    CHECK_FALSE(riemann_hurwitz_genus(1, {3}, P({4})).has_value());
    // genus-0 family
    for (int n = 3; n <= 8; ++n) CHECK(riemann_hurwitz_genus(2, {n - 1, 2}, P({n})) == 0);
    // two-part: 2g - 2 = k1 - k2 - 2
    for (int n1 = 2; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) {
            const Partition mu({n1, n2});
            CHECK(riemann_hurwitz_genus(2, {n1 + n2 - 1, 1}, mu) == 0);
            CHECK_FALSE(riemann_hurwitz_genus(2, {n1 + n2 - 1, 2}, mu).has_value());
        }
    // profile form
    CHECK(riemann_hurwitz_genus(RP({P({2}), P({2})})) == 0);
    CHECK_FALSE(riemann_hurwitz_genus(RP({P({2}), P({2}), P({2})})).has_value());
}

TEST_CASE("disconnected correlators against the oracle") {
    CorrelatorEngine engine;
    // profile lengths pin the inner sums: k=(1,2) over (2) hits ((2),(1,1),(2))
    CHECK(engine.disconnected_correlator(2, {1, 2}, P({2})) == make_rational(1, 2));
    CHECK(engine.disconnected_correlator(2, {1, 2}, P({2})) ==
          oracle_disconnected(RP({P({2}), P({1, 1}), P({2})})));
    // k=(1,1) over (2) is the all-3-cycle-type tuple count, which is empty
    CHECK(engine.disconnected_correlator(2, {1, 1}, P({2})) == 0);
    CHECK(oracle_disconnected(RP({P({2}), P({2}), P({2})})) == 0);
    // identity-only covering: weight 1/d!
    for (int d = 1; d <= 5; ++d) {
        std::vector<int> parts(d, 1);
        CHECK(engine.disconnected_correlator(1, {d}, P(parts)) == make_rational(1, factorial(d)));
    }
    // out-of-range preimage counts vanish
    CHECK(engine.disconnected_correlator(2, {3, 1}, P({2})) == 0);
    CHECK(engine.disconnected_correlator(2, {1, 5}, P({2, 1})) == 0);
    // full sweep r = 2, d <= 4
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (int k1 = 1; k1 <= d; ++k1)
                for (int k2 = 1; k2 <= d; ++k2)
                    CHECK(engine.disconnected_correlator(2, {k1, k2}, mu) ==
                          oracle_correlator(2, {k1, k2}, mu, false));
    // r = 1 sweep
    for (int d = 1; d <= 5; ++d)
        for (const auto& mu : partitions_of(d))
            for (int k1 = 1; k1 <= d; ++k1)
                CHECK(engine.disconnected_correlator(1, {k1}, mu) ==
                      oracle_correlator(1, {k1}, mu, false));
}

TEST_CASE("disconnected series coefficients") {
    CorrelatorEngine engine;
    const GradedSeries z = engine.disconnected_series(2, 3);
    CHECK(z.coefficient(Partition()) == VPoly::constant(2, 1));
    CHECK(z.coefficient(P({1})) == VPoly::monomial(2, {1, 1}, 1));
    // coefficient of p_mu collects the k-graded correlators
    for (int d = 1; d <= 3; ++d)
        for (const auto& mu : partitions_of(d)) {
            VPoly expect(2);
            for (int k1 = 1; k1 <= d; ++k1)
                for (int k2 = 1; k2 <= d; ++k2)
                    expect.add_term({k1, k2}, engine.disconnected_correlator(2, {k1, k2}, mu));
            CHECK(z.coefficient(mu) == expect);
        }
}

TEST_CASE("series log and exp") {
    // log(1 + c p_1) to degree 2 = c p_1 - c^2/2 p_{1,1}
    GradedSeries g(Basis::powersum, 1, 2);
    g.set(Partition(), VPoly::constant(1, 1));
    const Rational c = make_rational(3, 7);
    g.set(P({1}), VPoly::constant(1, c));
    const GradedSeries lg = series_log(g);
    CHECK(lg.coefficient(P({1})) == VPoly::constant(1, c));
    CHECK(lg.coefficient(P({1, 1})) == VPoly::constant(1, -c * c / 2));
    CHECK(lg.coefficient(P({2})).is_zero());
    CHECK(series_exp(lg) == g);

    // exp(log Z) = Z on real partition-function series
    CorrelatorEngine engine;
    for (int r = 1; r <= 3; ++r) {
        const GradedSeries z = engine.disconnected_series(r, r == 3 ? 4 : 5);
        CHECK(series_exp(series_log(z)) == z);
    }

    // contract checks
    GradedSeries bad(Basis::powersum, 1, 1);
    CHECK_THROWS_AS(series_log(bad), std::invalid_argument);
    GradedSeries bad2(Basis::powersum, 1, 1);
    bad2.set(Partition(), VPoly::constant(1, 1));
    CHECK_THROWS_AS(series_exp(bad2), std::invalid_argument);
}

TEST_CASE("connected correlators") {
    CorrelatorEngine engine;
    CHECK(engine.connected_correlator(2, {1, 2}, P({2})) == make_rational(1, 2));
    CHECK(engine.connected_correlator(2, {1, 1}, P({1})) == 1);
    for (int n = 1; n <= 5; ++n) {
        CHECK(engine.connected_correlator(1, {2}, P({n})) == 0);
        if (n >= 2) CHECK(engine.connected_correlator(1, {3}, P({n})) == 0);
    }
    // against the transitive oracle: r <= 2, d <= 5
    for (int d = 1; d <= 5; ++d)
        for (const auto& mu : partitions_of(d))
            for (int k1 = 1; k1 <= d; ++k1) {
                CHECK(engine.connected_correlator(1, {k1}, mu) ==
                      oracle_correlator(1, {k1}, mu, true));
                for (int k2 = 1; k2 <= d; ++k2)
                    CHECK(engine.connected_correlator(2, {k1, k2}, mu) ==
                          oracle_correlator(2, {k1, k2}, mu, true));
            }
    // vanishing by genus parity
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d))
            for (int k1 = 1; k1 <= d; ++k1)
                for (int k2 = 1; k2 <= d; ++k2)
                    if (!riemann_hurwitz_genus(2, {k1, k2}, mu))
                        CHECK(engine.connected_correlator(2, {k1, k2}, mu) == 0);
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(RP({}), std::invalid_argument);
    CHECK_THROWS_AS(RP({P({2}), P({3})}), std::invalid_argument);
}
