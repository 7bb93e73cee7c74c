#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dessin/cutjoin.hpp"

using namespace dessin;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// e_j of the ambient arity-r ring scaled by a rational
VPoly e_combo(int r, const std::vector<std::pair<int, Rational>>& combo, const Rational& scale) {
    VPoly out(r);
    for (const auto& [j, c] : combo) out += elementary_symmetric(r, j) * c;
    return out * scale;
}

GradedSeries unit_schur(int r, int D, const Partition& mu) {
    GradedSeries g(Basis::schur, r, D);
    g.set(mu, VPoly::constant(r, 1));
    return g;
}
}

TEST_CASE("operator coefficients, closed form") {
    const OperatorSpec s1 = a_coeffs_closed(1);
    CHECK(s1.coeff(1) == VPoly::variable(1, 0));
    CHECK(s1.coeff(2) == VPoly::constant(1, make_rational(1, 2)));

    const OperatorSpec s2 = a_coeffs_closed(2);
    CHECK(s2.coeff(1) == VPoly::monomial(2, {1, 1}, 1));
    CHECK(s2.coeff(2) == e_combo(2, {{0, 1}, {1, 1}}, make_rational(1, 2)));
    CHECK(s2.coeff(3) == VPoly::constant(2, make_rational(1, 3)));

    const OperatorSpec s3 = a_coeffs_closed(3);
    CHECK(s3.coeff(1) == elementary_symmetric(3, 3));
    CHECK(s3.coeff(2) == e_combo(3, {{0, 1}, {1, 1}, {2, 1}}, make_rational(1, 2)));
    CHECK(s3.coeff(3) == e_combo(3, {{0, 3}, {1, 1}}, make_rational(1, 3)));
    CHECK(s3.coeff(4) == VPoly::constant(3, make_rational(1, 4)));
}

TEST_CASE("operator coefficients, triangular route and displayed tables") {
    for (int r = 1; r <= 8; ++r) {
        const OperatorSpec a = a_coeffs_closed(r);
        const OperatorSpec b = a_coeffs_from_relation(r);
        REQUIRE(a.a.size() == static_cast<std::size_t>(r + 1));
        REQUIRE(b.a.size() == a.a.size());
        for (int k = 1; k <= r + 1; ++k) CHECK(a.coeff(k) == b.coeff(k));
    }
    const OperatorSpec s4 = a_coeffs_from_relation(4);
    CHECK(s4.coeff(1) == elementary_symmetric(4, 4));
    CHECK(s4.coeff(2) == e_combo(4, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}, make_rational(1, 2)));
    CHECK(s4.coeff(3) == e_combo(4, {{0, 7}, {1, 3}, {2, 1}}, make_rational(1, 3)));
    CHECK(s4.coeff(4) == e_combo(4, {{0, 6}, {1, 1}}, make_rational(1, 4)));
    CHECK(s4.coeff(5) == VPoly::constant(4, make_rational(1, 5)));

    const OperatorSpec s5 = a_coeffs_from_relation(5);
    CHECK(s5.coeff(1) == elementary_symmetric(5, 5));
    CHECK(s5.coeff(2) == e_combo(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}, make_rational(1, 2)));
    CHECK(s5.coeff(3) == e_combo(5, {{0, 15}, {1, 7}, {2, 3}, {3, 1}}, make_rational(1, 3)));
    CHECK(s5.coeff(4) == e_combo(5, {{0, 25}, {1, 6}, {2, 1}}, make_rational(1, 4)));
    CHECK(s5.coeff(5) == e_combo(5, {{0, 10}, {1, 1}}, make_rational(1, 5)));
    CHECK(s5.coeff(6) == VPoly::constant(5, make_rational(1, 6)));
}

TEST_CASE("defining relation holds as a polynomial identity") {
    // sum_k k a_k(v) prod_{j<k-1}(x-j) = prod_i (x+v_i) in arity r+1 with x
    // as the extra variable
    for (int r = 1; r <= 5; ++r) {
        const OperatorSpec spec = a_coeffs_closed(r);
        const int arity = r + 1;
        auto embed = [&](const VPoly& p, int xpow) {
            VPoly out(arity);
            for (const auto& [e, c] : p.terms()) {
                Exponents big(arity, 0);
                big[0] = xpow;
                for (int i = 0; i < r; ++i) big[i + 1] = e[i];
                out.add_term(big, c);
            }
            return out;
        };
        VPoly lhs(arity);
        for (int k = 1; k <= r + 1; ++k) {
            // expand prod_{j=0}^{k-2}(x-j) in x
            VPoly xfac = VPoly::constant(arity, 1);
            for (int j = 0; j <= k - 2; ++j) {
                VPoly lin = VPoly::variable(arity, 0);
                lin.add_term(Exponents(arity, 0), Rational(-j));
                xfac *= lin;
            }
            VPoly emb = embed(spec.coeff(k), 0);
            lhs += emb * xfac * Rational(k);
        }
        VPoly rhs = VPoly::constant(arity, 1);
        for (int i = 1; i <= r; ++i) {
            VPoly lin = VPoly::variable(arity, 0);
            lin += VPoly::variable(arity, i);
            rhs *= lin;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("box-adding operator") {
    // order 1 on the empty diagram adds the single box
    GradedSeries g0 = unit_schur(1, 2, Partition());
    const GradedSeries r1 = apply_p_minus1(1, g0);
    CHECK(r1.coefficient(P({1})) == VPoly::constant(1, 1));
    // order 3 on the empty diagram kills the content-0 box
    CHECK(apply_p_minus1(3, g0).coefficient(P({1})).is_zero());
    // order 2 on a single box: contents 1 and -1
    GradedSeries g1 = unit_schur(1, 2, P({1}));
    const GradedSeries r2 = apply_p_minus1(2, g1);
    CHECK(r2.coefficient(P({2})) == VPoly::constant(1, 2));
    CHECK(r2.coefficient(P({1, 1})) == VPoly::constant(1, -2));
    // basis contract
    GradedSeries p(Basis::powersum, 1, 2);
    CHECK_THROWS_AS(apply_p_minus1(1, p), std::invalid_argument);
}

TEST_CASE("combined operator via content products") {
    const OperatorSpec s2 = a_coeffs_closed(2);
    GradedSeries g0 = unit_schur(2, 2, Partition());
    CHECK(apply_combined(s2, g0).coefficient(P({1})) == VPoly::monomial(2, {1, 1}, 1));

    const OperatorSpec s1 = a_coeffs_closed(1);
    GradedSeries g1 = unit_schur(1, 2, P({1}));
    const GradedSeries res = apply_combined(s1, g1);
    CHECK(res.coefficient(P({2})) == VPoly::linear(1, 0, 1));
    CHECK(res.coefficient(P({1, 1})) == VPoly::linear(1, 0, -1));
}

TEST_CASE("combined operator equals the order-sum route") {
    for (int r = 1; r <= 3; ++r) {
        const OperatorSpec spec = a_coeffs_closed(r);
        for (int d = 0; d <= 5; ++d) {
            for (const auto& mu : partitions_of(d)) {
                GradedSeries g = unit_schur(r, d + 1, mu);
                const GradedSeries direct = apply_combined(spec, g);
                GradedSeries sum(Basis::schur, r, d + 1);
                for (int k = 1; k <= r + 1; ++k) {
                    const GradedSeries term = series_scale(apply_p_minus1(k, g), spec.coeff(k));
                    for (const auto& [idx, c] : term.slice(d + 1)) sum.add(idx, c);
                }
                CHECK(direct == sum);
            }
        }
    }
}

TEST_CASE("flow matches the direct expansion") {
    // degree-by-degree values for two branch points
    const GradedSeries z2 = z_flow(2, 2);
    CHECK(z2.coefficient(Partition()) == VPoly::constant(2, 1));
    CHECK(z2.coefficient(P({1})) == VPoly::monomial(2, {1, 1}, 1));
    {
        const VPoly vv = VPoly::monomial(2, {1, 1}, 1);
        const VPoly plus = VPoly::linear(2, 0, 1) * VPoly::linear(2, 1, 1);
        const VPoly minus = VPoly::linear(2, 0, -1) * VPoly::linear(2, 1, -1);
        CHECK(z2.coefficient(P({2})) == vv * plus * make_rational(1, 2));
        CHECK(z2.coefficient(P({1, 1})) == vv * minus * make_rational(1, 2));
    }
    for (int r = 1; r <= 3; ++r) {
        const int D = 5;
        CHECK(z_flow(r, D) == z_direct(r, D));
    }
}

TEST_CASE("direct expansion termwise examples") {
    const GradedSeries z1 = z_direct(1, 3);
    CHECK(z1.coefficient(P({2, 1})) ==
          VPoly::variable(1, 0) * VPoly::linear(1, 0, 1) * VPoly::linear(1, 0, -1) *
              make_rational(1, 3));
    const GradedSeries z2 = z_direct(2, 1);
    CHECK(z2.coefficient(P({1})) == VPoly::monomial(2, {1, 1}, 1));
}

TEST_CASE("cut-and-join evolution equation") {
    // (d+1) Z_{d+1} = operator(Z_d), degree by degree
    for (int r = 1; r <= 3; ++r) {
        const int D = 5;
        const OperatorSpec spec = a_coeffs_closed(r);
        const GradedSeries z = z_direct(r, D);
        const GradedSeries oz = apply_combined(spec, z);
        for (int d = 0; d < D; ++d)
            for (const auto& eta : partitions_of(d + 1))
                CHECK(z.coefficient(eta) * Rational(d + 1) == oz.coefficient(eta));
    }
}

TEST_CASE("power-sum conversion") {
    CorrelatorEngine engine;
    GradedSeries s1 = unit_schur(1, 2, P({1}));
    CHECK(to_powersum_basis(s1, engine).coefficient(P({1})) == VPoly::constant(1, 1));
    GradedSeries s2 = unit_schur(1, 2, P({2}));
    const GradedSeries conv = to_powersum_basis(s2, engine);
    CHECK(conv.coefficient(P({2})) == VPoly::constant(1, make_rational(1, 2)));
    CHECK(conv.coefficient(P({1, 1})) == VPoly::constant(1, make_rational(1, 2)));
    // cross-module route equality: Schur route vs Burnside route
    for (int r = 1; r <= 2; ++r)
        CHECK(to_powersum_basis(z_direct(r, 3), engine) == engine.disconnected_series(r, 3));
}

TEST_CASE("two-operator flow reproduces the hook-content evaluation") {
    const GradedSeries flow = virasoro_flow(6);
    CHECK(flow.coefficient(P({1})) == VPoly::variable(1, 0));
    CHECK(flow.coefficient(P({2})) ==
          VPoly::variable(1, 0) * VPoly::linear(1, 0, 1) * make_rational(1, 2));
    CHECK(flow.coefficient(P({1, 1})) ==
          VPoly::variable(1, 0) * VPoly::linear(1, 0, -1) * make_rational(1, 2));
    CHECK(flow.coefficient(P({2, 1})) ==
          VPoly::variable(1, 0) * VPoly::linear(1, 0, 1) * VPoly::linear(1, 0, -1) *
              make_rational(1, 3));
    for (int d = 0; d <= 6; ++d)
        for (const auto& mu : partitions_of(d)) CHECK(flow.coefficient(mu) == hook_content_eval(mu));
}
