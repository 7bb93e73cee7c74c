#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dessin/cutjoin.hpp"
#include "dessin/hurwitz.hpp"
#include "dessin/kp.hpp"

using namespace dessin;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition hook_partition(int m, int n) {
    std::vector<int> parts{m + 1};
    parts.insert(parts.end(), n, 1);
    return P(std::move(parts));
}
}

TEST_CASE("affine coordinate entries") {
    const AffineMatrix am1 = affine_coordinates(1, 4);
    CHECK(am1.entry(0, 0) == VPoly::variable(1, 0));
    // (1,0): -(1/2)(v-1)v
    CHECK(am1.entry(1, 0) ==
          VPoly::variable(1, 0) * VPoly::linear(1, 0, -1) * make_rational(-1, 2));
    const AffineMatrix am3 = affine_coordinates(3, 3);
    CHECK(am3.entry(0, 0) == VPoly::monomial(3, {1, 1, 1}, 1));
    CHECK_THROWS_AS(am3.entry(3, 3), std::invalid_argument);
}

TEST_CASE("affine coordinates are signed hook coefficients of the expansion") {
    for (int r = 1; r <= 3; ++r) {
        const AffineMatrix am = affine_coordinates(r, 6);
        const GradedSeries z = z_direct(r, 6);
        for (int n = 0; n < 6; ++n)
            for (int m = 0; n + m + 1 <= 6; ++m) {
                VPoly coeff = z.coefficient(hook_partition(m, n));
                if (n % 2 != 0) coeff *= Rational(-1);
                CHECK(coeff == am.entry(n, m));
            }
    }
}

TEST_CASE("one-point extraction") {
    for (int r = 1; r <= 4; ++r) {
        const AffineMatrix am = affine_coordinates(r, 3);
        CHECK(connected_npoint(P({1}), am) == elementary_symmetric(r, r));
        CHECK(one_point_generating(1, r) == elementary_symmetric(r, r));
    }
    // mu = (2) for two branch-point families: (1/4)(-prod(v-1)v + prod v(v+1))
    {
        const int r = 2;
        VPoly expect = (shifted_product(r, 0, 1) - shifted_product(r, -1, 0)) * make_rational(1, 4);
        const AffineMatrix am = affine_coordinates(r, 2);
        CHECK(connected_npoint(P({2}), am) == expect);
        CHECK(one_point_generating(2, r) == expect);
    }
    // mu = (3): three-term display
    for (int r = 1; r <= 3; ++r) {
        VPoly expect = (shifted_product(r, -2, 0) + shifted_product(r, 0, 2)) * make_rational(1, 6);
        expect -= shifted_product(r, -1, 1) * make_rational(1, 3);
        expect *= make_rational(1, 3);
        CHECK(one_point_generating(3, r) == expect);
    }
    for (int r = 1; r <= 3; ++r) {
        const AffineMatrix am = affine_coordinates(r, 6);
        for (int n = 1; n <= 6; ++n)
            CHECK(one_point_generating(n, r) == connected_npoint(P({n}), am));
    }
}

TEST_CASE("two-point extraction") {
    // (1,1): (1/4) e_r sum_{i<r} (1+(-1)^{r-i}) e_i
    for (int r = 1; r <= 3; ++r) {
        VPoly expect(r);
        for (int i = 0; i < r; ++i) {
            const int sign = (r - i) % 2 == 0 ? 2 : 0;
            if (sign) expect += elementary_symmetric(r, i) * Rational(sign);
        }
        expect *= elementary_symmetric(r, r) * make_rational(1, 4);
        CHECK(two_point_generating(1, 1, r) == expect);
    }
    // route equality against the generic extractor
    const AffineMatrix am2 = affine_coordinates(2, 7);
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= std::min(n1, 3); ++n2)
            CHECK(two_point_generating(n1, n2, 2) == connected_npoint(P({n1, n2}), am2));
    const AffineMatrix am3 = affine_coordinates(3, 5);
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= std::min(n1, 2); ++n2)
            CHECK(two_point_generating(n1, n2, 3) == connected_npoint(P({n1, n2}), am3));
}

TEST_CASE("kernel route equals the log route") {
    CorrelatorEngine engine;
    for (int r = 1; r <= 2; ++r) {
        const AffineMatrix am = affine_coordinates(r, 5);
        for (int w = 1; w <= 5; ++w)
            for (const auto& mu : partitions_of(w))
                CHECK(connected_npoint(mu, am) == engine.connected_generating(r, mu));
    }
}

TEST_CASE("size guard") {
    const AffineMatrix am = affine_coordinates(2, 3);
    CHECK_THROWS_AS(connected_npoint(P({4}), am), size_error);
    CHECK_THROWS_AS(connected_npoint(P({2, 2}), am), size_error);
}

TEST_CASE("coefficient fast paths agree with the full polynomials") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 5; ++n) {
            const VPoly full = one_point_generating(n, r);
            for (const auto& [e, c] : full.terms())
                CHECK(one_point_coefficient(n, r, std::vector<int>(e.begin(), e.end())) == c);
            // and a few zero coefficients
            CHECK(one_point_coefficient(n, r, std::vector<int>(r, n + 1)) == 0);
        }
    for (int n1 = 1; n1 <= 3; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) {
            const VPoly full = two_point_generating(n1, n2, 2);
            for (const auto& [e, c] : full.terms())
                CHECK(two_point_coefficient(n1, n2, 2, {e[0], e[1]}) == c);
        }
}

TEST_CASE("paper identities for small connected correlators") {
    // initial data: 2 N_{1,2}((2)) = 1
    CHECK(one_point_coefficient(2, 2, {1, 2}) == make_rational(1, 2));
    // n N_{n-1,2}((n)) = C(n,2)
    for (int n = 2; n <= 9; ++n)
        CHECK(Rational(n) * one_point_coefficient(n, 2, {n - 1, 2}) ==
              Rational(binomial(n, 2)));
    // n N_{n-2,1}((n)) = C(n,4) + C(n,3)
    for (int n = 3; n <= 9; ++n)
        CHECK(Rational(n) * one_point_coefficient(n, 2, {n - 2, 1}) ==
              Rational(binomial(n, 4) + binomial(n, 3)));
    // z N_{n1+n2-1,1}((n1,n2)) = n1 n2
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= n1; ++n2) {
            const Partition mu({n1, n2});
            CHECK(Rational(z_factor(mu)) *
                      two_point_coefficient(n1, n2, 2, {n1 + n2 - 1, 1}) ==
                  Rational(n1 * n2));
        }
}
