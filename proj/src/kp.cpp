#include "dessin/kp.hpp"

#include <algorithm>
#include <numeric>

namespace dessin {

const VPoly& AffineMatrix::entry(int n, int m) const {
    auto it = entries.find({n, m});
    if (it == entries.end())
        throw std::invalid_argument("AffineMatrix::entry: (" + std::to_string(n) + "," +
                                    std::to_string(m) + ") beyond truncation");
    return it->second;
}

AffineMatrix affine_coordinates(int r, int D) {
    if (D < 1) throw std::invalid_argument("affine_coordinates: D >= 1 required");
    AffineMatrix am;
    am.r = r;
    am.D = D;
    for (int n = 0; n < D; ++n) {
        for (int m = 0; n + m + 1 <= D; ++m) {
            VPoly p = shifted_product(r, -n, m);
            Rational c = make_rational(1, Int(m + n + 1) * factorial(m) * factorial(n));
            if (n % 2 != 0) c = -c;
            am.entries.emplace(std::make_pair(n, m), p * c);
        }
    }
    return am;
}

VPoly shifted_product(int r, int lo, int hi) {
    VPoly p = VPoly::constant(r, 1);
    for (int i = 0; i < r; ++i)
        for (int j = lo; j <= hi; ++j) p *= VPoly::linear(r, i, j);
    return p;
}

namespace {

// Coefficients of prod_{j=lo..hi} (x + j), index = power of x.
std::vector<Int> shifted_poly_coeffs(int lo, int hi) {
    std::vector<Int> c{1};
    for (int j = lo; j <= hi; ++j) {
        std::vector<Int> next(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] += c[i] * j;
        }
        c = std::move(next);
    }
    return c;
}

Int coeff_at(const std::vector<Int>& poly, int e) {
    if (e < 0 || e >= static_cast<int>(poly.size())) return 0;
    return poly[e];
}

// One cycle factor of the kernel expansion. Affine factors contribute
// z_left^{-n-1} z_right^{-m-1} with an entry polynomial; kernel factors
// contribute a single geometric index (+t on one side, -1-t on the other)
// with sign -1 when the left variable index is the larger one.
struct CycleContext {
    const AffineMatrix* am = nullptr;
    const Partition* mu = nullptr;
    std::vector<int> order;  // variable visiting order, order[0] == 0
    VPoly* total = nullptr;
};

void enumerate_cycle(const CycleContext& ctx, std::size_t j, int first_left, int prev_right,
                     int budget, int sign, const VPoly& product) {
    const auto& w = ctx.order;
    const int l = static_cast<int>(w.size());
    if (j == w.size()) {
        if (prev_right + first_left == -ctx.mu->part(w[0] + 1) - 1) {
            if (sign > 0)
                *ctx.total += product;
            else
                *ctx.total -= product;
        }
        return;
    }
    const int a = w[j];
    const int b = w[(j + 1) % l];
    const int needed_left = -ctx.mu->part(a + 1) - 1 - prev_right;
    // affine factor: left exponent -n-1
    const int n = -needed_left - 1;
    if (n >= 0) {
        for (int m = 0; n + m + 1 <= budget; ++m)
            enumerate_cycle(ctx, j + 1, first_left, -m - 1, budget - (n + m + 1), sign,
                            product * ctx.am->entry(n, m));
    }
    // kernel factor
    if (a < b) {
        const int t = -needed_left - 1;  // left exponent is -1-t
        if (t >= 0) enumerate_cycle(ctx, j + 1, first_left, t, budget, sign, product);
    } else {
        const int t = needed_left;  // left exponent is +t
        if (t >= 0) enumerate_cycle(ctx, j + 1, first_left, -1 - t, budget, -sign, product);
    }
}

}  // namespace

VPoly connected_npoint(const Partition& mu, const AffineMatrix& am) {
    const int r = am.r;
    const int l = mu.length();
    if (l < 1) throw std::invalid_argument("connected_npoint: nonempty partition required");
    const int weight = mu.size();
    if (weight > am.D)
        throw size_error("connected_npoint: |mu| = " + std::to_string(weight) +
                         " exceeds affine truncation " + std::to_string(am.D));

    if (l == 1) {
        const int n = mu.part(1);
        VPoly acc(r);
        for (int a = 0; a <= n - 1; ++a) acc += am.entry(a, n - 1 - a);
        return acc * make_rational(1, n);
    }

    // Sum over the (l-1)! directed cyclic visiting orders; the pure-kernel
    // assignment and the delta_{l,2} correction both sit at total degree -l
    // and cannot reach the target exponents, so they drop out here.
    VPoly total(r);
    std::vector<int> rest(l - 1);
    std::iota(rest.begin(), rest.end(), 1);
    CycleContext ctx;
    ctx.am = &am;
    ctx.mu = &mu;
    ctx.total = &total;
    do {
        ctx.order.assign(1, 0);
        ctx.order.insert(ctx.order.end(), rest.begin(), rest.end());
        // first factor: enumerate its full parameter space, then propagate
        const int b1 = ctx.order[1];
        (void)b1;
        for (int n0 = 0; n0 <= weight - 1; ++n0)
            for (int m0 = 0; n0 + m0 + 1 <= weight; ++m0)
                enumerate_cycle(ctx, 1, -n0 - 1, -m0 - 1, weight - (n0 + m0 + 1), +1,
                                am.entry(n0, m0));
        // kernel first factor: order[0] = 0 is the smallest index, so a < b
        for (int t0 = 0; t0 <= weight; ++t0)
            enumerate_cycle(ctx, 1, -1 - t0, t0, weight, +1, VPoly::constant(r, 1));
    } while (std::next_permutation(rest.begin(), rest.end()));

    Rational scale = make_rational(1, z_factor(mu));
    if (l % 2 == 0) scale = -scale;  // (-1)^{l-1}
    return total * scale;
}

VPoly one_point_generating(int n, int r) {
    if (n < 1) throw std::invalid_argument("one_point_generating: n >= 1 required");
    VPoly acc(r);
    for (int k = 0; k <= n - 1; ++k) {
        const int l = n - 1 - k;
        Rational c = make_rational(1, Int(n) * factorial(k) * factorial(l));
        if (k % 2 != 0) c = -c;
        acc += shifted_product(r, -k, l) * c;
    }
    return acc * make_rational(1, n);
}

VPoly two_point_generating(int n1, int n2, int r) {
    if (n1 < n2 || n2 < 1) throw std::invalid_argument("two_point_generating: n1 >= n2 >= 1 required");
    VPoly acc(r);
    const Int nn = Int(n1) + Int(n2);
    for (int k = 0; k <= n1 - 1; ++k) {
        const Int den = nn * factorial(n1 - 1 - k) * factorial(n2 + k);
        Rational c1 = make_rational(1, den);
        if ((n1 - 1 - k) % 2 != 0) c1 = -c1;
        acc += shifted_product(r, k + 1 - n1, n2 + k) * c1;
        Rational c2 = make_rational(1, den);
        if ((n2 + k) % 2 == 0) c2 = -c2;  // minus (-1)^{n2+k}
        acc += shifted_product(r, -n2 - k, n1 - 1 - k) * c2;
    }
    for (int l = 0; l <= n1 - 1; ++l) {
        for (int k = 0; k <= n2 - 1; ++k) {
            const Int den = Int(n1 + n2 - k - l - 1) * factorial(n2 - 1 - k) *
                            factorial(n1 - 1 - l) * Int(l + k + 1) * factorial(l) * factorial(k);
            Rational c3 = make_rational(1, den);
            if ((n1 - 1 - l + k) % 2 == 0) c3 = -c3;  // minus (-1)^{n1-1-l} (-1)^k
            acc += shifted_product(r, l + 1 - n1, n2 - 1 - k) * shifted_product(r, -k, l) * c3;
        }
    }
    return acc * make_rational(1, Int(n1) * Int(n2) * (n1 == n2 ? 2 : 1));
}

Rational one_point_coefficient(int n, int r, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != r) throw std::invalid_argument("one_point_coefficient: exps length != r");
    Rational acc(0);
    for (int k = 0; k <= n - 1; ++k) {
        const int l = n - 1 - k;
        const auto poly = shifted_poly_coeffs(-k, l);
        Rational term = make_rational(1, Int(n) * Int(n) * factorial(k) * factorial(l));
        if (k % 2 != 0) term = -term;
        for (int i = 0; i < r && term != 0; ++i) term *= Rational(coeff_at(poly, exps[i]));
        acc += term;
    }
    return acc;
}

Rational two_point_coefficient(int n1, int n2, int r, const std::vector<int>& exps) {
    if (static_cast<int>(exps.size()) != r) throw std::invalid_argument("two_point_coefficient: exps length != r");
    Rational acc(0);
    const Int nn = Int(n1) + Int(n2);
    auto add_term = [&](Rational c, const std::vector<Int>& poly) {
        for (int i = 0; i < r && c != 0; ++i) c *= Rational(coeff_at(poly, exps[i]));
        acc += c;
    };
    for (int k = 0; k <= n1 - 1; ++k) {
        const Int den = nn * factorial(n1 - 1 - k) * factorial(n2 + k);
        Rational c1 = make_rational(1, den);
        if ((n1 - 1 - k) % 2 != 0) c1 = -c1;
        add_term(c1, shifted_poly_coeffs(k + 1 - n1, n2 + k));
        Rational c2 = make_rational(1, den);
        if ((n2 + k) % 2 == 0) c2 = -c2;
        add_term(c2, shifted_poly_coeffs(-n2 - k, n1 - 1 - k));
    }
    for (int l = 0; l <= n1 - 1; ++l) {
        for (int k = 0; k <= n2 - 1; ++k) {
            const Int den = Int(n1 + n2 - k - l - 1) * factorial(n2 - 1 - k) *
                            factorial(n1 - 1 - l) * Int(l + k + 1) * factorial(l) * factorial(k);
            Rational c3 = make_rational(1, den);
            if ((n1 - 1 - l + k) % 2 == 0) c3 = -c3;
            const auto pa = shifted_poly_coeffs(l + 1 - n1, n2 - 1 - k);
            const auto pb = shifted_poly_coeffs(-k, l);
            std::vector<Int> prod(pa.size() + pb.size() - 1, 0);
            for (std::size_t i = 0; i < pa.size(); ++i)
                for (std::size_t j = 0; j < pb.size(); ++j) prod[i + j] += pa[i] * pb[j];
            add_term(c3, prod);
        }
    }
    return acc / make_rational(Int(n1) * Int(n2) * (n1 == n2 ? 2 : 1), 1);
}

}  // namespace dessin
