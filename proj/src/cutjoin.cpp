#include "dessin/cutjoin.hpp"

namespace dessin {

namespace {

Partition add_box(const Partition& mu, Box b) {
    std::vector<int> parts = mu.parts();
    if (b.row == mu.length() + 1)
        parts.push_back(1);
    else
        ++parts[b.row - 1];
    return Partition(std::move(parts));
}

void require_schur(const GradedSeries& g, const char* who) {
    if (g.basis() != Basis::schur) throw std::invalid_argument(std::string(who) + ": schur basis required");
}

}  // namespace

OperatorSpec a_coeffs_closed(int r) {
    if (r < 1) throw std::invalid_argument("a_coeffs_closed: r >= 1 required");
    std::vector<VPoly> e;
    for (int j = 0; j <= r; ++j) e.push_back(elementary_symmetric(r, j));
    OperatorSpec spec;
    spec.r = r;
    for (int k = 1; k <= r + 1; ++k) {
        VPoly ak = e[r] * make_rational(k % 2 == 1 ? 1 : -1, factorial(k));
        for (int j = 0; j <= r; ++j) {
            Rational inner(0);
            for (int i = 1; i <= k - 1; ++i) {
                const Int num = int_pow(Int(i), static_cast<unsigned long>(r - j));
                const Int den = factorial(i) * factorial(k - 1 - i);
                Rational c = make_rational(num, den);
                if ((i + k - 1) % 2 != 0) c = -c;
                inner += c;
            }
            if (inner != 0) ak += e[j] * (inner / k);
        }
        spec.a.push_back(std::move(ak));
    }
    return spec;
}

OperatorSpec a_coeffs_from_relation(int r) {
    if (r < 1) throw std::invalid_argument("a_coeffs_from_relation: r >= 1 required");
    OperatorSpec spec;
    spec.r = r;
    for (int n = 0; n <= r; ++n) {
        // evaluate the relation at x = n: only a_1..a_{n+1} survive
        VPoly rhs = content_factor(r, n);
        for (int k = 1; k <= n; ++k) {
            const Int w = Int(k) * falling_factorial(n, k - 1);
            if (w != 0) rhs -= spec.a[k - 1] * Rational(w);
        }
        rhs *= make_rational(1, factorial(n + 1));
        spec.a.push_back(std::move(rhs));
    }
    return spec;
}

VPoly content_factor(int r, int c) {
    VPoly p = VPoly::constant(r, 1);
    for (int i = 0; i < r; ++i) p *= VPoly::linear(r, i, c);
    return p;
}

GradedSeries apply_p_minus1(int k, const GradedSeries& g) {
    require_schur(g, "apply_p_minus1");
    GradedSeries out(Basis::schur, g.arity(), g.truncation());
    for (int d = 0; d < g.truncation(); ++d) {
        for (const auto& [mu, coeff] : g.slice(d)) {
            for (Box b : addable_boxes(mu)) {
                const int c = b.col - b.row;
                const Int w = Int(k) * falling_factorial(c, k - 1);
                if (w == 0) continue;
                out.add(add_box(mu, b), coeff * Rational(w));
            }
        }
    }
    return out;
}

GradedSeries apply_combined(const OperatorSpec& spec, const GradedSeries& g) {
    require_schur(g, "apply_combined");
    if (g.arity() != spec.r) throw std::invalid_argument("apply_combined: arity mismatch");
    GradedSeries out(Basis::schur, g.arity(), g.truncation());
    for (int d = 0; d < g.truncation(); ++d)
        for (const auto& [mu, coeff] : g.slice(d))
            for (Box b : addable_boxes(mu))
                out.add(add_box(mu, b), coeff * content_factor(spec.r, b.col - b.row));
    return out;
}

GradedSeries series_scale(const GradedSeries& g, const VPoly& factor) {
    GradedSeries out(g.basis(), g.arity(), g.truncation());
    for (int d = 0; d <= g.truncation(); ++d)
        for (const auto& [mu, coeff] : g.slice(d)) out.add(mu, coeff * factor);
    return out;
}

GradedSeries z_flow(int r, int D) {
    const OperatorSpec spec = a_coeffs_closed(r);
    GradedSeries z(Basis::schur, r, D);
    z.set(Partition(), VPoly::constant(r, 1));
    GradedSeries current(Basis::schur, r, D);
    current.set(Partition(), VPoly::constant(r, 1));
    for (int d = 0; d < D; ++d) {
        GradedSeries next = apply_combined(spec, current);
        GradedSeries scaled(Basis::schur, r, D);
        const Rational inv = make_rational(1, d + 1);
        for (const auto& [mu, coeff] : next.slice(d + 1)) {
            scaled.add(mu, coeff * inv);
            z.add(mu, coeff * inv);
        }
        current = std::move(scaled);
    }
    return z;
}

GradedSeries z_direct(int r, int D) {
    GradedSeries z(Basis::schur, r, D);
    for (int d = 0; d <= D; ++d)
        for (const auto& eta : partitions_of(d))
            z.set(eta, hook_content_product(eta, r) * principal_eval(eta));
    return z;
}

GradedSeries to_powersum_basis(const GradedSeries& g, CorrelatorEngine& engine) {
    require_schur(g, "to_powersum_basis");
    GradedSeries out(Basis::powersum, g.arity(), g.truncation());
    for (int d = 0; d <= g.truncation(); ++d) {
        if (d == 0) {
            for (const auto& [eta, coeff] : g.slice(0)) out.add(eta, coeff);
            continue;
        }
        const CharTable& table = engine.table(d);
        for (const auto& [eta, coeff] : g.slice(d))
            for (const auto& [mu, c] : schur_to_powersum(eta, table)) out.add(mu, coeff * c);
    }
    return out;
}

GradedSeries virasoro_flow(int D) {
    GradedSeries z(Basis::schur, 1, D);
    z.set(Partition(), VPoly::constant(1, 1));
    GradedSeries current(Basis::schur, 1, D);
    current.set(Partition(), VPoly::constant(1, 1));
    const VPoly v = VPoly::variable(1, 0);
    for (int d = 0; d < D; ++d) {
        GradedSeries next(Basis::schur, 1, D);
        for (const auto& [mu, coeff] : current.slice(d)) {
            for (Box b : addable_boxes(mu)) {
                const Partition target = add_box(mu, b);
                // t_1 action: weight 1, times the formal variable
                next.add(target, coeff * v);
                // L_{-1} action: weight c(box)
                const int c = b.col - b.row;
                if (c != 0) next.add(target, coeff * Rational(c));
            }
        }
        GradedSeries scaled(Basis::schur, 1, D);
        const Rational inv = make_rational(1, d + 1);
        for (const auto& [mu, coeff] : next.slice(d + 1)) {
            scaled.add(mu, coeff * inv);
            z.add(mu, coeff * inv);
        }
        current = std::move(scaled);
    }
    return z;
}

}  // namespace dessin
