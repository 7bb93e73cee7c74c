#include "dessin/polyfit.hpp"

#include <algorithm>

namespace dessin {

bool BinomialExpansion::integral() const {
    for (const auto& [d, c] : coeffs)
        if (c.get_den() != 1) return false;
    return true;
}

bool BinomialExpansion::nonnegative() const {
    for (const auto& [d, c] : coeffs)
        if (c < 0) return false;
    return true;
}

Rational BinomialExpansion::eval(const std::vector<long long>& x) const {
    if (static_cast<int>(x.size()) != dims) throw std::invalid_argument("BinomialExpansion::eval: dims mismatch");
    Rational acc(0);
    for (const auto& [d, c] : coeffs) {
        Rational term = c;
        for (int i = 0; i < dims; ++i) term *= Rational(binomial(static_cast<long>(x[i]), d[i]));
        acc += term;
    }
    return acc;
}

namespace {

Rational eval_at(const VPoly& p, const std::vector<long long>& x) {
    std::vector<Rational> pt;
    pt.reserve(x.size());
    for (long long v : x) pt.push_back(to_rational(v));
    return p.eval(pt);
}

int degree_in(const VPoly& p, int var) {
    int deg = 0;
    for (const auto& [e, c] : p.terms()) deg = std::max(deg, e[var]);
    return deg;
}

}  // namespace

FitReport newton_fit(const std::vector<std::pair<long long, Rational>>& points, int max_degree) {
    FitReport rep;
    if (points.empty()) {
        rep.message = "no points";
        return rep;
    }
    const std::size_t m = points.size();
    std::vector<Rational> coef;
    coef.reserve(m);
    for (const auto& [x, y] : points) coef.push_back(y);
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) {
            const long long dx = points[i].first - points[i - j].first;
            if (dx == 0) throw std::invalid_argument("newton_fit: repeated argument");
            coef[i] = (coef[i] - coef[i - 1]) / to_rational(dx);
            if (i == j) break;
        }
    int degree = -1;
    for (std::size_t i = 0; i < m; ++i)
        if (coef[i] != 0) degree = static_cast<int>(i);
    if (degree < 0) degree = 0;  // identically zero data

    if (max_degree >= 0 && degree > max_degree) {
        rep.message = "data is not a polynomial of degree <= " + std::to_string(max_degree);
        for (std::size_t i = static_cast<std::size_t>(max_degree) + 1; i < m; ++i)
            if (coef[i] != 0) rep.offending.push_back({{points[i].first}, points[i].second});
        return rep;
    }

    VPoly fitted(1);
    VPoly basis = VPoly::constant(1, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (coef[i] != 0) fitted += basis * coef[i];
        if (i + 1 < m) basis *= VPoly::linear(1, 0, to_rational(-points[i].first));
    }
    rep.ok = true;
    rep.fitted = std::move(fitted);
    rep.degree = rep.fitted.is_zero() ? 0 : rep.fitted.total_degree();
    return rep;
}

BinomialExpansion binomial_expansion(const VPoly& poly) {
    if (poly.arity() != 1) throw std::invalid_argument("binomial_expansion: arity 1 required");
    const int deg = std::max(0, poly.total_degree());
    std::vector<Rational> vals;
    for (int t = 0; t <= deg; ++t) vals.push_back(eval_at(poly, {t}));
    BinomialExpansion be;
    be.dims = 1;
    for (int d = 0; d <= deg; ++d) {
        if (vals[0] != 0) be.coeffs[{d}] = vals[0];
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        if (!vals.empty()) vals.pop_back();
    }
    return be;
}

BinomialExpansion binomial_expansion_2d(const VPoly& poly) {
    if (poly.arity() != 2) throw std::invalid_argument("binomial_expansion_2d: arity 2 required");
    const int d1 = degree_in(poly, 0), d2 = degree_in(poly, 1);
    std::vector<std::vector<Rational>> vals(d1 + 1, std::vector<Rational>(d2 + 1));
    for (int a = 0; a <= d1; ++a)
        for (int b = 0; b <= d2; ++b) vals[a][b] = eval_at(poly, {a, b});
    // forward differences along each axis turn values into binomial coefficients
    for (int pass = 0; pass < d1; ++pass)
        for (int a = d1; a > pass; --a)
            for (int b = 0; b <= d2; ++b) vals[a][b] -= vals[a - 1][b];
    for (int pass = 0; pass < d2; ++pass)
        for (int b = d2; b > pass; --b)
            for (int a = 0; a <= d1; ++a) vals[a][b] -= vals[a][b - 1];
    BinomialExpansion be;
    be.dims = 2;
    for (int a = 0; a <= d1; ++a)
        for (int b = 0; b <= d2; ++b)
            if (vals[a][b] != 0) be.coeffs[{a, b}] = vals[a][b];
    return be;
}

FitReport stanley_fit(int r, const Partition& lambda, const Partition& mu, int samples, int holdout,
                      CorrelatorEngine& engine) {
    if (lambda.length() > r) throw std::invalid_argument("stanley_fit: l(lambda) > r");
    const int bound = mu.size() + 2 * lambda.size();
    if (samples <= 0) samples = bound + 2;
    if (holdout < 0) holdout = 2;
    if (samples < bound + 2)
        throw std::invalid_argument("stanley_fit: need at least " + std::to_string(bound + 2) + " samples");

    const int n_min = std::max({mu.size(), lambda.empty() ? 1 : lambda.part(1) + 1, 1});
    std::vector<std::pair<long long, Rational>> pts;
    for (int n = n_min; n < n_min + samples + holdout; ++n) {
        std::vector<int> k;
        for (int i = 1; i <= lambda.length(); ++i) k.push_back(n - lambda.part(i));
        for (int i = lambda.length(); i < r; ++i) k.push_back(n);
        std::vector<int> parts = mu.parts();
        parts.insert(parts.end(), n - mu.size(), 1);
        const Partition mu_ext(std::move(parts));
        const Rational v = Rational(factorial(n)) * engine.disconnected_correlator(r, k, mu_ext);
        pts.push_back({n, v});
    }

    std::vector<std::pair<long long, Rational>> train(pts.begin(), pts.begin() + samples);
    FitReport rep = newton_fit(train, bound);
    if (!rep.ok) return rep;
    for (int h = 0; h < holdout; ++h) {
        const auto& [x, y] = pts[samples + h];
        rep.holdout_ok.push_back(eval_at(rep.fitted, {x}) == y);
    }
    rep.ok = std::all_of(rep.holdout_ok.begin(), rep.holdout_ok.end(), [](bool b) { return b; });
    if (!rep.ok) rep.message = "holdout mismatch";
    rep.binomial = binomial_expansion(rep.fitted);
    rep.nonneg_integral = rep.binomial->integral() && rep.binomial->nonnegative();
    // the expansion must reproduce the data it came from
    for (const auto& [x, y] : pts)
        if (rep.binomial->eval({x}) != y && rep.ok)
            throw std::logic_error("stanley_fit: binomial expansion fails to reconstruct data");
    return rep;
}

bool vanishing_filter(int r, const std::vector<int>& k, const Partition& mu) {
    return riemann_hurwitz_genus(r, k, mu).has_value();
}

namespace {

// subscripts of the connected correlator in the conjecture:
// (|mu|-k_1, ..., |mu|-k_{r-1}, k_r)
std::vector<int> conjecture_subscripts(int r, const std::vector<int>& k, int weight) {
    std::vector<int> sub;
    for (int i = 0; i + 1 < r; ++i) sub.push_back(weight - k[i]);
    sub.push_back(k[r - 1]);
    return sub;
}

Rational conjecture_value_1pt(int r, const std::vector<int>& k, int n, CorrelatorEngine* log_engine) {
    const Partition mu({n});
    const auto sub = conjecture_subscripts(r, k, n);
    if (!vanishing_filter(r, sub, mu)) return Rational(0);
    if (log_engine) return Rational(n) * log_engine->connected_correlator(r, sub, mu);
    return Rational(n) * one_point_coefficient(n, r, sub);
}

Rational conjecture_value_2pt(int r, const std::vector<int>& k, long long a, long long b,
                              CorrelatorEngine* log_engine) {
    const int n1 = static_cast<int>(std::max(a, b));
    const int n2 = static_cast<int>(std::min(a, b));
    const Partition mu({n1, n2});
    const Int z = z_factor(mu);
    const auto sub = conjecture_subscripts(r, k, n1 + n2);
    if (!vanishing_filter(r, sub, mu)) return Rational(0);
    if (log_engine) return Rational(z) * log_engine->connected_correlator(r, sub, mu);
    return Rational(z) * two_point_coefficient(n1, n2, r, sub);
}

int genus_degree_guess(int r, const std::vector<int>& k, int length, int probe_weight) {
    std::vector<int> parts(length, 1);
    parts[0] = probe_weight - (length - 1);
    const Partition mu(std::move(parts));
    const auto g = riemann_hurwitz_genus(r, conjecture_subscripts(r, k, probe_weight), mu);
    if (!g) return 0;
    return static_cast<int>(2 * *g + 2);
}

FitReport conjecture_fit_1pt(int r, const std::vector<int>& k, int nmax, int holdout,
                             CorrelatorEngine* log_engine) {
    const int maxk = *std::max_element(k.begin(), k.end());
    const int n_min = maxk + 1;
    FitReport rep;
    if (n_min + holdout > nmax) {
        rep.message = "nmax too small";
        return rep;
    }
    std::map<int, Rational> values;
    auto value = [&](int n) {
        auto it = values.find(n);
        if (it == values.end()) it = values.emplace(n, conjecture_value_1pt(r, k, n, log_engine)).first;
        return it->second;
    };
    const int d0 = std::min(genus_degree_guess(r, k, 1, n_min + 1), nmax - n_min - holdout);
    for (int deg = std::max(0, d0); n_min + deg + holdout <= nmax; ++deg) {
        std::vector<std::pair<long long, Rational>> train;
        for (int n = n_min; n <= n_min + deg; ++n) train.push_back({n, value(n)});
        FitReport attempt = newton_fit(train, deg);
        if (!attempt.ok) continue;
        attempt.holdout_ok.clear();
        bool all = true;
        for (int h = 1; h <= holdout; ++h) {
            const int n = n_min + deg + h;
            const bool ok = eval_at(attempt.fitted, {n}) == value(n);
            attempt.holdout_ok.push_back(ok);
            all = all && ok;
        }
        if (!all) continue;
        attempt.binomial = binomial_expansion(attempt.fitted);
        attempt.nonneg_integral = attempt.binomial->integral() && attempt.binomial->nonnegative();
        return attempt;
    }
    rep.message = "no polynomial verified within nmax; counter-evidence points follow";
    for (int n = n_min; n <= nmax; ++n) rep.offending.push_back({{n}, value(n)});
    return rep;
}

FitReport conjecture_fit_2pt(int r, const std::vector<int>& k, int nmax, int holdout,
                             CorrelatorEngine* log_engine) {
    const int maxk = *std::max_element(k.begin(), k.end());
    const int s = maxk / 2 + 1;  // 2s > maxk keeps every grid point in-domain
    FitReport rep;
    std::map<std::pair<long long, long long>, Rational> values;
    auto value = [&](long long a, long long b) {
        auto key = std::make_pair(a, b);
        auto it = values.find(key);
        if (it == values.end())
            it = values.emplace(key, conjecture_value_2pt(r, k, a, b, log_engine)).first;
        return it->second;
    };
    for (int D = 1; s + D + holdout <= nmax; ++D) {
        const int M = D + 1;  // nodes s..s+D per axis
        // tensor divided differences on the square grid (sampled on the
        // triangle a >= b; the partition is unordered so values symmetrize)
        std::vector<std::vector<Rational>> dd(M, std::vector<Rational>(M));
        for (int a = 0; a < M; ++a)
            for (int b = 0; b < M; ++b) dd[a][b] = value(s + a, s + b);
        for (int j = 1; j < M; ++j)
            for (int i = M - 1; i >= j; --i)
                for (int b = 0; b < M; ++b) dd[i][b] = (dd[i][b] - dd[i - 1][b]) / Rational(j);
        for (int j = 1; j < M; ++j)
            for (int i = M - 1; i >= j; --i)
                for (int a = 0; a < M; ++a) dd[a][i] = (dd[a][i] - dd[a][i - 1]) / Rational(j);
        VPoly fitted(2);
        VPoly bx = VPoly::constant(2, 1);
        for (int i = 0; i < M; ++i) {
            VPoly by = VPoly::constant(2, 1);
            for (int j = 0; j < M; ++j) {
                if (dd[i][j] != 0) fitted += bx * by * dd[i][j];
                by *= VPoly::linear(2, 1, Rational(-(s + j)));
            }
            bx *= VPoly::linear(2, 0, Rational(-(s + i)));
        }
        bool all = true;
        std::vector<bool> hold;
        for (int h = 0; h < holdout; ++h) {
            const long long a = s + M, b = s + std::min(h, M);
            const bool ok = eval_at(fitted, {a, b}) == value(a, b);
            hold.push_back(ok);
            all = all && ok;
        }
        if (!all) continue;
        rep.ok = true;
        rep.fitted = std::move(fitted);
        rep.degree = rep.fitted.is_zero() ? 0 : rep.fitted.total_degree();
        rep.holdout_ok = std::move(hold);
        rep.binomial = binomial_expansion_2d(rep.fitted);
        rep.nonneg_integral = rep.binomial->integral() && rep.binomial->nonnegative();
        return rep;
    }
    rep.message = "no polynomial verified within nmax; counter-evidence points follow";
    for (int a = s; a <= std::min<long long>(nmax, s + 4); ++a)
        for (int b = s; b <= a; ++b) rep.offending.push_back({{a, b}, value(a, b)});
    return rep;
}

}  // namespace

FitReport conjecture_fit(int r, const std::vector<int>& k, int length, int nmax, int holdout,
                         CorrelatorEngine* log_engine) {
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("conjecture_fit: k length != r");
    for (int ki : k)
        if (ki < 1) throw std::invalid_argument("conjecture_fit: k_i >= 1 required");
    if (holdout < 1) holdout = 2;
    if (length == 1) return conjecture_fit_1pt(r, k, nmax, holdout, log_engine);
    if (length == 2) return conjecture_fit_2pt(r, k, nmax, holdout, log_engine);
    throw std::invalid_argument("conjecture_fit: length must be 1 or 2");
}

}  // namespace dessin
