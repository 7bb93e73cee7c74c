#include "dessin/hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "dessin/parallel.hpp"

namespace dessin {

GradedSeries::GradedSeries(Basis basis, int arity, int truncation)
    : basis_(basis), arity_(arity), truncation_(truncation) {
    if (truncation < 0) throw std::invalid_argument("GradedSeries: negative truncation");
    slices_.resize(truncation + 1);
}

const std::map<Partition, VPoly>& GradedSeries::slice(int d) const {
    if (d < 0 || d > truncation_) throw std::invalid_argument("GradedSeries::slice: degree out of range");
    return slices_[d];
}

void GradedSeries::add(const Partition& index, const VPoly& coeff) {
    if (coeff.arity() != arity_) throw std::invalid_argument("GradedSeries::add: arity mismatch");
    const int d = index.size();
    if (d > truncation_) return;
    auto& slot = slices_[d];
    auto it = slot.find(index);
    if (it == slot.end()) {
        if (!coeff.is_zero()) slot.emplace(index, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) slot.erase(it);
    }
}

void GradedSeries::set(const Partition& index, VPoly coeff) {
    if (coeff.arity() != arity_) throw std::invalid_argument("GradedSeries::set: arity mismatch");
    const int d = index.size();
    if (d > truncation_) return;
    if (coeff.is_zero())
        slices_[d].erase(index);
    else
        slices_[d].insert_or_assign(index, std::move(coeff));
}

VPoly GradedSeries::coefficient(const Partition& index) const {
    const int d = index.size();
    if (d > truncation_) return VPoly::zero(arity_);
    auto it = slices_[d].find(index);
    return it == slices_[d].end() ? VPoly::zero(arity_) : it->second;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    return a.basis_ == b.basis_ && a.arity_ == b.arity_ && a.truncation_ == b.truncation_ &&
           a.slices_ == b.slices_;
}

RamificationProfile::RamificationProfile(std::vector<Partition> ps) : profiles(std::move(ps)) {
    if (profiles.empty()) throw std::invalid_argument("RamificationProfile: empty profile list");
    const int d = profiles.front().size();
    if (d < 1) throw std::invalid_argument("RamificationProfile: degree must be >= 1");
    for (const auto& p : profiles)
        if (p.size() != d) throw std::invalid_argument("RamificationProfile: profile sizes differ");
}

Perm identity_perm(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

Partition cycle_type(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

namespace {

// The smallest unplaced element opens the next cycle; picking its cycle length
// from the distinct remaining part values generates each class element once.
void gen_class(std::map<int, int>& avail, const std::vector<int>& remaining, Perm& img,
               std::vector<Perm>& out) {
    if (remaining.empty()) {
        out.push_back(img);
        return;
    }
    const int start = remaining.front();
    const std::vector<int> rest(remaining.begin() + 1, remaining.end());
    for (auto& [len, count] : avail) {
        if (count == 0) continue;
        --count;
        std::vector<int> cycle{start};
        std::vector<bool> used(rest.size(), false);
        std::function<void()> place = [&]() {
            if (static_cast<int>(cycle.size()) == len) {
                for (std::size_t i = 0; i < cycle.size(); ++i)
                    img[cycle[i]] = cycle[(i + 1) % cycle.size()];
                std::vector<int> next;
                for (std::size_t i = 0; i < rest.size(); ++i)
                    if (!used[i]) next.push_back(rest[i]);
                gen_class(avail, next, img, out);
                return;
            }
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (used[i]) continue;
                used[i] = true;
                cycle.push_back(rest[i]);
                place();
                cycle.pop_back();
                used[i] = false;
            }
        };
        place();
        ++count;
    }
}

}  // namespace

std::vector<Perm> conjugacy_class(const Partition& mu) {
    const int d = mu.size();
    std::vector<Perm> out;
    Perm img(d, -1);
    std::vector<int> remaining(d);
    std::iota(remaining.begin(), remaining.end(), 0);
    std::map<int, int> avail;
    for (int p : mu.parts()) ++avail[p];
    gen_class(avail, remaining, img, out);
    return out;
}

bool acts_transitively(const std::vector<Perm>& gens, int d) {
    if (d <= 1) return true;
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : gens)
        for (int i = 0; i < d; ++i) {
            int a = find(i), b = find(g[i]);
            if (a != b) parent[a] = b;
        }
    const int root = find(0);
    for (int i = 1; i < d; ++i)
        if (find(i) != root) return false;
    return true;
}

namespace {

Rational oracle_count(const RamificationProfile& rp, bool connected, int bound, int jobs) {
    const int d = rp.degree();
    if (d > bound)
        throw size_error("oracle: degree " + std::to_string(d) + " above bound " + std::to_string(bound));
    const int m = rp.count();

    // Class sums are central, so profiles may be reordered freely; forcing
    // the largest class saves the biggest factor.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    int forced = 0;
    for (int i = 1; i < m; ++i)
        if (z_factor(rp.profiles[i]) < z_factor(rp.profiles[forced])) forced = i;
    std::swap(order[forced], order[m - 1]);

    const Partition& last_type = rp.profiles[order[m - 1]];
    std::vector<std::vector<Perm>> classes;
    for (int i = 0; i + 1 < m; ++i) classes.push_back(conjugacy_class(rp.profiles[order[i]]));

    if (m == 1) {
        // product over an empty prefix forces the single permutation to be e
        const bool ok = last_type == cycle_type(identity_perm(d)) &&
                        (!connected || acts_transitively({identity_perm(d)}, d));
        return ok ? make_rational(1, factorial(d)) : Rational(0);
    }

    const std::size_t outer = classes.front().size();
    std::vector<long long> counts(outer, 0);
    parallel_for(outer, [&](std::size_t oi) {
        std::vector<const Perm*> tuple(m - 1);
        tuple[0] = &classes[0][oi];
        long long local = 0;
        std::function<void(int, const Perm&)> rec = [&](int level, const Perm& prefix) {
            if (level == m - 1) {
                const Perm last = inverse(prefix);
                if (cycle_type(last) != last_type) return;
                if (connected) {
                    std::vector<Perm> gens;
                    gens.reserve(m);
                    for (int i = 0; i < m - 1; ++i) gens.push_back(*tuple[i]);
                    gens.push_back(last);
                    if (!acts_transitively(gens, d)) return;
                }
                ++local;
                return;
            }
            for (const Perm& g : classes[level]) {
                tuple[level] = &g;
                rec(level + 1, compose(prefix, g));
            }
        };
        rec(1, *tuple[0]);
        counts[oi] = local;
    }, jobs);

    long long total = 0;
    for (long long c : counts) total += c;
    return make_rational(to_int(total), factorial(d));
}

}  // namespace

Rational oracle_disconnected(const RamificationProfile& rp, int bound, int jobs) {
    return oracle_count(rp, false, bound, jobs);
}

Rational oracle_connected(const RamificationProfile& rp, int bound, int jobs) {
    return oracle_count(rp, true, bound, jobs);
}

Rational burnside_disconnected(const RamificationProfile& rp, const CharTable& table) {
    const int d = rp.degree();
    if (table.d != d) throw std::invalid_argument("burnside_disconnected: table degree mismatch");
    const Int dfact = factorial(d);
    Rational total(0);
    for (std::size_t e = 0; e < table.parts.size(); ++e) {
        const Int dim = dim_irrep(table.parts[e]);
        Rational term = make_rational(dim * dim, dfact * dfact);
        for (const auto& p : rp.profiles) {
            const Int& chi = table.chi[e][table.index_of(p)];
            term *= make_rational(dfact * chi, z_factor(p) * dim);
        }
        total += term;
    }
    return total;
}

std::optional<long long> riemann_hurwitz_genus(const RamificationProfile& rp) {
    long long rhs = static_cast<long long>(rp.degree()) * (rp.count() - 2);
    for (const auto& p : rp.profiles) rhs -= p.length();
    // 2g - 2 = rhs
    if ((rhs + 2) % 2 != 0) return std::nullopt;
    const long long g = (rhs + 2) / 2;
    if (g < 0) return std::nullopt;
    return g;
}

std::optional<long long> riemann_hurwitz_genus(int r, const std::vector<int>& k, const Partition& mu) {
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("riemann_hurwitz_genus: k length != r");
    long long rhs = static_cast<long long>(mu.size()) * (r - 1);
    for (int ki : k) rhs -= ki;
    rhs -= mu.length();
    if ((rhs + 2) % 2 != 0) return std::nullopt;
    const long long g = (rhs + 2) / 2;
    if (g < 0) return std::nullopt;
    return g;
}

namespace {

Partition merge_partitions(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.length() + b.length());
    parts.insert(parts.end(), a.parts().begin(), a.parts().end());
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

void require_powersum(const GradedSeries& g, const char* who) {
    if (g.basis() != Basis::powersum) throw std::invalid_argument(std::string(who) + ": powersum basis required");
}

bool degree0_is(const GradedSeries& g, const Rational& c) {
    const VPoly want = VPoly::constant(g.arity(), c);
    const VPoly got = g.coefficient(Partition());
    if (c == 0) return got.is_zero();
    return got == want;
}

}  // namespace

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
    require_powersum(a, "series_mul");
    require_powersum(b, "series_mul");
    if (a.arity() != b.arity()) throw std::invalid_argument("series_mul: arity mismatch");
    const int D = std::min(a.truncation(), b.truncation());
    GradedSeries out(Basis::powersum, a.arity(), D);
    for (int da = 0; da <= D; ++da)
        for (const auto& [mu, cmu] : a.slice(da))
            for (int db = 0; db + da <= D; ++db)
                for (const auto& [nu, cnu] : b.slice(db)) out.add(merge_partitions(mu, nu), cmu * cnu);
    return out;
}

GradedSeries series_log(const GradedSeries& g) {
    require_powersum(g, "series_log");
    if (!degree0_is(g, 1)) throw std::invalid_argument("series_log: degree-0 coefficient must be 1");
    const int D = g.truncation();
    GradedSeries x(Basis::powersum, g.arity(), D);  // g - 1
    for (int d = 1; d <= D; ++d)
        for (const auto& [mu, c] : g.slice(d)) x.add(mu, c);
    GradedSeries acc(Basis::powersum, g.arity(), D);
    GradedSeries xpow = x;
    for (int k = 1; k <= D; ++k) {
        const Rational scale = make_rational(k % 2 == 1 ? 1 : -1, k);
        for (int d = 0; d <= D; ++d)
            for (const auto& [mu, c] : xpow.slice(d)) acc.add(mu, c * scale);
        if (k < D) xpow = series_mul(xpow, x);
    }
    return acc;
}

GradedSeries series_exp(const GradedSeries& g) {
    require_powersum(g, "series_exp");
    if (!degree0_is(g, 0)) throw std::invalid_argument("series_exp: degree-0 coefficient must be 0");
    const int D = g.truncation();
    GradedSeries acc(Basis::powersum, g.arity(), D);
    acc.add(Partition(), VPoly::constant(g.arity(), 1));
    GradedSeries xpow(Basis::powersum, g.arity(), D);
    xpow.add(Partition(), VPoly::constant(g.arity(), 1));
    Rational kfact(1);
    for (int k = 1; k <= D; ++k) {
        xpow = series_mul(xpow, g);
        kfact *= k;
        const Rational scale = 1 / kfact;
        for (int d = 0; d <= D; ++d)
            for (const auto& [mu, c] : xpow.slice(d)) acc.add(mu, c * scale);
    }
    return acc;
}

CorrelatorEngine::CorrelatorEngine(const CharCache* cache, int jobs) : cache_(cache), jobs_(jobs) {}

const CharTable& CorrelatorEngine::table(int d) {
    auto it = tables_.find(d);
    if (it == tables_.end()) it = tables_.emplace(d, char_table(d, cache_, jobs_)).first;
    return it->second;
}

Rational CorrelatorEngine::inner_sum(int d, int eta_index, int len) {
    auto& per_eta = inner_[d];
    const CharTable& t = table(d);
    if (per_eta.empty()) per_eta.resize(t.parts.size());
    auto& memo = per_eta[eta_index];
    if (auto it = memo.find(len); it != memo.end()) return it->second;
    Rational sum(0);
    for (std::size_t j = 0; j < t.parts.size(); ++j) {
        if (t.parts[j].length() != len) continue;
        sum += make_rational(t.chi[eta_index][j], z_factor(t.parts[j]));
    }
    memo.emplace(len, sum);
    return sum;
}

Rational CorrelatorEngine::disconnected_correlator(int r, const std::vector<int>& k, const Partition& mu) {
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("disconnected_correlator: k length != r");
    const int d = mu.size();
    for (int ki : k)
        if (ki < 1 || ki > d) return Rational(0);
    if (d == 0) return Rational(1);
    const CharTable& t = table(d);
    const Int dfact = factorial(d);
    const Int zmu = z_factor(mu);
    const int mi = t.index_of(mu);
    Rational total(0);
    for (std::size_t e = 0; e < t.parts.size(); ++e) {
        if (t.chi[e][mi] == 0) continue;
        Rational term = make_rational(t.chi[e][mi], zmu);
        const Int dim = dim_irrep(t.parts[e]);
        for (int i = 0; i < r - 1; ++i) term *= make_rational(dfact, dim);
        for (int ki : k) term *= inner_sum(d, static_cast<int>(e), ki);
        total += term;
    }
    return total;
}

VPoly CorrelatorEngine::disconnected_generating(int r, const Partition& mu) {
    const int d = mu.size();
    if (d == 0) return VPoly::constant(r, 1);
    const CharTable& t = table(d);
    const Int dfact = factorial(d);
    const Int zmu = z_factor(mu);
    const int mi = t.index_of(mu);
    VPoly total(r);
    for (std::size_t e = 0; e < t.parts.size(); ++e) {
        if (t.chi[e][mi] == 0) continue;
        Rational scalar = make_rational(t.chi[e][mi], zmu);
        const Int dim = dim_irrep(t.parts[e]);
        for (int i = 0; i < r - 1; ++i) scalar *= make_rational(dfact, dim);
        // per-variable generating polynomial sum_len inner_sum * v^len
        VPoly prod = VPoly::constant(r, scalar);
        for (int v = 0; v < r; ++v) {
            VPoly w(r);
            for (int len = 1; len <= d; ++len) {
                const Rational c = inner_sum(d, static_cast<int>(e), len);
                if (c == 0) continue;
                Exponents exp(r, 0);
                exp[v] = len;
                w.add_term(exp, c);
            }
            prod *= w;
        }
        total += prod;
    }
    return total;
}

GradedSeries CorrelatorEngine::disconnected_series(int r, int D) {
    GradedSeries out(Basis::powersum, r, D);
    out.set(Partition(), VPoly::constant(r, 1));
    for (int d = 1; d <= D; ++d)
        for (const auto& mu : partitions_of(d)) out.set(mu, disconnected_generating(r, mu));
    return out;
}

const GradedSeries& CorrelatorEngine::log_series(int r, int D) {
    auto key = std::make_pair(r, D);
    auto it = logs_.find(key);
    if (it == logs_.end()) it = logs_.emplace(key, series_log(disconnected_series(r, D))).first;
    return it->second;
}

Rational CorrelatorEngine::connected_correlator(int r, const std::vector<int>& k, const Partition& mu) {
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("connected_correlator: k length != r");
    const int d = mu.size();
    for (int ki : k)
        if (ki < 1 || ki > d) return Rational(0);
    Exponents e(k.begin(), k.end());
    return connected_generating(r, mu).coefficient(e);
}

VPoly CorrelatorEngine::connected_generating(int r, const Partition& mu) {
    return log_series(r, mu.size()).coefficient(mu);
}

}  // namespace dessin
