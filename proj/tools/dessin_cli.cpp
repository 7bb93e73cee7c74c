#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dessin/cutjoin.hpp"
#include "dessin/hurwitz.hpp"
#include "dessin/kp.hpp"
#include "dessin/parallel.hpp"
#include "dessin/polyfit.hpp"

using json = nlohmann::ordered_json;
using namespace dessin;

namespace {

struct GlobalOpts {
    int jobs = 0;
    std::string cache_dir;
    std::string output;
    bool no_meta = false;
};

std::string default_cache_dir() {
    if (const char* env = std::getenv("DESSIN_CACHE_DIR")) return env;
    return ".dessin-cache";
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

void emit(const GlobalOpts& g, json doc) {
    if (!g.no_meta) {
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
        doc["meta"] = {{"generated_at", buf}};
    }
    if (g.output.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream out(g.output, std::ios::trunc);
        out << doc.dump(2) << "\n";
    }
}

json fit_report_json(const FitReport& rep, const std::vector<std::string>& names) {
    json j;
    j["status"] = rep.ok ? "ok" : "fit-failure";
    if (!rep.message.empty()) j["message"] = rep.message;
    if (rep.ok) {
        j["fitted"] = rep.fitted.to_string(names);
        j["degree"] = rep.degree;
    }
    json hold = json::array();
    for (bool b : rep.holdout_ok) hold.push_back(b);
    j["holdout_verified"] = hold;
    if (rep.binomial) {
        json bc = json::object();
        for (const auto& [d, c] : rep.binomial->coeffs) {
            std::string key;
            for (std::size_t i = 0; i < d.size(); ++i) key += (i ? "," : "") + std::to_string(d[i]);
            bc[key] = to_string(c);
        }
        j["binomial"] = bc;
    }
    if (rep.nonneg_integral) j["nonneg_integral"] = *rep.nonneg_integral;
    if (!rep.offending.empty()) {
        json off = json::array();
        for (const auto& [xs, v] : rep.offending) {
            json pt;
            pt["argument"] = xs;
            pt["value"] = to_string(v);
            off.push_back(pt);
        }
        j["counter_evidence"] = off;
    }
    return j;
}

json series_json(const GradedSeries& g) {
    json degrees = json::array();
    for (int d = 0; d <= g.truncation(); ++d) {
        json slice;
        slice["degree"] = d;
        slice["basis"] = g.basis() == Basis::schur ? "schur" : "powersum";
        json terms = json::array();
        for (const auto& [idx, coeff] : g.slice(d)) {
            json t;
            t["index"] = idx.to_string();
            t["coeff"] = coeff.to_string();
            terms.push_back(t);
        }
        slice["terms"] = terms;
        degrees.push_back(slice);
    }
    return degrees;
}

int run_correlator(const GlobalOpts& g, int r, const std::string& mu_text, const std::string& k_text,
                   bool connected, bool generating, std::string route) {
    const Partition mu = Partition::parse(mu_text);
    CharCache cache(g.cache_dir);
    CorrelatorEngine engine(&cache, g.jobs);
    json out;
    out["command"] = "correlator";
    out["r"] = r;
    out["mu"] = mu.to_string();
    out["connected"] = connected;
    if (route.empty()) route = connected ? "zhou" : "burnside";
    if (!connected && (route == "zhou" || route == "log"))
        throw std::invalid_argument("route '" + route + "' computes connected correlators only");

    auto connected_poly_zhou = [&]() {
        return connected_npoint(mu, affine_coordinates(r, std::max(1, mu.size())));
    };
    auto connected_poly_log = [&]() { return engine.connected_generating(r, mu); };

    if (generating) {
        out["kind"] = "generating";
        if (!connected) {
            out["value"] = engine.disconnected_generating(r, mu).to_string();
        } else if (route == "all") {
            const VPoly a = connected_poly_zhou(), b = connected_poly_log();
            out["routes"] = {{"zhou", a.to_string()}, {"log", b.to_string()}};
            out["agree"] = a == b;
            out["value"] = a.to_string();
        } else {
            out["route"] = route;
            out["value"] = (route == "log" ? connected_poly_log() : connected_poly_zhou()).to_string();
        }
        emit(g, out);
        return 0;
    }

    const std::vector<int> k = parse_int_list(k_text);
    if (static_cast<int>(k.size()) != r) throw std::invalid_argument("--k must list r preimage counts");
    json karr = json::array();
    for (int ki : k) karr.push_back(ki);
    out["k"] = karr;
    Exponents e(k.begin(), k.end());
    if (!connected) {
        out["route"] = "burnside";
        out["value"] = to_string(engine.disconnected_correlator(r, k, mu));
    } else if (route == "all") {
        const Rational a = connected_poly_zhou().coefficient(e);
        const Rational b = engine.connected_correlator(r, k, mu);
        out["routes"] = {{"zhou", to_string(a)}, {"log", to_string(b)}};
        out["agree"] = a == b;
        out["value"] = to_string(a);
    } else {
        out["route"] = route;
        const Rational v = route == "log" ? engine.connected_correlator(r, k, mu)
                                          : connected_poly_zhou().coefficient(e);
        out["value"] = to_string(v);
    }
    emit(g, out);
    return 0;
}

int run_partition_function(const GlobalOpts& g, int r, int degree, const std::string& basis) {
    json out;
    out["command"] = "partition-function";
    out["r"] = r;
    out["truncation"] = degree;
    out["basis"] = basis;
    const GradedSeries z = z_direct(r, degree);
    if (basis == "schur") {
        out["degrees"] = series_json(z);
    } else if (basis == "powersum") {
        CharCache cache(g.cache_dir);
        CorrelatorEngine engine(&cache, g.jobs);
        out["degrees"] = series_json(to_powersum_basis(z, engine));
    } else {
        throw std::invalid_argument("basis must be schur or powersum");
    }
    emit(g, out);
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& check, int r, int degree, int d, int max_weight) {
    json out;
    out["command"] = "verify";
    out["check"] = check;
    bool pass = true;
    json counterexample;

    if (check == "cutjoin") {
        out["r"] = r;
        out["degree"] = degree;
        const GradedSeries a = z_flow(r, degree), b = z_direct(r, degree);
        for (int dd = 0; dd <= degree && pass; ++dd) {
            for (const auto& eta : partitions_of(dd)) {
                if (a.coefficient(eta) != b.coefficient(eta)) {
                    pass = false;
                    counterexample = {{"index", eta.to_string()},
                                      {"flow", a.coefficient(eta).to_string()},
                                      {"direct", b.coefficient(eta).to_string()}};
                    break;
                }
            }
        }
    } else if (check == "zhou") {
        out["r"] = r;
        out["max_weight"] = max_weight;
        CharCache cache(g.cache_dir);
        CorrelatorEngine engine(&cache, g.jobs);
        const AffineMatrix am = affine_coordinates(r, max_weight);
        for (int w = 1; w <= max_weight && pass; ++w) {
            for (const auto& mu : partitions_of(w)) {
                const VPoly a = connected_npoint(mu, am);
                const VPoly b = engine.connected_generating(r, mu);
                if (a != b) {
                    pass = false;
                    counterexample = {{"mu", mu.to_string()},
                                      {"zhou", a.to_string()},
                                      {"log", b.to_string()}};
                    break;
                }
            }
        }
    } else if (check == "burnside") {
        out["d"] = d;
        CharCache cache(g.cache_dir);
        for (int w = 1; w <= d && pass; ++w) {
            const CharTable table = char_table(w, &cache, g.jobs);
            const auto parts = partitions_of(w);
            std::vector<std::vector<Partition>> tuples;
            for (const auto& p1 : parts)
                for (const auto& p2 : parts) {
                    tuples.push_back({p1, p2});
                    for (const auto& p3 : parts) tuples.push_back({p1, p2, p3});
                }
            for (const auto& tup : tuples) {
                const RamificationProfile rp(tup);
                const Rational a = burnside_disconnected(rp, table);
                const Rational b = oracle_disconnected(rp, 6, g.jobs);
                if (a != b) {
                    pass = false;
                    json profs = json::array();
                    for (const auto& p : tup) profs.push_back(p.to_string());
                    counterexample = {{"profiles", profs},
                                      {"burnside", to_string(a)},
                                      {"oracle", to_string(b)}};
                    break;
                }
            }
        }
    } else if (check == "appendix") {
        out["max_weight"] = max_weight;
        const GradedSeries flow = virasoro_flow(max_weight);
        for (int w = 0; w <= max_weight && pass; ++w) {
            for (const auto& mu : partitions_of(w)) {
                if (flow.coefficient(mu) != hook_content_eval(mu)) {
                    pass = false;
                    counterexample = {{"mu", mu.to_string()},
                                      {"flow", flow.coefficient(mu).to_string()},
                                      {"evaluation", hook_content_eval(mu).to_string()}};
                    break;
                }
            }
        }
    } else if (check == "characters") {
        out["d"] = d;
        CharCache cache(g.cache_dir);
        for (int w = 0; w <= d && pass; ++w) {
            const CharTable table = char_table(w, &cache, g.jobs);
            const std::size_t n = table.parts.size();
            for (std::size_t a = 0; a < n && pass; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    Int dot = 0;
                    for (std::size_t e = 0; e < n; ++e) dot += table.chi[e][a] * table.chi[e][b];
                    const Int want = a == b ? z_factor(table.parts[a]) : Int(0);
                    if (dot != want) {
                        pass = false;
                        counterexample = {{"d", w},
                                          {"mu", table.parts[a].to_string()},
                                          {"nu", table.parts[b].to_string()},
                                          {"got", to_string(dot)}};
                        break;
                    }
                }
            }
            for (std::size_t e = 0; e < n && pass; ++e) {
                const Partition ones = w == 0 ? Partition() : Partition(std::vector<int>(w, 1));
                if (table.value(table.parts[e], ones) != dim_irrep(table.parts[e])) {
                    pass = false;
                    counterexample = {{"d", w}, {"lambda", table.parts[e].to_string()}};
                }
            }
        }
    } else {
        throw std::invalid_argument("unknown check '" + check + "'");
    }

    out["status"] = pass ? "pass" : "fail";
    if (!pass) out["counterexample"] = counterexample;
    emit(g, out);
    return pass ? 0 : 1;
}

int run_oracle(const GlobalOpts& g, const std::string& profiles_text, bool connected, int bound) {
    std::vector<Partition> profiles;
    std::stringstream ss(profiles_text);
    std::string tok;
    while (std::getline(ss, tok, '|')) profiles.push_back(Partition::parse(tok));
    const RamificationProfile rp(profiles);
    const Rational v = connected ? oracle_connected(rp, bound, g.jobs)
                                 : oracle_disconnected(rp, bound, g.jobs);
    json out;
    out["command"] = "oracle";
    json profs = json::array();
    for (const auto& p : rp.profiles) profs.push_back(p.to_string());
    out["profiles"] = profs;
    out["connected"] = connected;
    out["degree"] = rp.degree();
    const Rational tuples = v * Rational(factorial(rp.degree()));
    out["tuples"] = to_string(Int(tuples.get_num()));
    out["value"] = to_string(v);
    const auto genus = riemann_hurwitz_genus(rp);
    if (genus)
        out["genus"] = *genus;
    else
        out["genus"] = "non-integral";
    emit(g, out);
    return 0;
}

int run_cache_chars(const GlobalOpts& g, int d) {
    CharCache cache(g.cache_dir);
    const CharTable table = char_table(d, &cache, g.jobs);
    json out;
    out["command"] = "cache";
    out["action"] = "chars";
    out["d"] = d;
    out["partitions"] = table.parts.size();
    out["file"] = cache.file_for(d).string();
    emit(g, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for generalized dessin counting: correlators, "
                 "partition-function expansions, identity checks, and polynomial fits"};
    app.require_subcommand(1);

    GlobalOpts g;
    g.cache_dir = default_cache_dir();
    app.add_option("--jobs", g.jobs, "worker threads (0 = all cores, 1 = sequential)");
    app.add_option("--cache-dir", g.cache_dir, "character table cache directory");
    app.add_option("--output", g.output, "write JSON to this file instead of stdout");
    app.add_flag("--no-meta", g.no_meta, "suppress the timestamp field");

    // correlator
    auto* c = app.add_subcommand("correlator", "disconnected/connected correlators");
    int c_r = 2;
    std::string c_mu, c_k, c_route;
    bool c_conn = false, c_gen = false;
    c->add_option("--r", c_r, "number of unconstrained branch points")->required();
    c->add_option("--mu", c_mu, "ramification partition, e.g. 2,1")->required();
    c->add_option("--k", c_k, "preimage counts k1,..,kr");
    c->add_flag("--connected", c_conn, "connected correlator");
    c->add_flag("--generating", c_gen, "emit the generating polynomial in v1..vr");
    c->add_option("--route", c_route, "zhou | log | burnside | all");

    // partition-function
    auto* pf = app.add_subcommand("partition-function", "graded expansion of the partition function");
    int pf_r = 2, pf_deg = 4;
    std::string pf_basis = "schur";
    pf->add_option("--r", pf_r)->required();
    pf->add_option("--degree", pf_deg, "truncation degree")->required();
    pf->add_option("--basis", pf_basis, "schur | powersum");

    // verify
    auto* v = app.add_subcommand("verify", "run an identity check suite");
    std::string v_check;
    int v_r = 2, v_degree = 5, v_d = 4, v_w = 5;
    v->add_option("check", v_check, "cutjoin | zhou | burnside | appendix | characters")->required();
    v->add_option("--r", v_r);
    v->add_option("--degree", v_degree);
    v->add_option("--d", v_d);
    v->add_option("--max-weight", v_w);

    // fit
    auto* f = app.add_subcommand("fit", "exact polynomial fits of correlator data");
    auto* fs = f->add_subcommand("stanley", "disconnected-correlator polynomiality");
    int fs_r = 2, fs_samples = 0, fs_holdout = 2;
    std::string fs_lambda = "[]", fs_mu = "[]";
    fs->add_option("--r", fs_r)->required();
    fs->add_option("--lambda", fs_lambda);
    fs->add_option("--mu", fs_mu);
    fs->add_option("--samples", fs_samples, "0 = minimum required");
    fs->add_option("--holdout", fs_holdout);
    auto* fc = f->add_subcommand("conjecture", "connected-correlator polynomiality");
    int fc_r = 2, fc_len = 1, fc_nmax = 12, fc_holdout = 2;
    std::string fc_k, fc_route = "zhou";
    fc->add_option("--r", fc_r)->required();
    fc->add_option("--k", fc_k, "k1,..,kr")->required();
    fc->add_option("--length", fc_len, "number of parts of mu (1 or 2)");
    fc->add_option("--nmax", fc_nmax);
    fc->add_option("--holdout", fc_holdout);
    fc->add_option("--route", fc_route, "zhou | log");
    f->require_subcommand(1);

    // oracle
    auto* o = app.add_subcommand("oracle", "brute-force tuple enumeration");
    std::string o_profiles;
    bool o_conn = false;
    int o_bound = 6;
    o->add_option("--profiles", o_profiles, "partitions separated by |, e.g. \"2|2\"")->required();
    o->add_flag("--connected", o_conn);
    o->add_option("--bound", o_bound, "largest degree the oracle will accept");

    // cache
    auto* ca = app.add_subcommand("cache", "manage on-disk tables");
    auto* cc = ca->add_subcommand("chars", "build and persist a character table");
    int cc_d = 4;
    cc->add_option("--d", cc_d)->required();
    ca->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);
    set_default_jobs(g.jobs);

    try {
        if (*c) return run_correlator(g, c_r, c_mu, c_k, c_conn, c_gen, c_route);
        if (*pf) return run_partition_function(g, pf_r, pf_deg, pf_basis);
        if (*v) return run_verify(g, v_check, v_r, v_degree, v_d, v_w);
        if (*fs) {
            CharCache cache(g.cache_dir);
            CorrelatorEngine engine(&cache, g.jobs);
            const FitReport rep = stanley_fit(fs_r, Partition::parse(fs_lambda),
                                              Partition::parse(fs_mu), fs_samples, fs_holdout, engine);
            json out;
            out["command"] = "fit";
            out["kind"] = "stanley";
            out.update(fit_report_json(rep, {"n"}));
            emit(g, out);
            return rep.ok ? 0 : 1;
        }
        if (*fc) {
            CharCache cache(g.cache_dir);
            CorrelatorEngine engine(&cache, g.jobs);
            CorrelatorEngine* log_engine = fc_route == "log" ? &engine : nullptr;
            if (fc_route != "log" && fc_route != "zhou")
                throw std::invalid_argument("fit conjecture: route must be zhou or log");
            const FitReport rep = conjecture_fit(fc_r, parse_int_list(fc_k), fc_len, fc_nmax,
                                                 fc_holdout, log_engine);
            json out;
            out["command"] = "fit";
            out["kind"] = "conjecture";
            out["route"] = fc_route;
            out.update(fit_report_json(rep, fc_len == 1 ? std::vector<std::string>{"n"}
                                                        : std::vector<std::string>{"n1", "n2"}));
            emit(g, out);
            return rep.ok ? 0 : 1;
        }
        if (*o) return run_oracle(g, o_profiles, o_conn, o_bound);
        if (*cc) return run_cache_chars(g, cc_d);
    } catch (const size_error& e) {
        json err;
        err["error"] = {{"type", "size"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = {{"type", "invalid"}, {"message", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
