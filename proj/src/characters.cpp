#include "dessin/characters.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dessin/parallel.hpp"
#include "json.hpp"

namespace dessin {

int CharTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(parts.begin(), parts.end(), p);
    if (it == parts.end() || *it != p) throw std::invalid_argument("CharTable: partition not of degree " + std::to_string(d));
    return static_cast<int>(it - parts.begin());
}

const Int& CharTable::value(const Partition& la, const Partition& mu) const {
    return chi[index_of(la)][index_of(mu)];
}

namespace {

// Border strips removed via first-column hook lengths (beta numbers): a strip
// of size t sits at beta value b with b - t >= 0 and b - t not in beta; its
// height parity is the number of beta values strictly between b - t and b.
Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    const int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < L; ++i) {
        int part = beta[i] - (L - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Int mn_rec(const Partition& la, const std::vector<int>& mu_parts, std::size_t pos,
           std::map<std::pair<Partition, std::size_t>, Int>& memo) {
    if (la.size() == 0) return 1;
    auto key = std::make_pair(la, pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int t = mu_parts[pos];
    const int L = la.length();
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = la.parts()[i] + (L - 1 - i);

    Int total = 0;
    for (int i = 0; i < L; ++i) {
        const int nb = beta[i] - t;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > nb && b < beta[i]) ++between;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        const Int sub = mn_rec(from_beta(std::move(nbeta)), mu_parts, pos + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int mn_character(const Partition& la, const Partition& mu) {
    if (la.size() != mu.size()) throw std::invalid_argument("mn_character: |lambda| != |mu|");
    std::map<std::pair<Partition, std::size_t>, Int> memo;
    return mn_rec(la, mu.parts(), 0, memo);
}

CharCache::CharCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path CharCache::file_for(int d) const {
    return dir_ / ("chars_d" + std::to_string(d) + ".jsonl");
}

bool CharCache::load(int d, CharTable& out) const {
    std::ifstream in(file_for(d));
    if (!in) return false;
    try {
        std::string line;
        if (!std::getline(in, line)) return false;
        auto header = nlohmann::json::parse(line);
        if (header.at("format").get<int>() != 1 || header.at("d").get<int>() != d) return false;
        CharTable table;
        table.d = d;
        table.parts = partitions_of(d);
        const std::size_t n = table.parts.size();
        table.chi.assign(n, std::vector<Int>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!std::getline(in, line)) return false;
                auto rec = nlohmann::json::parse(line);
                if (Partition::parse(rec.at("lambda").get<std::string>()) != table.parts[i]) return false;
                if (Partition::parse(rec.at("mu").get<std::string>()) != table.parts[j]) return false;
                table.chi[i][j] = Int(rec.at("chi").get<std::string>());
            }
        }
        if (std::getline(in, line) && !line.empty()) return false;
        out = std::move(table);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void CharCache::store(const CharTable& table) const {
    std::filesystem::create_directories(dir_);
    std::ofstream out(file_for(table.d), std::ios::trunc);
    if (!out) throw std::runtime_error("CharCache: cannot write " + file_for(table.d).string());
    out << "{\"format\": 1, \"d\": " << table.d << "}\n";
    for (std::size_t i = 0; i < table.parts.size(); ++i)
        for (std::size_t j = 0; j < table.parts.size(); ++j)
            out << "{\"lambda\": \"" << table.parts[i].to_string() << "\", \"mu\": \""
                << table.parts[j].to_string() << "\", \"chi\": \"" << table.chi[i][j].get_str()
                << "\"}\n";
}

CharTable char_table(int d, const CharCache* cache, int jobs) {
    if (d < 0) throw std::invalid_argument("char_table: negative degree");
    if (cache) {
        CharTable table;
        if (cache->load(d, table)) return table;
        if (std::filesystem::exists(cache->file_for(d)))
            std::fprintf(stderr, "warning: character cache %s invalid, recomputing\n",
                         cache->file_for(d).string().c_str());
    }
    CharTable table;
    table.d = d;
    table.parts = partitions_of(d);
    const std::size_t n = table.parts.size();
    table.chi.assign(n, std::vector<Int>(n));
    parallel_for(n * n, [&](std::size_t idx) {
        const std::size_t i = idx / n, j = idx % n;
        table.chi[i][j] = mn_character(table.parts[i], table.parts[j]);
    }, jobs);
    if (cache) cache->store(table);
    return table;
}

std::map<Partition, Rational> schur_to_powersum(const Partition& mu, const CharTable& table) {
    if (mu.size() != table.d) throw std::invalid_argument("schur_to_powersum: degree mismatch");
    std::map<Partition, Rational> out;
    const int mi = table.index_of(mu);
    for (std::size_t j = 0; j < table.parts.size(); ++j) {
        const Int& c = table.chi[mi][j];
        if (c == 0) continue;
        out.emplace(table.parts[j], make_rational(c, z_factor(table.parts[j])));
    }
    return out;
}

VPoly hook_content_eval(const Partition& mu) {
    VPoly p = VPoly::constant(1, 1);
    Int hooks = 1;
    for (int i = 1; i <= mu.length(); ++i) {
        for (int j = 1; j <= mu.part(i); ++j) {
            p *= VPoly::linear(1, 0, j - i);
            hooks *= hook_length(mu, {i, j});
        }
    }
    p *= make_rational(1, hooks);
    return p;
}

VPoly hook_content_product(const Partition& mu, int r) {
    VPoly p = VPoly::constant(r, 1);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.part(i); ++j)
            for (int v = 0; v < r; ++v) p *= VPoly::linear(r, v, j - i);
    return p;
}

Rational principal_eval(const Partition& eta) {
    Int hooks = 1;
    for (int i = 1; i <= eta.length(); ++i)
        for (int j = 1; j <= eta.part(i); ++j) hooks *= hook_length(eta, {i, j});
    return make_rational(1, hooks);
}

}  // namespace dessin
