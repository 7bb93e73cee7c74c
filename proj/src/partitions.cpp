#include "dessin/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dessin {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    if (text.empty() || text == "[]") return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

int Partition::multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

Partition transpose(const Partition& la) {
    if (la.empty()) return Partition();
    std::vector<int> t(la.parts()[0], 0);
    for (int p : la.parts())
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

std::pair<std::vector<int>, std::vector<int>> frobenius(const Partition& la) {
    Partition lt = transpose(la);
    std::vector<int> m, n;
    for (int i = 1; i <= la.length() && la.part(i) >= i; ++i) {
        m.push_back(la.part(i) - i);
        n.push_back(lt.part(i) - i);
    }
    return {m, n};
}

bool contains_box(const Partition& la, Box b) {
    return b.row >= 1 && b.row <= la.length() && b.col >= 1 && b.col <= la.part(b.row);
}

int hook_length(const Partition& la, Box b) {
    if (!contains_box(la, b)) throw std::invalid_argument("hook_length: box outside the diagram");
    Partition lt = transpose(la);
    return (la.part(b.row) - b.col) + (lt.part(b.col) - b.row) + 1;
}

int content(const Partition& la, Box b) {
    if (!contains_box(la, b)) throw std::invalid_argument("content: box outside the diagram");
    return b.col - b.row;
}

Int z_factor(const Partition& la) {
    Int z = 1;
    int i = 0;
    const auto& p = la.parts();
    while (i < la.length()) {
        int j = i;
        while (j < la.length() && p[j] == p[i]) ++j;
        const long mult = j - i;
        z *= int_pow(Int(p[i]), static_cast<unsigned long>(mult)) * factorial(mult);
        i = j;
    }
    return z;
}

Int dim_irrep(const Partition& la) {
    Int hooks = 1;
    Partition lt = transpose(la);
    for (int i = 1; i <= la.length(); ++i)
        for (int j = 1; j <= la.part(i); ++j)
            hooks *= (la.part(i) - j) + (lt.part(j) - i) + 1;
    return factorial(la.size()) / hooks;
}

std::vector<Box> addable_boxes(const Partition& la) {
    std::vector<Box> out;
    for (int i = 1; i <= la.length(); ++i)
        if (i == 1 || la.part(i) < la.part(i - 1)) out.push_back({i, la.part(i) + 1});
    out.push_back({la.length() + 1, 1});
    return out;
}

std::vector<Box> removable_boxes(const Partition& la) {
    std::vector<Box> out;
    for (int i = 1; i <= la.length(); ++i)
        if (i == la.length() || la.part(i) > la.part(i + 1)) out.push_back({i, la.part(i)});
    return out;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        gen_partitions(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("partitions_of: negative d");
    std::vector<Partition> out;
    std::vector<int> prefix;
    gen_partitions(d, d, prefix, out);
    return out;
}

std::vector<Partition> partitions_of(int d, int length) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(d))
        if (p.length() == length) out.push_back(std::move(p));
    return out;
}

Int falling_factorial(long a, long k) {
    if (k < 0) throw std::invalid_argument("falling_factorial: negative order");
    Int r = 1;
    for (long j = 0; j < k; ++j) r *= Int(a - j);
    return r;
}

}  // namespace dessin
