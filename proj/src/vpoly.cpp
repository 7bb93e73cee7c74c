#include "dessin/vpoly.hpp"

#include <numeric>
#include <sstream>

namespace dessin {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

VPoly VPoly::constant(int arity, const Rational& c) {
    VPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

VPoly VPoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("VPoly::variable: index out of range");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(arity, std::move(e), 1);
}

VPoly VPoly::monomial(int arity, Exponents e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity) throw std::invalid_argument("VPoly::monomial: exponent length mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("VPoly::monomial: negative exponent");
    VPoly p(arity);
    p.add_term(e, c);
    return p;
}

VPoly VPoly::linear(int arity, int index, const Rational& shift) {
    VPoly p = variable(arity, index);
    p.add_term(Exponents(arity, 0), shift);
    return p;
}

int VPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

Rational VPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void VPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("VPoly::add_term: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void VPoly::require_same_arity(const VPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("VPoly: arity mismatch");
}

VPoly& VPoly::operator+=(const VPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

VPoly& VPoly::operator-=(const VPoly& o) {
    require_same_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

VPoly& VPoly::operator*=(const VPoly& o) {
    require_same_arity(o);
    VPoly out(arity_);
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    terms_.swap(out.terms_);
    return *this;
}

VPoly& VPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Rational VPoly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_) throw std::invalid_argument("VPoly::eval: point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i)
            for (int j = 0; j < e[i]; ++j) t *= point[i];
        acc += t;
    }
    return acc;
}

std::string VPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int i) {
        if (i < static_cast<int>(names.size())) return names[i];
        return "v" + std::to_string(i + 1);
    };
    std::ostringstream out;
    bool first = true;
    // descending graded-lex, the way the tables in the docs are written
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string mono;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var_name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        std::string body;
        if (mono.empty())
            body = dessin::to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = dessin::to_string(mag) + "*" + mono;
        if (first) {
            out << (c < 0 ? "-" : "") << body;
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ") << body;
        }
    }
    return out.str();
}

VPoly elementary_symmetric(int r, int j) {
    if (r < 0 || j < 0 || j > r) throw std::invalid_argument("elementary_symmetric: need 0 <= j <= r");
    VPoly p(r);
    Exponents e(r, 0);
    // iterate over j-subsets of {0..r-1}
    std::vector<int> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    if (j == 0) {
        p.add_term(e, 1);
        return p;
    }
    while (true) {
        std::fill(e.begin(), e.end(), 0);
        for (int i : idx) e[i] = 1;
        p.add_term(e, 1);
        int pos = j - 1;
        while (pos >= 0 && idx[pos] == r - j + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int q = pos + 1; q < j; ++q) idx[q] = idx[q - 1] + 1;
    }
    return p;
}

}  // namespace dessin
