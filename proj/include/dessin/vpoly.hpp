#pragma once

#include <map>
#include <string>
#include <vector>

#include "dessin/rational.hpp"

namespace dessin {

// Exponent vector of a monomial in v1..vr: dense, fixed length r.
using Exponents = std::vector<int>;

// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial in the formal variables v1..vr over exact rationals.
// Canonical form: no zero coefficients, terms ordered graded-lexicographically.
// Two values of equal arity compare equal iff their term maps are identical.
class VPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit VPoly(int arity = 0) : arity_(arity) {}

    static VPoly zero(int arity) { return VPoly(arity); }
    static VPoly constant(int arity, const Rational& c);
    static VPoly variable(int arity, int index);  // 0-based variable index
    static VPoly monomial(int arity, Exponents e, const Rational& c);
    // x + c for a 0-based variable index
    static VPoly linear(int arity, int index, const Rational& shift);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial

    Rational coefficient(const Exponents& e) const;
    Rational constant_term() const { return coefficient(Exponents(arity_, 0)); }

    void add_term(const Exponents& e, const Rational& c);

    VPoly& operator+=(const VPoly& o);
    VPoly& operator-=(const VPoly& o);
    VPoly& operator*=(const VPoly& o);
    VPoly& operator*=(const Rational& c);

    friend VPoly operator+(VPoly a, const VPoly& b) { return a += b; }
    friend VPoly operator-(VPoly a, const VPoly& b) { return a -= b; }
    friend VPoly operator*(VPoly a, const VPoly& b) { return a *= b; }
    friend VPoly operator*(VPoly a, const Rational& c) { return a *= c; }
    friend VPoly operator*(const Rational& c, VPoly a) { return a *= c; }

    friend bool operator==(const VPoly& a, const VPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const VPoly& a, const VPoly& b) { return !(a == b); }

    Rational eval(const std::vector<Rational>& point) const;

    // Canonical text: terms in descending graded-lex order, rationals as "a/b",
    // variables named v1..vr unless names are supplied.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int arity_;
    TermMap terms_;
    void require_same_arity(const VPoly& o) const;
};

// Elementary symmetric polynomial e_j(v1..vr); e_0 = 1.
VPoly elementary_symmetric(int r, int j);

}  // namespace dessin
