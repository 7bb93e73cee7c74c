#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dessin {

// Exact arithmetic substrate. All quantities in this library are integers or
// rationals; no floating point anywhere.
using Int = mpz_class;
using Rational = mpq_class;

// A computation was asked to exceed its configured size bound.
class size_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

// Canonical text form "a/b" ("a" when the denominator is 1).
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

// mpz/mpq have no long long constructors; on this platform long is 64-bit
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rational to_rational(long long v) { return Rational(static_cast<long>(v)); }

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace dessin
