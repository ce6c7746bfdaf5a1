#pragma once

#include <gmpxx.h>

#include <string>

#include "dessin/errors.hpp"

namespace dessin {

using Integer = mpz_class;
using Rational = mpq_class;

// gmpxx does not canonicalize two-argument or string constructions, so all
// Rational construction from raw parts goes through these helpers.
inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" and "n/d" with optional sign, nothing else.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    auto digits_ok = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!digits_ok(num) || !digits_ok(den))
        throw ParseError("bad rational literal: " + s);
    if (num[0] == '+') num.erase(0, 1);  // mpq set_str rejects '+'
    if (den[0] == '+') den.erase(0, 1);
    Rational r;
    if (r.set_str(num + "/" + den, 10) != 0)
        throw ParseError("bad rational literal: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline double rat_double(const Rational& r) { return r.get_d(); }

// gcd(a,b) for rationals in lowest terms: gcd of numerators over lcm of
// denominators.  Nonnegative; rat_gcd(0,0) = 0.
inline Rational rat_gcd(const Rational& a, const Rational& b) {
    Integer gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
    if (gn == 0) return Rational(0);
    return rat(gn, ld);
}

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace dessin
