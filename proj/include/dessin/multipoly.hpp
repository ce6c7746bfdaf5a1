#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "dessin/poly.hpp"

namespace dessin {

// Exponent vector; index = variable number.  Vectors of different lengths are
// compatible: shorter ones are implicitly zero-padded (Q[x_0..x_k] embeds in
// Q[x_0..x_m] for k <= m).
using Exps = std::vector<int>;

inline int total_deg(const Exps& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// graded lexicographic: degree first, then lex on exponents
struct GrlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = total_deg(a), db = total_deg(b);
        if (da != db) return da < db;
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            int ai = i < a.size() ? a[i] : 0;
            int bi = i < b.size() ? b[i] : 0;
            if (ai != bi) return ai < bi;
        }
        return false;
    }
};

// graded reverse lexicographic: degree first, then the rightmost nonzero
// entry of a-b decides (positive means a is smaller)
struct GrevlexLess {
    bool operator()(const Exps& a, const Exps& b) const {
        int da = total_deg(a), db = total_deg(b);
        if (da != db) return da < db;
        std::size_t n = std::max(a.size(), b.size());
        for (std::size_t i = n; i-- > 0;) {
            int ai = i < a.size() ? a[i] : 0;
            int bi = i < b.size() ? b[i] : 0;
            if (ai != bi) return ai > bi;
        }
        return false;
    }
};

// Sparse multivariate polynomial over Q.  Terms are stored grlex-ascending
// with no zero coefficients and no trailing zeros in exponent vectors.
class MPoly {
  public:
    std::map<Exps, Rational, GrlexLess> terms;

    MPoly() = default;
    explicit MPoly(int constant) {
        if (constant != 0) terms[{}] = rat(constant);
    }
    explicit MPoly(const Rational& constant) {
        if (constant != 0) terms[{}] = constant;
    }

    static MPoly var(int i) {
        MPoly p;
        Exps e(static_cast<std::size_t>(i) + 1, 0);
        e.back() = 1;
        p.terms[e] = 1;
        return p;
    }
    static MPoly monomial(Exps e, const Rational& c) {
        MPoly p;
        p.add_term(std::move(e), c);
        return p;
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }
    int degree() const {
        return terms.empty() ? -1 : total_deg(terms.rbegin()->first);
    }
    int nvars() const {
        std::size_t n = 0;
        for (const auto& [e, c] : terms) n = std::max(n, e.size());
        return static_cast<int>(n);
    }

    void add_term(Exps e, const Rational& c) {
        if (c == 0) return;
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto [it, inserted] = terms.emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        for (const auto& [e, c] : b.terms) r.add_term(e, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    MPoly scaled(const Rational& s) const {
        if (s == 0) return MPoly();
        MPoly r = *this;
        for (auto& [e, c] : r.terms) c *= s;
        return r;
    }

    MPoly pow(int e) const {
        MPoly r(1), base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    MPoly derivative(int var) const;
    Rational eval(const std::vector<Rational>& x) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.terms == b.terms;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
};

MPoly subst_var(const MPoly& p, int var, const MPoly& value);

// Exact multivariate division; returns false (and leaves q empty) if b does
// not divide a.
bool exact_divide(const MPoly& a, const MPoly& b, MPoly& q);

Rational mpoly_content(const MPoly& p);  // gcd of coefficients, nonnegative

// leading term under grevlex (degree ties broken by rightmost-nonzero rule)
std::pair<Exps, Rational> grevlex_leading(const MPoly& p);

// weighted degree of the leading weighted-homogeneous component; -1 for zero.
// is_weighted_homogeneous also reports the common degree via wdeg.
int weighted_degree(const Exps& e, const std::vector<int>& weights);
bool is_weighted_homogeneous(const MPoly& p, const std::vector<int>& weights,
                             int* wdeg = nullptr);

MPoly mpoly_parse(const std::string& s, const std::vector<std::string>& vars);
std::string mpoly_str(const MPoly& p, const std::vector<std::string>& vars);

}  // namespace dessin
