#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "dessin/rational.hpp"

namespace dessin {

// Dense univariate polynomial, coefficients lowest-first.  Invariant: no
// trailing zero coefficients, so degree() == c.size()-1 and the zero
// polynomial has an empty vector (degree -1).
template <class T>
class Poly {
  public:
    std::vector<T> c;

    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c(coeffs) { trim(); }
    explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
    static Poly x() { return monomial(1, T(1)); }
    static Poly monomial(int k, const T& coef) {
        if (coef == T(0)) return Poly();
        std::vector<T> v(static_cast<std::size_t>(k) + 1, T(0));
        v.back() = coef;
        return Poly(std::move(v));
    }

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c.size())) return T(0);
        return c[static_cast<std::size_t>(k)];
    }
    const T& lc() const { return c.back(); }  // requires nonzero

    void trim() {
        while (!c.empty() && c.back() == T(0)) c.pop_back();
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
        for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const T& s) const {
        if (s == T(0)) return Poly();
        Poly r = *this;
        for (auto& v : r.c) v *= s;
        return r;
    }

    Poly derivative() const {
        if (c.size() <= 1) return Poly();
        Poly r;
        r.c.resize(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i)
            r.c[i - 1] = c[i] * T(static_cast<int>(i));
        r.trim();
        return r;
    }

    Poly pow(int e) const {
        Poly r = constant(T(1));
        Poly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * base;
            if (e > 1) base = base * base;
        }
        return r;
    }

    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // this(g)
    Poly compose(const Poly& g) const {
        Poly acc;
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            acc = acc * g + constant(*it);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
};

using ExactPoly = Poly<Rational>;

// Euclidean division over a field: a = q*b + r with deg r < deg b.
inline std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a,
                                              const ExactPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    ExactPoly q, r = a;
    if (r.degree() >= b.degree())
        q.c.assign(static_cast<std::size_t>(r.degree() - b.degree()) + 1,
                   Rational(0));
    const Rational inv_lc = rat(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        Rational f = r.lc() * inv_lc;
        q.c[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<std::size_t>(i + k)] -= f * b.coeff(i);
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline ExactPoly operator/(const ExactPoly& a, const ExactPoly& b) {
    return divmod(a, b).first;
}
inline ExactPoly operator%(const ExactPoly& a, const ExactPoly& b) {
    return divmod(a, b).second;
}

inline bool divides(const ExactPoly& d, const ExactPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return (a % d).is_zero();
}

inline ExactPoly monic(const ExactPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(rat(1) / p.lc());
}

// Monic gcd.
inline ExactPoly poly_gcd(ExactPoly a, ExactPoly b) {
    while (!b.is_zero()) {
        ExactPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Positive rational content: gcd of all coefficients (0 for the zero poly).
inline Rational poly_content(const ExactPoly& p) {
    Rational g(0);
    for (const auto& v : p.c) g = rat_gcd(g, v);
    return g;
}

// Yun's squarefree decomposition: p = lc * prod f_i^i with the f_i monic,
// squarefree, pairwise coprime.  Returns the (f_i, i) with deg f_i > 0.
inline std::vector<std::pair<ExactPoly, int>> squarefree_decomposition(
    const ExactPoly& p) {
    std::vector<std::pair<ExactPoly, int>> out;
    if (p.degree() < 1) return out;
    ExactPoly f = monic(p);
    ExactPoly fp = f.derivative();
    ExactPoly a = poly_gcd(f, fp);
    ExactPoly b = f / a;
    ExactPoly d = fp / a - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        ExactPoly g = poly_gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b / g;
        d = d / g - b.derivative();
        ++i;
    }
    return out;
}

// substitute x -> x + a
inline ExactPoly taylor_shift(const ExactPoly& p, const Rational& a) {
    return p.compose(ExactPoly{a, rat(1)});
}

inline std::string poly_str(const ExactPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational ac = abs(c);
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        bool unit = (ac == 1);
        if (!unit || k == 0) s += rat_str(ac);
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

}  // namespace dessin
