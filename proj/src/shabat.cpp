#include "dessin/shabat.hpp"

#include <numeric>

namespace dessin {

int ValencyData::edges() const {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

bool ValencyData::tree_property() const {
    if (alpha.empty() || beta.empty()) return false;
    for (int a : alpha)
        if (a < 1) return false;
    for (int b : beta)
        if (b < 1) return false;
    int e = edges();
    if (std::accumulate(beta.begin(), beta.end(), 0) != e) return false;
    return static_cast<int>(alpha.size() + beta.size()) == e + 1;
}

ValencyData tree_valencies(const Dessin& d) {
    ValencyData vd;
    for (const auto& cyc : d.black.cycles()) vd.alpha.push_back(static_cast<int>(cyc.size()));
    for (const auto& cyc : d.white.cycles()) vd.beta.push_back(static_cast<int>(cyc.size()));
    std::sort(vd.alpha.rbegin(), vd.alpha.rend());
    std::sort(vd.beta.rbegin(), vd.beta.rend());
    return vd;
}

ExactPoly family_star(int n) {
    if (n < 1) throw DomainError("star needs at least one edge");
    return ExactPoly::monomial(n, rat(1));
}

ExactPoly family_chebyshev(int n) {
    if (n < 1) throw DomainError("chain needs at least one edge");
    ExactPoly prev = ExactPoly::constant(rat(1));
    ExactPoly cur = ExactPoly::x();
    for (int k = 1; k < n; ++k) {
        ExactPoly next = (ExactPoly::x() * cur).scaled(rat(2)) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ExactPoly family_two_star(int m) {
    if (m < 1) throw DomainError("two-star needs at least one arm");
    ExactPoly t = ExactPoly::monomial(m, rat(1)) - ExactPoly::constant(rat(1));
    return t * t;
}

}  // namespace dessin
