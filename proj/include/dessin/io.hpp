#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "dessin/annihilator.hpp"
#include "dessin/dessin.hpp"
#include "dessin/moebius.hpp"
#include "dessin/monodromy.hpp"
#include "dessin/shabat.hpp"
#include "dessin/universal.hpp"

namespace dessin {

// insertion-ordered so emitted documents read in a stable field order
using Json = nlohmann::ordered_json;

// Throws ParseError on unreadable files and invalid JSON (with the parser's
// position diagnostic).
Json read_json_file(const std::string& path);

// {"edges": e, "black": [[cycle], ...], "white": [...]} with 0-based labels;
// cycles give the counterclockwise edge order at each vertex.  Fixed points
// may be omitted on input; output lists every cycle including singletons.
Json dessin_to_json(const Dessin& d);
Dessin dessin_from_json(const Json& j);

// {"coeffs": [[["num","den"], ...] per q_k]} lowest order first, each
// coefficient list lowest degree first
Json operator_to_json(const LinDiffOp& op);

// sum q_k(x) y^(k), highest order first, e.g. "7*x y' - y"
std::string operator_str(const LinDiffOp& op);

std::vector<std::string> coeff_var_names(int n);  // {"a0", ..., "a{n-1}"}

// {"n": n, "variables": [...], "coeffs": [[[exponents, "num/den"], ...] per
// order 1..n]}; exponent vectors are padded to n entries
Json universal_to_json(const UniversalOperator& u);

// one parenthesized coefficient per derivative order, highest first, matching
// the operator displays this library is tested against
std::string universal_str(const UniversalOperator& u);

// {"sigma_0": [[cycle], ...], "sigma_1": [...], "certificate": c}
Json monodromy_to_json(const MonodromyResult& m);

Json moebius_to_json(const MoebiusRep& rep);
std::string moebius_str(const MoebiusRep& rep);

std::string cplx_str(double re, double im);

namespace detail {

double json_number(const Json& j, const std::string& where);
std::pair<double, double> json_complex(const Json& j, const std::string& where);

}  // namespace detail

template <class C>
Json complex_to_json(const C& z) {
    return Json::array({NumTraits<C>::to_double(z.real()), NumTraits<C>::to_double(z.imag())});
}

// {"coeffs": [[re, im], ...]} lowest degree first; a bare number is accepted
// as a real coefficient on input
template <class C>
Json poly_to_json(const std::vector<C>& p) {
    Json coeffs = Json::array();
    for (const auto& c : p) coeffs.push_back(complex_to_json(c));
    return Json{{"coeffs", coeffs}};
}

template <class C>
std::vector<C> poly_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError("polynomial: expected an object with a 'coeffs' array");
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array() || coeffs.empty())
        throw ParseError("polynomial: 'coeffs' must be a nonempty array");
    std::vector<C> p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        auto [re, im] =
            detail::json_complex(coeffs[i], "coeffs[" + std::to_string(i) + "]");
        p.push_back(NumTraits<C>::make(re, im));
    }
    return p;
}

// human-readable polynomial with numeric coefficients, highest degree first
template <class C>
std::string cpoly_str(const std::vector<C>& p, const std::string& var = "x") {
    std::string out;
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
        double re = NumTraits<C>::to_double(p[static_cast<std::size_t>(k)].real());
        double im = NumTraits<C>::to_double(p[static_cast<std::size_t>(k)].imag());
        if (re == 0.0 && im == 0.0) continue;
        bool neg = im == 0.0 && re < 0.0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        double mre = neg ? -re : re;
        std::string cs = im == 0.0 ? cplx_str(mre, 0.0) : "(" + cplx_str(re, im) + ")";
        bool unit = (cs == "1");
        if (!unit || k == 0) out += cs;
        if (k > 0) {
            if (!unit) out += " ";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

template <class C>
Json vertices_to_json(const std::vector<std::pair<C, int>>& verts) {
    Json out = Json::array();
    for (const auto& [z, m] : verts)
        out.push_back(Json{{"location", complex_to_json(z)}, {"valency", m}});
    return out;
}

template <class C>
Json shabat_to_json(const ShabatSolution<C>& s) {
    return Json{{"poly", poly_to_json(s.poly)},
                {"black", vertices_to_json(s.black)},
                {"white", vertices_to_json(s.white)},
                {"critical_values", Json::array({complex_to_json(s.critical_values.first),
                                                 complex_to_json(s.critical_values.second)})},
                {"residual", NumTraits<C>::to_double(s.residual)}};
}

}  // namespace dessin
