#include "dessin/io.hpp"

#include <cstdio>
#include <fstream>

namespace dessin {

namespace detail {

double json_number(const Json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    return j.get<double>();
}

std::pair<double, double> json_complex(const Json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && (j.size() == 1 || j.size() == 2)) {
        double re = json_number(j[0], where + "[0]");
        double im = j.size() == 2 ? json_number(j[1], where + "[1]") : 0.0;
        return {re, im};
    }
    throw ParseError(where + ": expected [re, im]");
}

}  // namespace detail

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

Json cycles_to_json(const Permutation& p) {
    Json out = Json::array();
    for (const auto& cyc : p.cycles()) out.push_back(cyc);
    return out;
}

Permutation cycles_from_json(int edges, const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an array of cycles");
    std::vector<std::vector<int>> cycles;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& cyc = j[i];
        const std::string at = where + "[" + std::to_string(i) + "]";
        if (!cyc.is_array()) throw ParseError(at + ": expected a cycle (array of labels)");
        std::vector<int> c;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            if (!cyc[k].is_number_integer())
                throw ParseError(at + "[" + std::to_string(k) + "]: expected an edge label");
            c.push_back(cyc[k].get<int>());
        }
        cycles.push_back(std::move(c));
    }
    try {
        return Permutation::from_cycles(edges, cycles);
    } catch (const DomainError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

Json dessin_to_json(const Dessin& d) {
    return Json{{"edges", d.edges()},
                {"black", cycles_to_json(d.black)},
                {"white", cycles_to_json(d.white)}};
}

Dessin dessin_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("dessin: expected an object");
    for (const char* key : {"edges", "black", "white"})
        if (!j.contains(key)) throw ParseError(std::string("dessin: missing '") + key + "'");
    if (!j.at("edges").is_number_integer() || j.at("edges").get<int>() < 1)
        throw ParseError("dessin: 'edges' must be a positive integer");
    int e = j.at("edges").get<int>();
    return Dessin(cycles_from_json(e, j.at("black"), "black"),
                  cycles_from_json(e, j.at("white"), "white"));
}

Json operator_to_json(const LinDiffOp& op) {
    Json qs = Json::array();
    for (const auto& q : op.q) {
        Json coeffs = Json::array();
        for (const auto& c : q.c)
            coeffs.push_back(Json::array({c.get_num().get_str(), c.get_den().get_str()}));
        qs.push_back(coeffs);
    }
    return Json{{"order", op.order()}, {"coeffs", qs}};
}

namespace {

std::string derivative_str(int k) {
    if (k == 0) return "y";
    if (k <= 3) return "y" + std::string(static_cast<std::size_t>(k), '\'');
    return "y^(" + std::to_string(k) + ")";
}

int term_count(const ExactPoly& p) {
    int n = 0;
    for (const auto& c : p.c)
        if (c != 0) ++n;
    return n;
}

}  // namespace

std::string operator_str(const LinDiffOp& op) {
    std::string out;
    for (int k = op.order(); k >= 0; --k) {
        const ExactPoly& q = op.coeff(k);
        if (q.is_zero()) continue;
        std::string s = poly_str(q);
        bool neg = term_count(q) == 1 && s[0] == '-';
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (neg) s = s.substr(1);
        if (term_count(q) > 1) s = "(" + s + ")";
        if (s != "1") out += s + " ";
        out += derivative_str(k);
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> coeff_var_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

Json universal_to_json(const UniversalOperator& u) {
    Json orders = Json::array();
    for (const auto& c : u.coeffs) {
        Json terms = Json::array();
        for (const auto& [e, coef] : c.terms) {
            std::vector<int> exps = e;
            exps.resize(static_cast<std::size_t>(u.n), 0);
            terms.push_back(Json::array({exps, rat_str(coef)}));
        }
        orders.push_back(terms);
    }
    return Json{{"n", u.n}, {"variables", coeff_var_names(u.n)}, {"coeffs", orders}};
}

std::string universal_str(const UniversalOperator& u) {
    auto names = coeff_var_names(u.n);
    std::string out;
    for (int k = u.n; k >= 1; --k) {
        if (!out.empty()) out += "\n  + ";
        out += "(" + mpoly_str(u.coeffs[static_cast<std::size_t>(k - 1)], names) + ") ";
        if (k == 1)
            out += "d/da0";
        else
            out += "d^" + std::to_string(k) + "/da0^" + std::to_string(k);
    }
    return out;
}

Json monodromy_to_json(const MonodromyResult& m) {
    return Json{{"sigma_0", cycles_to_json(m.sigma_0)},
                {"sigma_1", cycles_to_json(m.sigma_1)},
                {"certificate", m.certificate}};
}

std::string cplx_str(double re, double im) {
    char buf[64];
    if (im == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12g", re);
        return buf;
    }
    if (re == 0.0) {
        std::snprintf(buf, sizeof buf, "%.12gi", im);
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

namespace {

Json cplx_to_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

Json transform_to_json(const MoebiusTransform& t) {
    return Json{{"a", cplx_to_json(t.a)},
                {"b", cplx_to_json(t.b)},
                {"c", cplx_to_json(t.c)},
                {"d", cplx_to_json(t.d)}};
}

std::string linear_str(const Cplx& s, const Cplx& t) {
    std::string out;
    if (s != 0.0) out += (s == 1.0 ? "z" : "(" + cplx_str(s.real(), s.imag()) + ") z");
    if (t != 0.0 || out.empty()) {
        if (!out.empty()) out += " + ";
        out += cplx_str(t.real(), t.imag());
    }
    return out;
}

std::string transform_str(const MoebiusTransform& t) {
    std::string num = linear_str(t.a, t.b);
    if (t.c == 0.0 && t.d == 1.0) return "z -> " + num;
    return "z -> (" + num + ") / (" + linear_str(t.c, t.d) + ")";
}

}  // namespace

Json moebius_to_json(const MoebiusRep& rep) {
    Json pts = Json::array();
    for (const auto& z : rep.edge_points) pts.push_back(cplx_to_json(z));
    return Json{{"A", transform_to_json(rep.A)},
                {"B", transform_to_json(rep.B)},
                {"edge_points", pts}};
}

std::string moebius_str(const MoebiusRep& rep) {
    return "A: " + transform_str(rep.A) + "\nB: " + transform_str(rep.B);
}

}  // namespace dessin
