#include "dessin/multipoly.hpp"

#include <cctype>

#include "dessin/errors.hpp"

namespace dessin {

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ea, ca] : a.terms) {
        for (const auto& [eb, cb] : b.terms) {
            Exps e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r;
    const auto v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms) {
        if (v >= e.size() || e[v] == 0) continue;
        Exps d = e;
        d[v] -= 1;
        r.add_term(std::move(d), c * rat(e[v]));
    }
    return r;
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
    Rational acc(0);
    for (const auto& [e, c] : terms) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= x.size()) throw DomainError("eval: missing variable value");
            Rational p = x[i];
            for (int k = 1; k < e[i]; ++k) p *= x[i];
            t *= p;
        }
        acc += t;
    }
    return acc;
}

MPoly subst_var(const MPoly& p, int var, const MPoly& value) {
    const auto v = static_cast<std::size_t>(var);
    int maxexp = 0;
    for (const auto& [e, c] : p.terms)
        if (v < e.size()) maxexp = std::max(maxexp, e[v]);
    std::vector<MPoly> powers(static_cast<std::size_t>(maxexp) + 1, MPoly(1));
    for (int k = 1; k <= maxexp; ++k)
        powers[static_cast<std::size_t>(k)] =
            powers[static_cast<std::size_t>(k - 1)] * value;
    MPoly r;
    for (const auto& [e, c] : p.terms) {
        int k = v < e.size() ? e[v] : 0;
        Exps rest = e;
        if (v < rest.size()) rest[v] = 0;
        r = r + MPoly::monomial(std::move(rest), c) * powers[static_cast<std::size_t>(k)];
    }
    return r;
}

bool exact_divide(const MPoly& a, const MPoly& b, MPoly& q) {
    q = MPoly();
    if (b.is_zero()) return a.is_zero();
    MPoly r = a;
    const auto& [eb, cb] = *b.terms.rbegin();
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms.rbegin();
        Exps e(std::max(er.size(), eb.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            int x = (i < er.size() ? er[i] : 0) - (i < eb.size() ? eb[i] : 0);
            if (x < 0) {
                q = MPoly();
                return false;
            }
            e[i] = x;
        }
        MPoly t = MPoly::monomial(std::move(e), cr / cb);
        q = q + t;
        r = r - t * b;
    }
    return true;
}

Rational mpoly_content(const MPoly& p) {
    Rational g(0);
    for (const auto& [e, c] : p.terms) g = rat_gcd(g, c);
    return g;
}

std::pair<Exps, Rational> grevlex_leading(const MPoly& p) {
    if (p.is_zero()) throw DomainError("leading term of zero polynomial");
    GrevlexLess less;
    auto best = p.terms.begin();
    for (auto it = std::next(p.terms.begin()); it != p.terms.end(); ++it)
        if (less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

int weighted_degree(const Exps& e, const std::vector<int>& weights) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        d += e[i] * (i < weights.size() ? weights[i] : 0);
    return d;
}

bool is_weighted_homogeneous(const MPoly& p, const std::vector<int>& weights,
                             int* wdeg) {
    if (p.is_zero()) {
        if (wdeg) *wdeg = -1;
        return true;
    }
    int d = weighted_degree(p.terms.begin()->first, weights);
    for (const auto& [e, c] : p.terms)
        if (weighted_degree(e, weights) != d) return false;
    if (wdeg) *wdeg = d;
    return true;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;

    explicit Lexer(const std::string& str) : s(str) {}

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::string number() {
        skip();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        std::string out = s.substr(i, j - i);
        i = j;
        return out;
    }
    std::string name() {
        skip();
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
            return {};
        std::size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        std::string out = s.substr(i, j - i);
        i = j;
        return out;
    }
};

struct Parser {
    Lexer lx;
    const std::vector<std::string>& vars;

    Parser(const std::string& s, const std::vector<std::string>& v)
        : lx(s), vars(v) {}

    int var_index(const std::string& n) {
        for (std::size_t k = 0; k < vars.size(); ++k)
            if (vars[k] == n) return static_cast<int>(k);
        throw ParseError("unknown variable: " + n);
    }

    MPoly parse_expr() {
        MPoly acc = parse_term();
        while (true) {
            if (lx.accept('+'))
                acc = acc + parse_term();
            else if (lx.accept('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (true) {
            char c = lx.peek();
            if (c == '*') {
                lx.accept('*');
                acc = acc * parse_factor();
            } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * parse_factor();  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    MPoly parse_factor() {
        MPoly base = parse_primary();
        if (lx.accept('^')) {
            std::string n = lx.number();
            if (n.empty()) throw ParseError("missing exponent");
            base = base.pow(std::stoi(n));
        }
        return base;
    }

    MPoly parse_primary() {
        char c = lx.peek();
        if (c == '-') {
            lx.accept('-');
            return -parse_factor();
        }
        if (c == '+') {
            lx.accept('+');
            return parse_factor();
        }
        if (c == '(') {
            lx.accept('(');
            MPoly inner = parse_expr();
            if (!lx.accept(')')) throw ParseError("missing ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = lx.number();
            if (lx.peek() == '/') {
                lx.accept('/');
                std::string den = lx.number();
                if (den.empty()) throw ParseError("missing denominator");
                return MPoly(rat_parse(num + "/" + den));
            }
            return MPoly(rat_parse(num));
        }
        std::string n = lx.name();
        if (n.empty()) throw ParseError("unexpected character in polynomial");
        return MPoly::var(var_index(n));
    }
};

}  // namespace

MPoly mpoly_parse(const std::string& s, const std::vector<std::string>& vars) {
    Parser p(s, vars);
    MPoly r = p.parse_expr();
    if (!p.lx.eof()) throw ParseError("trailing input in polynomial");
    return r;
}

std::string mpoly_str(const MPoly& p, const std::vector<std::string>& vars) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Rational ac = abs(c);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += i < vars.size() ? vars[i] : "x" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += rat_str(ac);
        } else {
            if (ac != 1) out += rat_str(ac) + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace dessin
