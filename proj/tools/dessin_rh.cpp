#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "dessin/io.hpp"

using namespace dessin;

namespace {

struct Config {
    int precision = 53;
    double tolerance = 0.0;  // 0: each operation keeps its own default
    int max_coeff_degree = -1;
    int seeds = 128;
    std::uint64_t seed_base = 1;
    std::string format = "pretty";
};

bool json_mode(const Config& cfg) { return cfg.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::uint64_t> seed_list(const Config& cfg) {
    std::vector<std::uint64_t> seeds;
    for (int i = 0; i < cfg.seeds; ++i)
        seeds.push_back(cfg.seed_base + static_cast<std::uint64_t>(i));
    return seeds;
}

template <class C>
typename NumTraits<C>::Real solve_tol(const Config& cfg) {
    using R = typename NumTraits<C>::Real;
    return cfg.tolerance > 0 ? R(cfg.tolerance) : NumTraits<C>::default_tol();
}

template <class C>
typename NumTraits<C>::Real track_tol(const Config& cfg) {
    using R = typename NumTraits<C>::Real;
    return cfg.tolerance > 0 ? R(cfg.tolerance) : R(1e-10);
}

// runs fn with a value of the complex type selected by cfg.precision
template <class Fn>
void with_precision(int bits, Fn&& fn) {
    switch (bits) {
        case 53: fn(C53{}); return;
        case 106: fn(C106{}); return;
        case 212: fn(C212{}); return;
        default: throw ParseError("precision must be 53, 106 or 212");
    }
}

// ---------- classify ----------

void cmd_classify(const Config& cfg, const std::string& tree_file) {
    Dessin d = dessin_from_json(read_json_file(tree_file));
    TreeClass cls = classify_tree(d);
    auto rep = moebius_representation(d);
    bool dim2 = has_linear_rep_dim_le_2(d);
    if (json_mode(cfg)) {
        Json out{{"class", tree_class_str(cls)},
                 {"moebius", rep.has_value()},
                 {"dim_le_2_rep", dim2}};
        if (rep) out["transforms"] = moebius_to_json(*rep);
        emit(out);
        return;
    }
    std::cout << tree_class_str(cls) << "; Möbius: " << (rep ? "yes" : "no")
              << "; dim ≤ 2 rep: " << (dim2 ? "yes" : "no") << "\n";
    if (rep) std::cout << moebius_str(*rep) << "\n";
}

// ---------- shabat ----------

// first solution of the valency system whose monodromy matches the tree
template <class C>
void run_shabat(const Config& cfg, const Dessin& d) {
    auto sols = solve_shabat<C>(tree_valencies(d), seed_list(cfg), solve_tol<C>(cfg));
    for (const auto& sol : sols) {
        auto mr = recover_dessin(sol.poly, track_tol<C>(cfg));
        auto iso = dessins_isomorphic(Dessin(mr.sigma_0, mr.sigma_1), d);
        if (!iso) continue;
        if (json_mode(cfg)) {
            Json out = shabat_to_json(sol);
            out["monodromy"] = monodromy_to_json(mr);
            out["color_swapped"] = iso->color_swapped;
            emit(out);
        } else {
            std::cout << "P(x) = " << cpoly_str(sol.poly) << "\n";
            auto verts = [](const std::vector<std::pair<C, int>>& vs) {
                std::string s;
                for (const auto& [z, m] : vs) {
                    if (!s.empty()) s += ", ";
                    s += cplx_str(NumTraits<C>::to_double(z.real()),
                                  NumTraits<C>::to_double(z.imag()));
                    s += " (valency " + std::to_string(m) + ")";
                }
                return s;
            };
            std::cout << "black: " << verts(sol.black) << "\n";
            std::cout << "white: " << verts(sol.white) << "\n";
            std::cout << "residual: " << NumTraits<C>::to_double(sol.residual)
                      << "; monodromy certificate: " << mr.certificate << "\n";
        }
        return;
    }
    throw DomainError("no solution matches the tree");
}

void cmd_shabat(const Config& cfg, const std::string& tree_file) {
    Dessin d = dessin_from_json(read_json_file(tree_file));
    if (cfg.precision == 53 && d.edges() >= 9) {
        try {
            run_shabat<C53>(cfg, d);
            return;
        } catch (const DomainError& e) {
            std::cerr << "warning: double precision failed (" << e.what()
                      << "); retrying at 106 bits\n";
            run_shabat<C106>(cfg, d);
            return;
        }
    }
    with_precision(cfg.precision, [&](auto tag) {
        using C = decltype(tag);
        run_shabat<C>(cfg, d);
    });
}

// ---------- annihilate ----------

void emit_operator(const Config& cfg, const LinDiffOp& op) {
    if (json_mode(cfg))
        emit(operator_to_json(op));
    else
        std::cout << operator_str(op) << " = 0\n";
}

// exact minimal operator for a rational polynomial
void annihilate_exact(const Config& cfg, const ExactPoly& p) {
    emit_operator(cfg, fuchsian_annihilator(p, cfg.max_coeff_degree));
}

// numeric path: inverse germs at a small rational regular value, Wronskian
// rank, then rationalization; falls back to a numeric report
template <class C>
void annihilate_numeric(const Config& cfg, const std::vector<C>& p) {
    using R = typename NumTraits<C>::Real;
    const int n = static_cast<int>(p.size()) - 1;
    const int terms = 4 * n + 10;
    static const std::vector<std::pair<long, long>> bases{
        {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 7}, {5, 11}, {7, 13}, {11, 17}};
    for (std::size_t i = 0; i < bases.size(); ++i) {
        Rational x0 = rat(bases[i].first, bases[i].second);
        std::vector<Series<C>> germs;
        try {
            germs = power_series_inverses<C>(p, cfrom_rational<C>(x0), terms);
        } catch (const DomainError&) {
            if (i + 1 == bases.size()) throw;
            continue;  // critical value, try the next base point
        }
        auto res = wronskian_annihilator<C>(germs, R(1e-8), x0, R(1e-9));
        if (res.exact) {
            emit_operator(cfg, *res.exact);
        } else if (json_mode(cfg)) {
            emit(Json{{"order", res.order},
                      {"exact", false},
                      {"base_point", rat_str(x0)}});
        } else {
            std::cout << "order " << res.order
                      << " operator found numerically at x0 = " << rat_str(x0)
                      << "; coefficients did not rationalize\n";
        }
        return;
    }
}

void cmd_annihilate(const Config& cfg, const std::string& file) {
    Json j = read_json_file(file);
    if (j.is_object() && j.contains("coeffs")) {
        auto pc = poly_from_json<C53>(j);
        bool real = true;
        for (const auto& c : pc) real = real && c.imag() == 0.0;
        if (real) {
            std::vector<Rational> rc;
            for (const auto& c : pc) rc.emplace_back(c.real());
            annihilate_exact(cfg, ExactPoly(rc));
        } else {
            with_precision(cfg.precision, [&](auto tag) {
                using C = decltype(tag);
                annihilate_numeric<C>(cfg, poly_from_json<C>(j));
            });
        }
        return;
    }
    // tree input: normal families get their exact representative, everything
    // else goes through the solved polynomial
    Dessin d = dessin_from_json(j);
    TreeClass cls = classify_tree(d);
    switch (cls.kind) {
        case TreeKind::Star: annihilate_exact(cfg, family_star(cls.param)); return;
        case TreeKind::Chain: annihilate_exact(cfg, family_chebyshev(cls.param)); return;
        case TreeKind::TwoStar: annihilate_exact(cfg, family_two_star(cls.param)); return;
        case TreeKind::Other: break;
    }
    with_precision(cfg.precision, [&](auto tag) {
        using C = decltype(tag);
        auto sols = solve_shabat<C>(tree_valencies(d), seed_list(cfg), solve_tol<C>(cfg));
        for (const auto& sol : sols) {
            auto v = verify_riemann_hilbert(d, sol.poly, track_tol<C>(cfg));
            if (!v.matches) continue;
            annihilate_numeric<C>(cfg, sol.poly);
            return;
        }
        throw DomainError("no solution matches the tree");
    });
}

// ---------- universal ----------

void cmd_universal(const Config& cfg, int n) {
    UniversalOperator u = universal_annihilator(n);
    if (json_mode(cfg))
        emit(universal_to_json(u));
    else
        std::cout << universal_str(u) << "\n";
}

// ---------- verify ----------

void cmd_verify(const Config& cfg, const std::string& tree_file,
                const std::string& poly_file) {
    Dessin d = dessin_from_json(read_json_file(tree_file));
    Json pj = read_json_file(poly_file);
    with_precision(cfg.precision, [&](auto tag) {
        using C = decltype(tag);
        auto v = verify_riemann_hilbert(d, poly_from_json<C>(pj), track_tol<C>(cfg));
        if (json_mode(cfg)) {
            Json out{{"matches", v.matches}};
            if (v.iso) {
                out["relabel"] = v.iso->relabel.images();
                out["color_swapped"] = v.iso->color_swapped;
            }
            emit(out);
            return;
        }
        if (!v.matches) {
            std::cout << "match: no\n";
            return;
        }
        std::cout << "match: yes (colors swapped: " << (v.iso->color_swapped ? "yes" : "no")
                  << ")\n";
    });
}

int env_precision() {
    const char* env = std::getenv("DESSIN_RH_PRECISION");
    if (!env) return 53;
    std::string s(env);
    if (s == "53") return 53;
    if (s == "106") return 106;
    if (s == "212") return 212;
    throw ParseError("DESSIN_RH_PRECISION must be 53, 106 or 212");
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    std::string tree_file, poly_file, input_file;
    int universal_n = 0;

    CLI::App app{"plane trees, Shabat polynomials and annihilating operators"};
    app.require_subcommand(1);
    app.add_option("--precision", cfg.precision, "working precision in bits (53, 106, 212)")
        ->check(CLI::IsMember({53, 106, 212}));
    app.add_option("--tol", cfg.tolerance, "override the per-operation tolerances")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-degree", cfg.max_coeff_degree,
                   "coefficient degree bound for exact annihilators");
    app.add_option("--seeds", cfg.seeds, "number of solver starts")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed-base", cfg.seed_base, "first seed value");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));

    auto* classify = app.add_subcommand("classify", "tree class, Möbius and order-2 representability");
    classify->add_option("tree_file", tree_file, "dessin JSON file")->required();

    auto* shabat = app.add_subcommand("shabat", "solve the tree's Shabat polynomial");
    shabat->add_option("tree_file", tree_file, "dessin JSON file")->required();

    auto* annihilate =
        app.add_subcommand("annihilate", "minimal operator annihilating the local inverses");
    annihilate->add_option("input_file", input_file, "polynomial or dessin JSON file")
        ->required();

    auto* universal = app.add_subcommand("universal", "universal operator for generic degree n");
    universal->add_option("n", universal_n, "polynomial degree")->required();

    auto* verify = app.add_subcommand("verify", "check that a polynomial realizes a tree");
    verify->add_option("tree_file", tree_file, "dessin JSON file")->required();
    verify->add_option("poly_file", poly_file, "polynomial JSON file")->required();

    try {
        cfg.precision = env_precision();
        app.parse(argc, argv);
        if (classify->parsed()) cmd_classify(cfg, tree_file);
        if (shabat->parsed()) cmd_shabat(cfg, tree_file);
        if (annihilate->parsed()) cmd_annihilate(cfg, input_file);
        if (universal->parsed()) cmd_universal(cfg, universal_n);
        if (verify->parsed()) cmd_verify(cfg, tree_file, poly_file);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
