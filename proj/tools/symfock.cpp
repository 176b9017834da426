// symfock: command-line front end for the symmetric-function, kernel, Gauss,
// wedge and character computations. Results go to stdout as JSON unless a
// text or CSV format is requested; errors go to stderr with a nonzero exit.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symfock/acceptance.hpp"
#include "symfock/bosonfermion.hpp"
#include "symfock/characters.hpp"
#include "symfock/gauss.hpp"
#include "symfock/gauss_check.hpp"
#include "symfock/inner.hpp"
#include "symfock/json_io.hpp"
#include "symfock/kernelop.hpp"
#include "symfock/symplectic.hpp"
#include "symfock/wedge.hpp"

using namespace symfock;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int degree_cap() {
    if (const char* env = std::getenv("SYMFOCK_MAX_DEGREE")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("SYMFOCK_MAX_DEGREE: not an integer: '") + env + "'");
        }
    }
    return 12;
}

int checked_cutoff(int value, const std::string& field) {
    const int cap = degree_cap();
    if (value < 0) throw UsageError("field '" + field + "': must be >= 0, got " + std::to_string(value));
    if (value > cap)
        throw UsageError("field '" + field + "': " + std::to_string(value) + " exceeds the cap " +
                         std::to_string(cap) + " (set SYMFOCK_MAX_DEGREE to raise it)");
    return value;
}

bool names_file(const std::string& arg) {
    return arg == "-" || (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0);
}

Json load(const std::string& path) {
    try {
        return read_json_file(path);
    } catch (const JsonFormatError&) {
        throw;
    } catch (const std::exception& e) {
        throw JsonFormatError("file '" + path + "': " + e.what());
    }
}

// "s:(2,1)", "-3/2*p:(3)", "s:(2)+s:(1,1)"; the empty partition is "s:()".
SymFun parse_sym_literal(const std::string& text, const std::string& field) {
    std::vector<std::string> pieces;
    int depth = 0;
    std::string cur;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == '+' && depth == 0 && !cur.empty()) {
            pieces.push_back(cur);
            cur.clear();
            continue;
        }
        cur += ch;
    }
    if (!cur.empty()) pieces.push_back(cur);
    if (pieces.empty()) throw UsageError("field '" + field + "': empty symmetric-function literal");

    struct Term {
        Basis b;
        Partition p;
        Scalar c;
    };
    std::vector<Term> terms;
    int degree = 0;
    for (const auto& piece : pieces) {
        try {
            std::string body = piece;
            Scalar c(1);
            if (auto star = body.find('*'); star != std::string::npos) {
                c = Scalar::parse(body.substr(0, star));
                body = body.substr(star + 1);
            }
            auto colon = body.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("expected BASIS:(PARTITION)");
            Term t{parse_basis(body.substr(0, colon)), parse_partition(body.substr(colon + 1)), c};
            degree = std::max(degree, weight(t.p));
            terms.push_back(std::move(t));
        } catch (const std::exception& e) {
            throw UsageError("field '" + field + "': cannot parse '" + piece + "': " + e.what());
        }
    }
    for (const auto& t : terms)
        if (t.b != terms.front().b)
            throw UsageError("field '" + field + "': all terms of a literal must use one basis");
    SymFun f(terms.front().b, degree);
    for (const auto& t : terms) f.add_term(t.p, t.c);
    return f;
}

SymFun load_symfun(const std::string& arg, const std::string& field) {
    if (names_file(arg)) {
        try {
            return symfun_from_json(load(arg));
        } catch (const JsonFormatError& e) {
            throw JsonFormatError("field '" + field + "' (" + arg + "): " + e.what());
        }
    }
    return parse_sym_literal(arg, field);
}

KerovWeight parse_weight(const std::string& spec) {
    try {
        return KerovWeight::parse(spec);
    } catch (const std::exception& e) {
        throw UsageError(std::string("field 'weight': ") + e.what());
    }
}

Partition parse_partition_arg(const std::string& s, const std::string& field) {
    try {
        return parse_partition(s);
    } catch (const std::exception& e) {
        throw UsageError("field '" + field + "': " + e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string format_check(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return fmt;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("field 'format': unknown format '" + fmt + "' (expected " + list + ")");
}

// Pads the smaller window with zeros so the two parameter sets can compose.
std::pair<GaussParams, GaussParams> same_window(GaussParams a, GaussParams b) {
    const int W = std::max(a.window(), b.window());
    if (a.window() < W) a = padded(a, W);
    if (b.window() < W) b = padded(b, W);
    return {a, b};
}

Json char_table_json(const CharacterTable& t) {
    Json parts = Json::array(), rows = Json::array();
    for (const auto& p : t.partitions) parts.push_back(partition_str(p));
    for (const auto& row : t.value) rows.push_back(row);
    return {{"n", t.n}, {"partitions", parts}, {"values", rows}};
}

Json zpoly_json(const ZPoly& g) {
    Json terms = Json::array();
    for (const auto& [mono, c] : g.terms) terms.push_back({{"monomial", mono}, {"coeff", scalar_to_json(Scalar(c))}});
    return terms;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric functions, Fock-space kernels and the semi-infinite wedge."};
    app.require_subcommand(1);
    std::string format = "json";
    std::string weight_spec = "classical";
    std::uint64_t seed = kDefaultSeed;

    // sym
    auto* sym = app.add_subcommand("sym", "symmetric functions: convert, multiply");
    sym->require_subcommand(1);
    std::string sym_a, sym_b, sym_to = "s";
    int sym_degree = -1;
    auto* sym_convert = sym->add_subcommand("convert", "change basis");
    sym_convert->add_option("f", sym_a, "literal such as s:(2,1) or a .json file")->required();
    sym_convert->add_option("--to", sym_to, "target basis p, m or s");
    sym_convert->add_option("--degree", sym_degree, "truncation degree");
    sym_convert->add_option("--format", format, "json or text");
    auto* sym_mul = sym->add_subcommand("multiply", "product of two functions");
    sym_mul->add_option("f", sym_a)->required();
    sym_mul->add_option("g", sym_b)->required();
    sym_mul->add_option("--degree", sym_degree, "truncation degree");
    sym_mul->add_option("--format", format, "json or text");

    // inner
    auto* inner = app.add_subcommand("inner", "weighted scalar product <f, g>");
    std::string in_f, in_g;
    inner->add_option("--weight", weight_spec, "classical, jack:ALPHA, hl, macdonald, custom:w1,...");
    inner->add_option("f", in_f)->required();
    inner->add_option("g", in_g)->required();

    // kernel
    auto* kernel = app.add_subcommand("kernel", "bisymmetric kernels");
    kernel->require_subcommand(1);
    std::string k_a, k_b;
    int k_degree = 6;
    auto* k_id = kernel->add_subcommand("identity", "reproducing kernel of the weight");
    k_id->add_option("--weight", weight_spec);
    k_id->add_option("--degree", k_degree);
    auto* k_gauss = kernel->add_subcommand("gauss", "kernel of a Gauss parameter file");
    k_gauss->add_option("params", k_a)->required();
    k_gauss->add_option("--degree", k_degree);
    auto* k_apply = kernel->add_subcommand("apply", "apply a kernel file to a function");
    k_apply->add_option("kernel", k_a)->required();
    k_apply->add_option("f", k_b)->required();
    k_apply->add_option("--weight", weight_spec);
    auto* k_comp = kernel->add_subcommand("compose", "compose two kernel files");
    k_comp->add_option("k", k_a)->required();
    k_comp->add_option("l", k_b)->required();
    k_comp->add_option("--weight", weight_spec);

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Gauss parameters");
    gauss->require_subcommand(1);
    std::string g_a, g_b;
    bool g_fock = false;
    int g_degree = 6;
    auto* g_comp = gauss->add_subcommand("compose", "parameters of the product of two Gauss kernels");
    g_comp->add_option("a", g_a)->required();
    g_comp->add_option("b", g_b)->required();
    g_comp->add_option("--weight", weight_spec);
    g_comp->add_flag("--fock", g_fock, "use the weight-free gauge");
    auto* g_check = gauss->add_subcommand("check", "verify the composition law on kernels");
    g_check->add_option("a", g_a)->required();
    g_check->add_option("b", g_b)->required();
    g_check->add_option("--weight", weight_spec);
    g_check->add_option("--degree", g_degree);

    // relation
    auto* relation = app.add_subcommand("relation", "linear relations");
    relation->require_subcommand(1);
    std::string r_a, r_b;
    auto* r_from = relation->add_subcommand("from-gauss", "relation of a Gauss parameter file");
    r_from->add_option("params", r_a)->required();
    auto* r_comp = relation->add_subcommand("compose", "Q o P");
    r_comp->add_option("q", r_a)->required();
    r_comp->add_option("p", r_b)->required();
    auto* r_geom = relation->add_subcommand("geometry", "Lagrangian and contractivity report");
    r_geom->add_option("relation", r_a)->required();

    // wedge
    auto* wedge = app.add_subcommand("wedge", "semi-infinite wedge space");
    wedge->require_subcommand(1);
    std::string w_a, w_b;
    int w_energy = 6;
    auto* w_expand = wedge->add_subcommand("expand", "coefficients of a decomposable vector");
    w_expand->add_option("params", w_a)->required();
    w_expand->add_option("--energy", w_energy);
    auto* w_inner = wedge->add_subcommand("inner", "inner product of two decomposable vectors");
    w_inner->add_option("a", w_a)->required();
    w_inner->add_option("b", w_b)->required();
    auto* w_gl = wedge->add_subcommand("gl", "apply a GL element to a wedge vector");
    w_gl->add_option("element", w_a)->required();
    w_gl->add_option("vector", w_b)->required();
    w_gl->add_option("--energy", w_energy);

    // bf
    auto* bf = app.add_subcommand("bf", "boson-fermion dictionary");
    bf->require_subcommand(1);
    std::string b_a, b_form = "R";
    int b_degree = 6;
    auto* bf_fwd = bf->add_subcommand("forward", "symmetric function to wedge vector");
    bf_fwd->add_option("f", b_a)->required();
    bf_fwd->add_option("--degree", b_degree);
    auto* bf_inv = bf->add_subcommand("inverse", "wedge vector to symmetric function");
    bf_inv->add_option("vector", b_a)->required();
    bf_inv->add_option("--degree", b_degree);
    bf_inv->add_option("--form", b_form, "R or Q");
    auto* bf_pre = bf->add_subcommand("preimage", "symmetric function of a decomposable vector");
    bf_pre->add_option("params", b_a)->required();
    bf_pre->add_option("--degree", b_degree);

    // char
    auto* chr = app.add_subcommand("char", "symmetric group characters");
    chr->require_subcommand(1);
    int c_n = 0, c_cutoff = -1;
    std::string c_mu, c_lambda, c_form = "R";
    auto* c_table = chr->add_subcommand("table", "character table of S_N");
    c_table->add_option("N", c_n)->required();
    c_table->add_option("--format", format, "csv or json");
    auto* c_value = chr->add_subcommand("value", "chi^MU at cycle type LAMBDA");
    c_value->add_option("MU", c_mu)->required();
    c_value->add_option("LAMBDA", c_lambda)->required();
    auto* c_gen = chr->add_subcommand("genfunc", "determinant generating function of chi^MU");
    c_gen->add_option("MU", c_mu)->required();
    c_gen->add_option("--form", c_form, "R or Q");
    c_gen->add_option("--cutoff", c_cutoff, "weighted degree cutoff (default |MU|)");

    // roundtrip: read with the typed reader and write back
    auto* roundtrip = app.add_subcommand("roundtrip", "re-emit a JSON file through its reader");
    std::string rt_kind, rt_file;
    int rt_cutoff = -1;
    roundtrip->add_option("kind", rt_kind, "symfun, kernel, gauss, relation, wedge, gl or decomposable")->required();
    roundtrip->add_option("file", rt_file)->required();
    roundtrip->add_option("--cutoff", rt_cutoff, "cutoff for a bare wedge term list");

    // selftest
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    int only = 0;
    selftest->add_option("--seed", seed, "seed for the randomized criteria");
    selftest->add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 10));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sym) {
            SymFun f = load_symfun(sym_a, "f");
            if (*sym_mul) {
                SymFun g = load_symfun(sym_b, "g");
                const int D = checked_cutoff(sym_degree >= 0 ? sym_degree : f.degree() + g.degree(), "degree");
                if (g.basis() != f.basis()) g = convert(g, f.basis());
                f = multiply(f.truncated(D), g.truncated(D)).truncated(D);
            } else {
                if (sym_degree >= 0) f = f.truncated(checked_cutoff(sym_degree, "degree"));
                checked_cutoff(f.degree(), "degree");
                Basis to;
                try {
                    to = parse_basis(sym_to);
                } catch (const std::exception& e) {
                    throw UsageError(std::string("field 'to': ") + e.what());
                }
                f = convert(f, to);
            }
            if (format_check(format, {"json", "text"}) == "text")
                std::cout << f.str() << "\n";
            else
                emit(symfun_to_json(f));
        } else if (*inner) {
            const KerovWeight w = parse_weight(weight_spec);
            SymFun f = load_symfun(in_f, "f"), g = load_symfun(in_g, "g");
            checked_cutoff(std::max(f.degree(), g.degree()), "degree");
            std::cout << inner_product(f, g, w).str() << "\n";
        } else if (*kernel) {
            if (*k_id) {
                emit(kernel_to_json(identity_kernel(parse_weight(weight_spec), checked_cutoff(k_degree, "degree"))));
            } else if (*k_gauss) {
                emit(kernel_to_json(gauss_kernel(gauss_from_json(load(k_a)), checked_cutoff(k_degree, "degree"))));
            } else if (*k_apply) {
                const KerovWeight w = parse_weight(weight_spec);
                const BisymKernel K = kernel_from_json(load(k_a));
                emit(symfun_to_json(apply(K, load_symfun(k_b, "f"), w)));
            } else {
                const KerovWeight w = parse_weight(weight_spec);
                const BisymKernel K = kernel_from_json(load(k_a)), L = kernel_from_json(load(k_b));
                if (K.dy() != L.dx())
                    throw UsageError("field 'dy': first kernel has dy = " + std::to_string(K.dy()) +
                                     " but the second has dx = " + std::to_string(L.dx()));
                emit(kernel_to_json(compose(K, L, w)));
            }
        } else if (*gauss) {
            auto [S1, S2] = same_window(gauss_from_json(load(g_a)), gauss_from_json(load(g_b)));
            if (*g_comp) {
                emit(gauss_to_json(g_fock ? gauss_compose_fock(S1, S2) : gauss_compose(S1, S2, parse_weight(weight_spec))));
            } else {
                const CheckResult r =
                    check_gauss_compose(S1, S2, parse_weight(weight_spec), checked_cutoff(g_degree, "degree"));
                std::cout << (r.ok ? "ok" : "mismatch") << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
                return r.ok ? 0 : 1;
            }
        } else if (*relation) {
            if (*r_from) {
                emit(relation_to_json(relation_from_S(gauss_from_json(load(r_a)))));
            } else if (*r_comp) {
                const LinearRelation Q = relation_from_json(load(r_a)), P = relation_from_json(load(r_b));
                emit(relation_to_json(compose_relations(Q, P)));
            } else {
                std::cout << check_geometry(relation_from_json(load(r_a))).str();
            }
        } else if (*wedge) {
            if (*w_expand) {
                emit(wedge_to_json(expand_decomposable(decomposable_from_json(load(w_a)), checked_cutoff(w_energy, "energy"))));
            } else if (*w_inner) {
                std::cout << wedge_inner(decomposable_from_json(load(w_a)), decomposable_from_json(load(w_b))).str() << "\n";
            } else {
                const int E = checked_cutoff(w_energy, "energy");
                emit(wedge_to_json(gl_action(gl_from_json(load(w_a)), wedge_from_json(load(w_b), E), E)));
            }
        } else if (*bf) {
            const int D = checked_cutoff(b_degree, "degree");
            if (*bf_fwd) {
                emit(wedge_to_json(delta_times(load_symfun(b_a, "f"), D)));
            } else if (*bf_inv) {
                const WedgeVector g = wedge_from_json(load(b_a), D);
                if (b_form != "R" && b_form != "Q")
                    throw UsageError("field 'form': expected R or Q, got '" + b_form + "'");
                emit(symfun_to_json(b_form == "R" ? bf_inverse(g, D) : bf_inverse_q(g, D)));
            } else {
                emit(symfun_to_json(pi_vector(decomposable_from_json(load(b_a)), D)));
            }
        } else if (*chr) {
            if (*c_table) {
                const CharacterTable t = char_table(checked_cutoff(c_n, "N"));
                if (format_check(format, {"csv", "json"}) == "csv")
                    std::cout << t.csv();
                else
                    emit(char_table_json(t));
            } else if (*c_value) {
                const Partition mu = parse_partition_arg(c_mu, "MU"), lambda = parse_partition_arg(c_lambda, "LAMBDA");
                checked_cutoff(weight(mu), "MU");
                if (weight(mu) != weight(lambda))
                    throw UsageError("field 'LAMBDA': |LAMBDA| = " + std::to_string(weight(lambda)) +
                                     " differs from |MU| = " + std::to_string(weight(mu)));
                std::cout << char_value(mu, lambda) << "\n";
            } else {
                const Partition mu = parse_partition_arg(c_mu, "MU");
                const int K = checked_cutoff(c_cutoff >= 0 ? c_cutoff : weight(mu), "cutoff");
                if (c_form != "R" && c_form != "Q")
                    throw UsageError("field 'form': expected R or Q, got '" + c_form + "'");
                const ZPoly g = c_form == "R" ? genfunc_R(mu, K) : genfunc_Q(mu, K);
                Json chars = Json::object();
                if (K >= weight(mu))
                    for (const auto& lambda : enumerate_partitions(weight(mu)))
                        chars[partition_str(lambda)] = scalar_to_json(Scalar(genfunc_character(g, lambda)));
                emit({{"mu", partition_str(mu)},
                      {"form", c_form},
                      {"cutoff", K},
                      {"terms", zpoly_json(g)},
                      {"characters", chars}});
            }
        } else if (*roundtrip) {
            const Json j = load(rt_file);
            if (rt_kind == "symfun") emit(symfun_to_json(symfun_from_json(j)));
            else if (rt_kind == "kernel") emit(kernel_to_json(kernel_from_json(j)));
            else if (rt_kind == "gauss") emit(gauss_to_json(gauss_from_json(j)));
            else if (rt_kind == "relation") emit(relation_to_json(relation_from_json(j)));
            else if (rt_kind == "wedge") emit(wedge_to_json(wedge_from_json(j, rt_cutoff)));
            else if (rt_kind == "gl") emit(gl_to_json(gl_from_json(j)));
            else if (rt_kind == "decomposable") emit(decomposable_to_json(decomposable_from_json(j)));
            else throw UsageError("field 'kind': unknown kind '" + rt_kind + "'");
        } else if (*selftest) {
            bool all = true;
            run_acceptance(seed, only ? std::vector<int>{only} : std::vector<int>{}, [&](const CriterionResult& r) {
                std::cout << format_result(r) << std::endl;
                all = all && r.pass;
            });
            std::cout << "selftest: " << (all ? "PASS" : "FAIL") << "\n";
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const JsonFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
