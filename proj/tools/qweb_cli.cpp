#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "qweb/catalog.hpp"
#include "qweb/qfunctor.hpp"
#include "qweb/sergeev.hpp"
#include "qweb/shifted.hpp"
#include "qweb/web.hpp"

using json = nlohmann::json;
using namespace qweb;

namespace {

// Bad input from the user. Exits with status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StrictPartition partition_arg(const std::string& s, const char* what) {
    try {
        return StrictPartition::parse(s);
    } catch (const std::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

int cmd_eval(int n, const std::string& text, const std::string& emit_kind, bool with_basis) {
    WebExpr w;
    WebType t;
    try {
        w = parse_dsl(text);
        t = typecheck(w);
    } catch (const ParseError& e) {
        throw UsageError(std::string("parse error: ") + e.what());
    } catch (const TypeError& e) {
        throw UsageError(std::string("type error: ") + e.what() + (e.path.empty() ? "" : " in " + e.path));
    }
    if (emit_kind == "json") {
        emit({{"ast", to_json(w)}, {"dom", t.dom.str()}, {"cod", t.cod.str()}, {"dsl", format_dsl(w)}});
        return 0;
    }
    if (n < 1) throw UsageError("-n must be at least 1");
    SuperMatrix m = eval_web(n, w);
    json j = m.to_json();
    if (with_basis) {
        j["dom_word"] = t.dom.str();
        j["cod_word"] = t.cod.str();
    }
    emit(j);
    std::cerr << "eval: " << t.dom.str() << " -> " << t.cod.str() << ", " << m.rows() << "x" << m.cols() << ", n=" << n
              << "\n";
    return 0;
}

int cmd_check(const std::string& only, int kmax, int nmax, bool no_time) {
    Ranges r = Ranges::from_env();
    if (kmax > 0) r.kmax = kmax;
    if (nmax > 0) r.nmax = nmax;
    std::vector<CheckResult> res;
    try {
        res = run_catalog(only, r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::size_t pass = 0, fail = 0, unverified = 0;
    double ms = 0;
    for (const auto& c : res) {
        emit(c.to_json(!no_time));
        ms += c.ms;
        switch (c.status) {
        case Status::Pass: ++pass; break;
        case Status::Fail:
            ++fail;
            std::cerr << "FAIL " << c.name << " " << c.witness.dump() << "\n";
            break;
        case Status::UnverifiedByLabel: ++unverified; break;
        }
    }
    std::cerr << "check: " << res.size() << " results, " << pass << " pass, " << fail << " fail, " << unverified
              << " unverified-by-label, " << std::fixed << std::setprecision(1) << ms / 1000 << " s\n";
    return fail ? 1 : 0;
}

SergeevElt ser_arg(const std::string& text, int k) {
    try {
        return SergeevElt::parse(text, k);
    } catch (const ParseError& e) {
        throw UsageError(std::string("sergeev parse error: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qweb: exact evaluation of type Q webs and related checks"};
    app.require_subcommand(1);

    int n = 1;
    std::string expr, file, emit_kind = "matrix";
    bool with_basis = false;
    auto* ev = app.add_subcommand("eval", "evaluate a web expression to its matrix");
    ev->add_option("-n", n, "rank of q(n)")->required();
    ev->add_option("expr", expr, "DSL expression");
    ev->add_option("--file", file, "read the expression from a file");
    ev->add_option("--emit", emit_kind, "matrix or json (typechecked AST)")->check(CLI::IsMember({"matrix", "json"}));
    ev->add_flag("--basis", with_basis, "also print domain and codomain words");

    std::string only;
    int kmax = 0, nmax = 0;
    bool no_time = false;
    auto* ck = app.add_subcommand("check", "run the relation catalog");
    ck->add_option("--only", only, "group (R5) or check (R3/rung-collision)");
    ck->add_option("--kmax", kmax, "largest web label");
    ck->add_option("--nmax", nmax, "largest n");
    ck->add_flag("--no-time", no_time, "omit timings for byte-stable reports");

    auto* ser = app.add_subcommand("sergeev", "Sergeev algebra computations");
    ser->require_subcommand(1);
    int sk = 1, sn = 1;
    std::string sx, sy, slambda;
    auto* smul = ser->add_subcommand("mul", "product x*y");
    smul->add_option("-k", sk, "strands")->required();
    smul->add_option("x", sx)->required();
    smul->add_option("y", sy)->required();
    auto* sel = ser->add_subcommand("elambda", "quasi-idempotent e_lambda and its constant");
    sel->add_option("--lambda", slambda)->required();
    auto* scl = ser->add_subcommand("clasp", "symmetrizer on k strands");
    scl->add_option("-k", sk)->required();
    auto* spsi = ser->add_subcommand("psi", "action of x on the k-th tensor power of V_n");
    spsi->add_option("-k", sk)->required();
    spsi->add_option("-n", sn)->required();
    spsi->add_option("x", sx)->required();

    std::string la, nu, mu;
    auto* lr = app.add_subcommand("lr", "shifted Littlewood-Richardson coefficient");
    lr->add_option("--lambda", la)->required();
    lr->add_option("--nu", nu)->required();
    lr->add_option("--mu", mu)->required();

    int vars = 3;
    auto* sp = app.add_subcommand("schurp", "Schur P polynomial");
    sp->add_option("--lambda", la)->required();
    sp->add_option("--vars", vars)->required();

    int stn = 1;
    auto* st = app.add_subcommand("staircase", "staircase LR tableau of shape mu / lambda(n)");
    st->add_option("--mu", mu)->required();
    st->add_option("--n", stn)->required();

    std::string from, to;
    auto* hd = app.add_subcommand("homdim", "dimension of q(n)-equivariant maps");
    hd->add_option("-n", n)->required();
    hd->add_option("--from", from)->required();
    hd->add_option("--to", to)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ev) {
            if (file.empty() == expr.empty()) throw UsageError("give exactly one of an expression or --file");
            return cmd_eval(n, file.empty() ? expr : read_file(file), emit_kind, with_basis);
        }
        if (*ck) return cmd_check(only, kmax, nmax, no_time);
        if (*smul) {
            SergeevElt p = ser_arg(sx, sk) * ser_arg(sy, sk);
            emit({{"k", sk}, {"x", sx}, {"y", sy}, {"product", p.str()}});
            return 0;
        }
        if (*sel) {
            StrictPartition l = partition_arg(slambda, "--lambda");
            if (l.size() > kMaxSergeevStrands) throw UsageError("lambda too large for the Sergeev tables");
            SergeevElt e = e_lambda(l);
            Scalar kappa = quasi_idempotent_constant(e);
            emit({{"lambda", l.str()}, {"terms", e.size()}, {"kappa", scalar_format(kappa)}, {"e", e.str()}});
            std::cerr << "e_" << l.str() << ": " << e.size() << " terms, kappa " << scalar_format(kappa) << "\n";
            return 0;
        }
        if (*scl) {
            if (sk < 0 || sk > kMaxSergeevStrands) throw UsageError("k out of range");
            emit({{"k", sk}, {"clasp", clasp(sk).str()}});
            return 0;
        }
        if (*spsi) {
            if (sn < 1) throw UsageError("-n must be at least 1");
            emit(psi_action(ser_arg(sx, sk), sn).to_json());
            return 0;
        }
        if (*lr) {
            StrictPartition a = partition_arg(la, "--lambda"), b = partition_arg(nu, "--nu"),
                            c = partition_arg(mu, "--mu");
            long long f = lr_coefficient(a, b, c);
            emit({{"lambda", a.str()}, {"nu", b.str()}, {"mu", c.str()}, {"f", f}});
            std::cerr << "f^" << c.str() << "_{" << a.str() << "; " << b.str() << "} = " << f << "\n";
            return 0;
        }
        if (*sp) {
            if (vars < 1) throw UsageError("--vars must be positive");
            StrictPartition a = partition_arg(la, "--lambda");
            json terms = json::array();
            for (const auto& [exps, coef] : schur_p(a, vars)) terms.push_back({exps, coef});
            emit({{"lambda", a.str()}, {"vars", vars}, {"terms", terms}});
            return 0;
        }
        if (*st) {
            StrictPartition m = partition_arg(mu, "--mu");
            ShiftedTableau t;
            try {
                t = staircase_tableau(m, stn);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            emit({{"mu", m.str()},
                  {"n", stn},
                  {"tableau", t.str()},
                  {"word", format_word(reading_word(t))},
                  {"content", content(t)},
                  {"lr_tableau", is_lr_tableau(t)}});
            return 0;
        }
        if (*hd) {
            ObjectWord a, b;
            try {
                a = ObjectWord::parse(from);
                b = ObjectWord::parse(to);
            } catch (const std::exception& e) {
                throw UsageError(e.what());
            }
            if (n < 1) throw UsageError("-n must be at least 1");
            auto [even, odd] = hom_dim(n, a, b);
            emit({{"n", n}, {"from", a.str()}, {"to", b.str()}, {"even", even}, {"odd", odd}});
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
