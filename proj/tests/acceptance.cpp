// One PASS/FAIL line per acceptance criterion. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "qweb/catalog.hpp"
#include "qweb/sergeev.hpp"
#include "qweb/shifted.hpp"
#include "qweb/web.hpp"

using namespace qweb;
using json = nlohmann::json;

#ifndef QWEB_CORPUS
#define QWEB_CORPUS "tests/data/dsl_corpus.txt"
#endif

namespace {

struct Outcome {
    bool ok = true;
    double seconds = 0;
    std::string detail;
};

struct Results {
    std::vector<CheckResult> all;

    std::vector<const CheckResult*> select(const std::function<bool(const std::string&)>& pick) const {
        std::vector<const CheckResult*> out;
        for (const auto& r : all)
            if (pick(r.name)) out.push_back(&r);
        return out;
    }
};

std::string group_of(const std::string& name) { return name.substr(0, name.find('/')); }

// Passes when every selected entry passes, unverified-by-label entries allowed when told so.
Outcome judge(const std::vector<const CheckResult*>& rs, double budget_s, bool allow_unverified = false) {
    Outcome o;
    int unverified = 0;
    std::vector<std::string> failed;
    for (const auto* r : rs) {
        o.seconds += r->ms / 1000;
        if (r->status == Status::Fail) failed.push_back(r->name);
        if (r->status == Status::UnverifiedByLabel) {
            ++unverified;
            if (!allow_unverified) failed.push_back(r->name + " (unverified)");
        }
    }
    if (rs.empty()) {
        o.ok = false;
        o.detail = "no checks ran";
        return o;
    }
    std::ostringstream d;
    d << rs.size() << " checks";
    if (allow_unverified) d << ", " << unverified << " unverified-by-label";
    if (!failed.empty()) {
        o.ok = false;
        d << "; failed:";
        for (const auto& f : failed) d << " " << f;
    }
    if (o.seconds > budget_s) {
        o.ok = false;
        d << "; over the " << budget_s << " s budget";
    }
    o.detail = d.str();
    return o;
}

std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t a = 0;
    while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    return s.substr(a);
}

Outcome parser_corpus(const std::string& path) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    std::ifstream in(path);
    if (!in) {
        o.ok = false;
        o.detail = "cannot open " + path;
        return o;
    }
    int total = 0, well = 0, ill = 0, syntax = 0;
    std::vector<std::string> bad;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto bar = line.find(" | ");
        if (bar == std::string::npos) continue;
        std::string kind = trim(line.substr(0, bar)), text = line.substr(bar + 3);
        ++total;
        if (kind == "ok") {
            ++well;
            try {
                WebExpr w = parse_dsl(text);
                typecheck(w);
                std::string f1 = format_dsl(w);
                WebExpr w2 = parse_dsl(f1);
                std::string f2 = format_dsl(w2);
                if (f1 != f2 || to_json(w) != to_json(w2)) bad.push_back("no fixpoint: " + text);
            } catch (const std::exception& e) {
                bad.push_back("rejected: " + text + " (" + e.what() + ")");
            }
        } else if (kind == "type") {
            ++ill;
            try {
                WebExpr w = parse_dsl(text);
                typecheck(w);
                bad.push_back("accepted: " + text);
            } catch (const TypeError& e) {
                if (e.pos == std::string::npos || e.pos >= text.size()) bad.push_back("no position: " + text);
            } catch (const std::exception& e) {
                bad.push_back("wrong error: " + text + " (" + e.what() + ")");
            }
        } else if (kind == "syntax") {
            ++syntax;
            try {
                parse_dsl(text);
                bad.push_back("parsed: " + text);
            } catch (const ParseError& e) {
                if (e.pos > text.size()) bad.push_back("no position: " + text);
            }
        } else {
            bad.push_back("unknown tag: " + kind);
        }
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream d;
    d << total << " expressions (" << well << " well typed round-trip, " << ill << " ill typed, " << syntax
      << " malformed)";
    if (total != 100) bad.push_back("corpus has " + std::to_string(total) + " entries, expected 100");
    for (const auto& b : bad) d << "; " << b;
    o.ok = bad.empty();
    o.detail = d.str();
    return o;
}

// How many lambda with |lambda| <= kmax have a literal a_lambda * b_lambda that squares to a multiple of itself.
std::string literal_product_info(int kmax) {
    int yes = 0, total = 0;
    std::string which;
    for (int k = 1; k <= kmax; ++k)
        for (const auto& la : strict_partitions(k)) {
            ++total;
            SergeevElt x = a_lambda(la) * b_lambda(la);
            try {
                if (x.is_zero()) continue;
                quasi_idempotent_constant(x);
                ++yes;
                which += " " + la.str();
            } catch (const std::domain_error&) {
            }
        }
    return std::to_string(yes) + " of " + std::to_string(total) + " (" + trim(which) + ")";
}

void line(int n, const std::string& title, const Outcome& o) {
    std::printf("criterion %2d: %s  %s [%.1f s] %s\n", n, o.ok ? "PASS" : "FAIL", title.c_str(), o.seconds,
                o.detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main(int argc, char** argv) {
    std::string corpus = argc > 1 ? argv[1] : QWEB_CORPUS;
    Ranges ranges = Ranges::from_env();
    Results R;
    for (const auto& g : catalog_groups()) {
        auto t0 = std::chrono::steady_clock::now();
        auto part = run_group(g, ranges);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::fprintf(stderr, "ran %s in %.1f s\n", g.c_str(), s);
        for (const auto& r : part)
            if (r.status == Status::Fail) std::fprintf(stderr, "  FAIL %s %s\n", r.name.c_str(), r.witness.dump().c_str());
        R.all.insert(R.all.end(), part.begin(), part.end());
    }
    auto named = [&](std::initializer_list<const char*> names) {
        return R.select([names](const std::string& n) {
            for (const char* x : names)
                if (n == x) return true;
            return false;
        });
    };
    auto in_groups = [&](std::initializer_list<const char*> groups, bool with_equivariance) {
        return R.select([=](const std::string& n) {
            if (!with_equivariance && n.ends_with("/equivariance")) return false;
            for (const char* g : groups)
                if (group_of(n) == g) return true;
            return false;
        });
    };

    std::vector<Outcome> outs;
    auto report = [&](int n, const std::string& title, Outcome o) {
        line(n, title, o);
        outs.push_back(o);
    };

    report(1, "Sergeev relations, k <= 6", judge(named({"R4/sergeev-relations"}), 1.0));
    report(2, "psi homomorphism, injectivity, kernel of e_lambda",
           judge(named({"R10/psi-homomorphism", "R10/psi-injective", "R10/kernel-e-lambda"}), 120));
    {
        Outcome o = judge(named({"R11/quasi-idempotent"}), 60);
        for (const auto& r : R.all)
            if (r.name == "R11/quasi-idempotent" && r.info.contains("kappa")) o.detail += "; kappa " + r.info["kappa"].dump();
        report(3, "quasi-idempotents e_lambda, k <= 5", o);
    }
    report(4, "clasps: idempotent, closed formula, both recursions",
           judge(named({"R6/clasp-idempotent", "R6/clasp-sum", "R6/clasp-recursion-1", "R6/clasp-recursion-2"}), 120));
    report(5, "web relation corpus R1-R8",
           judge(in_groups({"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8"}, false), 600, true));
    {
        // the opposite-sign run is a diagnostic, not one of the relations
        auto rs = R.select([](const std::string& n) {
            return group_of(n) == "R9" && !n.ends_with("/equivariance") && n != "R9/Q6-f-opposite-sign";
        });
        Outcome o = judge(rs, 600);
        for (const auto& r : R.all)
            if (r.name == "R9/Q6" && r.info.contains("failing")) o.detail += "; " + r.info["failing"].dump();
        report(6, "U-dot relations Q1-Q7 under ladder images", o);
    }
    {
        auto rs = R.select([](const std::string& n) {
            if (!n.ends_with("/equivariance")) return false;
            auto g = group_of(n);
            return g == "R1" || g == "R2" || g == "R3" || g == "R4" || g == "R5" || g == "R6" || g == "R7" ||
                   g == "R8" || g == "R9";
        });
        Outcome o = judge(rs, 1e9);
        std::size_t mats = 0;
        for (const auto* r : rs) mats += r->info.value("matrices", std::size_t(0));
        o.detail += ", " + std::to_string(mats) + " matrices against all 2n^2 generators";
        report(7, "equivariance of every matrix from criteria 4-6", o);
    }
    report(8, "Psi_n(e_lambda(n)) = 0 and fullness surrogate", judge(named({"R11/staircase-kernel", "R10/fullness"}), 300));
    report(9, "staircase LR tableaux, worked example, Schur P oracle",
           judge(in_groups({"R12"}, false), 300));
    report(10, "DSL corpus round-trip and positioned rejection", parser_corpus(corpus));

    std::printf("info: literal a_lambda*b_lambda quasi-idempotent for %s\n", literal_product_info(ranges.ser_kmax).c_str());
    int failed = 0;
    for (const auto& o : outs) failed += !o.ok;
    std::printf("acceptance: %zu criteria, %d failed\n", outs.size(), failed);
    return failed ? 1 : 0;
}
