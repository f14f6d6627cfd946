#include "qweb/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <set>

#include "qweb/qfunctor.hpp"
#include "qweb/sergeev.hpp"
#include "qweb/shifted.hpp"
#include "qweb/web.hpp"

namespace qweb {

using json = nlohmann::json;

namespace {

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        return fallback;
    }
}

} // namespace

Ranges Ranges::from_env() {
    Ranges r;
    r.kmax = env_int("QWEB_KMAX", r.kmax);
    r.jmax = env_int("QWEB_JMAX", r.jmax);
    r.nmax = env_int("QWEB_NMAX", r.nmax);
    r.clasp_kmax = env_int("QWEB_CLASP_KMAX", r.clasp_kmax);
    r.ser_kmax = std::min(env_int("QWEB_SER_KMAX", r.ser_kmax), kMaxSergeevStrands);
    r.bound = env_int("QWEB_BOUND", r.bound);
    r.lr_total = env_int("QWEB_LR_TOTAL", r.lr_total);
    r.psi_pairs = env_int("QWEB_PSI_PAIRS", r.psi_pairs);
    r.seed = unsigned(env_int("QWEB_SEED", int(r.seed)));
    r.equivariance = env_int("QWEB_EQUIVARIANCE", 1) != 0;
    return r;
}

json Ranges::to_json() const {
    return {{"kmax", kmax},         {"jmax", jmax},     {"nmin", nmin},         {"nmax", nmax},
            {"clasp_kmax", clasp_kmax}, {"ser_kmax", ser_kmax}, {"ser_rel_kmax", ser_rel_kmax},
            {"bound", bound},       {"lr_total", lr_total}, {"psi_pairs", psi_pairs}, {"seed", seed},
            {"equivariance", equivariance}};
}

const char* status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::UnverifiedByLabel: return "unverified-by-label";
    }
    return "?";
}

json CheckResult::to_json(bool with_time) const {
    json j = {{"name", name}, {"label", label}, {"params", params}, {"status", status_name(status)}};
    if (!witness.is_null()) j["witness"] = witness;
    if (!info.is_null()) j["info"] = info;
    if (with_time) j["ms"] = std::round(ms * 1000) / 1000;
    return j;
}

std::vector<std::string> catalog_groups() {
    return {"R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10", "R11", "R12"};
}

namespace {

using Clock = std::chrono::steady_clock;
using web::compose;
using web::tensor;

std::string group_of(const std::string& name) { return name.substr(0, name.find('/')); }

struct Ctx {
    const Ranges& R;
    std::string only;
    std::vector<CheckResult>& out;
    std::size_t eq_matrices = 0;
    int eq_nmin = 0, eq_nmax = 0;
    json eq_witness;

    bool want(const std::string& name) const {
        if (only.empty()) return true;
        if (only.find('/') == std::string::npos) return group_of(name) == only;
        return name == only;
    }

    void counted(int n) {
        ++eq_matrices;
        eq_nmin = eq_nmin ? std::min(eq_nmin, n) : n;
        eq_nmax = std::max(eq_nmax, n);
    }

    // Every evaluated web must supercommute with q(n).
    void equivariant(int n, const WebType& t, const SuperMatrix& m, const json& where) {
        if (!R.equivariance) return;
        counted(n);
        if (!eq_witness.is_null()) return;
        if (auto f = check_equivariance(n, t.dom, t.cod, m)) {
            eq_witness = where;
            eq_witness["generator"] = f->generator;
            eq_witness["component"] = f->component;
            eq_witness["row"] = f->diff.row;
            eq_witness["col"] = f->diff.col;
            eq_witness["lhs"] = scalar_format(f->diff.lhs);
            eq_witness["rhs"] = scalar_format(f->diff.rhs);
        }
    }
};

json diff_json(const Difference& d, const SuperMatrix& m) {
    return {{"row", d.row},
            {"col", d.col},
            {"row_label", m.codomain().label(d.row)},
            {"col_label", m.domain().label(d.col)},
            {"lhs", scalar_format(d.lhs)},
            {"rhs", scalar_format(d.rhs)}};
}

class Check {
public:
    Check(Ctx& ctx, std::string name, std::string label, json params)
        : ctx_(ctx), start_(Clock::now()) {
        r_.name = std::move(name);
        r_.label = std::move(label);
        r_.params = std::move(params);
    }
    Check(const Check&) = delete;
    Check& operator=(const Check&) = delete;
    ~Check() {
        r_.ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        ctx_.out.push_back(std::move(r_));
    }

    bool failed() const { return r_.status == Status::Fail; }
    // evaluate every instance even after a failure, so failures can be counted
    bool keep_going = false;

    void fail(json witness) {
        if (failed()) return;
        r_.status = Status::Fail;
        r_.witness = std::move(witness);
    }

    void expect(bool ok, const json& where) {
        if (!ok) fail(where);
    }

    void unverified(const std::string& why) {
        r_.status = Status::UnverifiedByLabel;
        r_.info = {{"reason", why}};
    }

    json& info() { return r_.info; }

    bool mat_eq(const SuperMatrix& l, const SuperMatrix& r, json where) {
        if (failed() && !keep_going) return false;
        if (l.domain() != r.domain() || l.codomain() != r.codomain()) {
            where["error"] = "bases differ";
            fail(where);
            return false;
        }
        if (auto d = first_difference(l, r)) {
            where["entry"] = diff_json(*d, l);
            fail(where);
            return false;
        }
        return true;
    }

    // Evaluates both sides under Psi_n and compares exactly.
    bool web_eq(int n, const WebExpr& l, const WebExpr& r, json where) {
        if (failed() && !keep_going) return false;
        where["n"] = n;
        WebType tl, tr;
        try {
            tl = typecheck(l);
            tr = typecheck(r);
        } catch (const TypeError& e) {
            where["error"] = std::string("type error: ") + e.what() + " at " + e.path;
            fail(where);
            return false;
        }
        if (tl.dom != tr.dom || tl.cod != tr.cod) {
            where["error"] = "sides have types " + tl.dom.str() + " -> " + tl.cod.str() + " and " + tr.dom.str() +
                             " -> " + tr.cod.str();
            fail(where);
            return false;
        }
        SuperMatrix ml = eval_web(n, l), mr = eval_web(n, r);
        bool same = mat_eq(ml, mr, where);
        ctx_.equivariant(n, tl, ml, where);
        // equal sides share one check but both count
        if (!same) ctx_.equivariant(n, tl, mr, where);
        else if (ctx_.R.equivariance) ctx_.counted(n);
        return same;
    }

private:
    Ctx& ctx_;
    CheckResult r_;
    Clock::time_point start_;
};

std::vector<int> ones(int k) { return std::vector<int>(std::size_t(k), 1); }

WebExpr zero_web(const WebExpr& like) {
    WebType t = typecheck(like);
    return make_zero(t.dom, t.cod);
}

WebExpr lin(const std::vector<std::pair<Scalar, WebExpr>>& terms) { return web::sum(terms); }

long long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// ---- R1 ----

void group_r1(Ctx& c) {
    static const char* labels[] = {"associativity",      "digon-removal", "dot-collision",   "dots-past-merges",
                                   "dumbbell-relation",  "square-switch", "square-switch-dots", "double-rungs-1",
                                   "double-rungs-2"};
    for (const char* l : labels) {
        std::string name = std::string("R1/") + l;
        if (!c.want(name)) continue;
        Check ck(c, name, l, json::object());
        ck.unverified("defining display is cited by label only; no verbatim source available");
    }
}

// ---- R2 ----

void group_r2(Ctx& c) {
    using namespace web;
    const int kmax = c.R.kmax + 1;
    if (c.want("R2/2-dots-zero")) {
        Check ck(c, "R2/2-dots-zero", "2-dots-zero", {{"n", {c.R.nmin, c.R.nmax}}});
        WebExpr l = compose({merge(1, 1), tensor(dot(1), dot(1)), split(1, 1)});
        for (int n = c.R.nmin; n <= c.R.nmax; ++n) ck.web_eq(n, l, zero_web(l), json::object());
    }
    if (c.want("R2/dot-on-k-strand")) {
        Check ck(c, "R2/dot-on-k-strand", "dot-on-k-strand", {{"k", {1, kmax}}, {"n", {c.R.nmin, c.R.nmax}}});
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                WebExpr left = compose({merge(1, k - 1), tensor(dot(1), id(true, k - 1)), split(1, k - 1)});
                WebExpr right = compose({merge(k - 1, 1), tensor(id(true, k - 1), dot(1)), split(k - 1, 1)});
                ck.web_eq(n, left, dot(k), {{"k", k}, {"side", "left"}});
                ck.web_eq(n, right, dot(k), {{"k", k}, {"side", "right"}});
            }
    }
}

// ---- ladders ----

struct Rung {
    int from, to; // 0-based adjacent strands
    int j;
    bool dotted = false;
};
using Ladder = std::vector<Rung>; // bottom to top

PiGen rung_gen(const Rung& r) {
    PiGen g{};
    g.i = std::min(r.from, r.to) + 1;
    g.j = r.j;
    bool leftward = r.to < r.from;
    if (leftward) g.kind = r.dotted ? PiGen::EBar : PiGen::E;
    else g.kind = r.dotted ? PiGen::FBar : PiGen::F;
    return g;
}

std::optional<std::vector<int>> ladder_target(const Ladder& lad, std::vector<int> la) {
    for (const Rung& r : lad) {
        la[r.from] -= r.j;
        la[r.to] += r.j;
    }
    for (int x : la)
        if (x < 0) return std::nullopt;
    return la;
}

WebExpr ladder_web(const Ladder& lad, const std::vector<int>& la) {
    std::vector<PiGen> gens;
    for (auto it = lad.rbegin(); it != lad.rend(); ++it) gens.push_back(rung_gen(*it));
    return pi_word(int(la.size()), gens, la);
}

Ladder reversed(Ladder lad) {
    for (Rung& r : lad) std::swap(r.from, r.to);
    return lad;
}

Ladder reflected(Ladder lad, int strands) {
    for (Rung& r : lad) {
        r.from = strands - 1 - r.from;
        r.to = strands - 1 - r.to;
    }
    return lad;
}

struct LadderRelation {
    std::vector<std::pair<Scalar, Ladder>> terms;
    Scalar id_coeff; // right-hand side multiple of the identity
};

// Sum of ladders on la against a multiple of the identity. False if the target has a negative label.
bool ladder_check(Check& ck, int n, const LadderRelation& rel, const std::vector<int>& la, json where) {
    auto tgt = ladder_target(rel.terms.front().second, la);
    if (!tgt) return false;
    std::vector<std::pair<Scalar, WebExpr>> lhs;
    for (const auto& [s, lad] : rel.terms) lhs.push_back({s, ladder_web(lad, la)});
    WebExpr l = lin(lhs);
    WebExpr r = rel.id_coeff.is_zero() ? zero_web(l) : web::scale(rel.id_coeff, web::id(ObjectWord::ups(la)));
    where["labels"] = la;
    ck.web_eq(n, l, r, where);
    return true;
}

std::vector<std::vector<int>> label_tuples(int m, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(std::size_t(m), lo);
    while (true) {
        out.push_back(cur);
        int x = m - 1;
        while (x >= 0 && ++cur[std::size_t(x)] > hi) cur[std::size_t(x--)] = lo;
        if (x < 0) break;
    }
    return out;
}

void group_r3(Ctx& c) {
    const int kmax = c.R.kmax, jmax = c.R.jmax;
    json range = {{"k", {0, kmax}}, {"j", {0, jmax}}, {"n", {c.R.nmin, c.R.nmax}}};

    if (c.want("R3/rung-collision")) {
        Check ck(c, "R3/rung-collision", "rung-collision", range);
        for (int n = c.R.nmin; n <= c.R.nmax && !ck.failed(); ++n)
            for (const auto& la : label_tuples(2, 0, kmax))
                for (int r = 0; r <= jmax; ++r)
                    for (int s = 0; s <= jmax; ++s)
                        for (int rev = 0; rev < 2; ++rev) {
                            Ladder two{{1, 0, r}, {1, 0, s}}, one{{1, 0, r + s}};
                            if (rev) {
                                two = reversed(two);
                                one = reversed(one);
                            }
                            auto tgt = ladder_target(two, la);
                            if (!tgt) continue;
                            WebExpr l = ladder_web(two, la);
                            WebExpr rr = web::scale(Scalar(binom(r + s, s)), ladder_web(one, la));
                            ck.web_eq(n, l, rr, {{"labels", la}, {"r", r}, {"s", s}, {"reversed", bool(rev)}});
                        }
    }

    if (c.want("R3/square-switch-double-dots")) {
        Check ck(c, "R3/square-switch-double-dots", "square-switch-double-dots", range);
        for (int n = c.R.nmin; n <= c.R.nmax && !ck.failed(); ++n)
            for (const auto& la : label_tuples(2, 0, kmax)) {
                LadderRelation rel;
                rel.terms = {{Scalar(1), {{0, 1, 1, true}, {1, 0, 1, true}}},
                             {Scalar(1), {{1, 0, 1, true}, {0, 1, 1, true}}}};
                rel.id_coeff = Scalar(la[0] + la[1]);
                ladder_check(ck, n, rel, la, json::object());
            }
    }

    // Each holds with rungs reversed, reflected, and both.
    auto four_ways = [&](const std::string& name, const LadderRelation& base) {
        if (!c.want(name)) return;
        Check ck(c, name, name.substr(3), range);
        for (int n = c.R.nmin; n <= c.R.nmax && !ck.failed(); ++n)
            for (int v = 0; v < 4; ++v) {
                LadderRelation rel = base;
                for (auto& [s, lad] : rel.terms) {
                    if (v & 1) lad = reversed(lad);
                    if (v & 2) lad = reflected(lad, 3);
                }
                for (const auto& la : label_tuples(3, 0, kmax))
                    ladder_check(ck, n, rel, la, {{"reversed", bool(v & 1)}, {"reflected", bool(v & 2)}});
            }
    };

    LadderRelation dr3;
    dr3.terms = {{Scalar(1), {{2, 1, 1}, {1, 0, 2}}},
                 {Scalar(-1), {{1, 0, 1}, {2, 1, 1}, {1, 0, 1}}},
                 {Scalar(1), {{1, 0, 2}, {2, 1, 1}}}};
    four_ways("R3/double-rungs-3", dr3);

    LadderRelation dr4;
    dr4.terms = {{Scalar(1), {{2, 1, 1}, {1, 0, 1}, {1, 0, 1, true}}},
                 {Scalar(-1), {{1, 0, 1}, {2, 1, 1}, {1, 0, 1, true}}},
                 {Scalar(-1), {{1, 0, 1, true}, {2, 1, 1}, {1, 0, 1}}},
                 {Scalar(1), {{1, 0, 1, true}, {1, 0, 1}, {2, 1, 1}}}};
    four_ways("R3/double-rungs-4", dr4);
}

// ---- R4 ----

WebExpr s_web(int k, int j) { return web::on_strand(ones(k), j - 1, web::xup(1, 1), 2); }
WebExpr c_web(int k, int i) { return web::on_strand(ones(k), i - 1, web::dot(1), 1); }

void group_r4(Ctx& c) {
    if (c.want("R4/sergeev-relations")) {
        Check ck(c, "R4/sergeev-relations", "sergeev-relations", {{"k", {1, c.R.ser_rel_kmax}}});
        int checked = 0;
        for (int k = 1; k <= c.R.ser_rel_kmax; ++k) {
            auto one = SergeevElt::one(k);
            auto C = [k](int i) { return SergeevElt::c(k, i); };
            auto S = [k](int i) { return SergeevElt::s(k, i); };
            auto eq = [&](const SergeevElt& a, const SergeevElt& b, const char* rel, int i, int j) {
                ++checked;
                ck.expect(a == b, {{"k", k}, {"relation", rel}, {"i", i}, {"j", j}, {"lhs", a.str()}, {"rhs", b.str()}});
            };
            for (int i = 1; i <= k; ++i) {
                eq(C(i) * C(i), one, "c_i^2 = 1", i, i);
                for (int j = 1; j <= k; ++j)
                    if (i != j) eq(C(i) * C(j), -(C(j) * C(i)), "c_i c_j = -c_j c_i", i, j);
            }
            for (int i = 1; i < k; ++i) {
                eq(S(i) * S(i), one, "s_i^2 = 1", i, i);
                eq(S(i) * C(i), C(i + 1) * S(i), "s_i c_i = c_{i+1} s_i", i, i);
                eq(S(i) * C(i + 1), C(i) * S(i), "s_i c_{i+1} = c_i s_i", i, i + 1);
                for (int j = 1; j <= k; ++j)
                    if (j != i && j != i + 1) eq(S(i) * C(j), C(j) * S(i), "s_i c_j = c_j s_i", i, j);
                for (int j = 1; j < k; ++j)
                    if (std::abs(i - j) > 1) eq(S(i) * S(j), S(j) * S(i), "s_i s_j = s_j s_i", i, j);
                if (i + 1 < k) eq(S(i) * S(i + 1) * S(i), S(i + 1) * S(i) * S(i + 1), "braid", i, i + 1);
            }
        }
        ck.info() = {{"relations_checked", checked}};
    }

    if (c.want("R4/s-relations")) {
        const int kmax = std::max(3, c.R.kmax + 1);
        Check ck(c, "R4/s-relations", "s-relations", {{"k", {2, kmax}}, {"n", {c.R.nmin, c.R.nmax}}});
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 2; k <= kmax; ++k) {
                WebExpr one = web::id(ObjectWord::ups(ones(k)));
                for (int i = 1; i < k; ++i) {
                    ck.web_eq(n, compose(s_web(k, i), s_web(k, i)), one, {{"k", k}, {"relation", 1}, {"i", i}});
                    for (int j = 1; j < k; ++j)
                        if (std::abs(i - j) > 1)
                            ck.web_eq(n, compose(s_web(k, i), s_web(k, j)), compose(s_web(k, j), s_web(k, i)),
                                      {{"k", k}, {"relation", 2}, {"i", i}, {"j", j}});
                    if (i + 1 < k)
                        ck.web_eq(n, compose({s_web(k, i), s_web(k, i + 1), s_web(k, i)}),
                                  compose({s_web(k, i + 1), s_web(k, i), s_web(k, i + 1)}),
                                  {{"k", k}, {"relation", 3}, {"i", i}});
                    for (int j = 1; j <= k; ++j)
                        if (std::abs(i - j) > 1)
                            ck.web_eq(n, compose(s_web(k, i), c_web(k, j)), compose(c_web(k, j), s_web(k, i)),
                                      {{"k", k}, {"relation", 4}, {"i", i}, {"j", j}});
                    ck.web_eq(n, compose(s_web(k, i), c_web(k, i)), compose(c_web(k, i + 1), s_web(k, i)),
                              {{"k", k}, {"relation", 5}, {"i", i}});
                }
            }
    }
}

// ---- R5 ----

void group_r5(Ctx& c) {
    if (!c.want("R5/untwist-permutation")) return;
    const int kmax = c.R.kmax + 1;
    Check ck(c, "R5/untwist-permutation", "untwist-permutation", {{"k", {1, kmax}}, {"n", {c.R.nmin, c.R.nmax}}});
    for (int n = c.R.nmin; n <= c.R.nmax; ++n)
        for (int k = 1; k <= kmax; ++k)
            for (const Perm& p : all_perms(k)) {
                WebExpr merge_all = web::implode({k}), split_all = web::explode({k});
                ck.web_eq(n, compose(merge_all, web::perm(p.img)), merge_all, {{"sigma", p.img}, {"side", "merge"}});
                ck.web_eq(n, compose(web::perm(p.img), split_all), split_all, {{"sigma", p.img}, {"side", "split"}});
            }
}

// ---- R6 ----

void group_r6(Ctx& c) {
    if (c.want("R6/clasp-idempotent")) {
        Check ck(c, "R6/clasp-idempotent", "clasps", {{"k", {1, c.R.ser_rel_kmax}}});
        for (int k = 1; k <= c.R.ser_rel_kmax; ++k) {
            SergeevElt cl = clasp(k);
            ck.expect(cl * cl == cl, {{"k", k}});
            SergeevElt sum(k);
            for (const Perm& p : all_perms(k)) sum = sum + SergeevElt::perm(p);
            ck.expect(Scalar(Rational(1, factorial(k))) * sum == cl, {{"k", k}, {"closed_formula", true}});
        }
    }
    const int kmax = c.R.clasp_kmax;
    json range = {{"k", {1, kmax}}, {"n", {c.R.nmin, c.R.nmax}}};
    if (c.want("R6/clasp-sum")) {
        Check ck(c, "R6/clasp-sum", "clasp-sum", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                std::vector<std::pair<Scalar, WebExpr>> terms;
                for (const Perm& p : all_perms(k)) terms.push_back({Scalar(Rational(1, factorial(k))), web::perm(p.img)});
                ck.web_eq(n, web::clasp(k), lin(terms), {{"k", k}});
                ck.mat_eq(eval_web(n, web::clasp(k)), psi_action(clasp(k), n), {{"k", k}, {"n", n}, {"via", "psi"}});
            }
    }
    auto cl_id = [](int k) { return tensor(web::clasp(k - 1), web::id(true, 1)); };
    auto dumbbell = [](int k, bool dots) {
        WebExpr d = compose(web::split(1, 1), web::merge(1, 1));
        if (dots) {
            WebExpr dd = tensor(web::dot(1), web::dot(1));
            d = compose({dd, d, dd});
        }
        return web::on_strand(ones(k), k - 2, d, 2);
    };
    if (c.want("R6/clasp-recursion-1")) {
        Check ck(c, "R6/clasp-recursion-1", "clasp1", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 2; k <= kmax; ++k) {
                WebExpr mid = compose({cl_id(k), dumbbell(k, true), cl_id(k)});
                WebExpr rhs = lin({{Scalar(1), cl_id(k)}, {Scalar(Rational(k - 1, k)), mid}});
                ck.web_eq(n, web::clasp(k), rhs, {{"k", k}});
            }
    }
    if (c.want("R6/clasp-recursion-2")) {
        Check ck(c, "R6/clasp-recursion-2", "clasp2", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 2; k <= kmax; ++k) {
                WebExpr mid = compose({cl_id(k), dumbbell(k, false), cl_id(k)});
                WebExpr rhs = lin({{Scalar(Rational(k - 1, k)), mid}, {Scalar(Rational(-(k - 2), k)), cl_id(k)}});
                ck.web_eq(n, web::clasp(k), rhs, {{"k", k}});
            }
    }
}

// ---- R7 ----

void group_r7(Ctx& c) {
    using namespace web;
    const int kmax = c.R.kmax;
    json range2 = {{"k", {1, kmax}}, {"n", {c.R.nmin, c.R.nmax}}};
    if (c.want("R7/braiding-involution")) {
        Check ck(c, "R7/braiding-involution", "braidingforups(a)", range2);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k)
                for (int l = 1; l <= kmax; ++l)
                    ck.web_eq(n, compose(xup(l, k), xup(k, l)), id(ObjectWord::ups({k, l})), {{"k", k}, {"l", l}});
    }
    if (c.want("R7/yang-baxter")) {
        Check ck(c, "R7/yang-baxter", "braidingforups(b)", range2);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (const auto& t : label_tuples(3, 1, kmax)) {
                int h = t[0], k = t[1], l = t[2];
                WebExpr lhs = compose({tensor(xup(k, l), id(true, h)), tensor(id(true, k), xup(h, l)),
                                       tensor(xup(h, k), id(true, l))});
                WebExpr rhs = compose({tensor(id(true, l), xup(h, k)), tensor(xup(h, l), id(true, k)),
                                       tensor(id(true, h), xup(k, l))});
                ck.web_eq(n, lhs, rhs, {{"h", h}, {"k", k}, {"l", l}});
            }
    }
    if (c.want("R7/merge-split-slides")) {
        Check ck(c, "R7/merge-split-slides", "braidingforups(c)", range2);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (const auto& t : label_tuples(3, 1, kmax)) {
                int h = t[0], k = t[1], l = t[2];
                json at = {{"h", h}, {"k", k}, {"l", l}};
                // merge then cross = cross twice then merge, on either side
                ck.web_eq(n, compose(xup(k + h, l), tensor(merge(k, h), id(true, l))),
                          compose({tensor(id(true, l), merge(k, h)), tensor(xup(k, l), id(true, h)),
                                   tensor(id(true, k), xup(h, l))}),
                          at);
                ck.web_eq(n, compose(xup(l, k + h), tensor(id(true, l), merge(k, h))),
                          compose({tensor(merge(k, h), id(true, l)), tensor(id(true, k), xup(l, h)),
                                   tensor(xup(l, k), id(true, h))}),
                          at);
                ck.web_eq(n, compose(tensor(split(k, h), id(true, l)), xup(l, k + h)),
                          compose({tensor(id(true, k), xup(l, h)), tensor(xup(l, k), id(true, h)),
                                   tensor(id(true, l), split(k, h))}),
                          at);
                ck.web_eq(n, compose(tensor(id(true, l), split(k, h)), xup(k + h, l)),
                          compose({tensor(xup(k, l), id(true, h)), tensor(id(true, k), xup(h, l)),
                                   tensor(split(k, h), id(true, l))}),
                          at);
            }
    }
    if (c.want("R7/dot-slides")) {
        Check ck(c, "R7/dot-slides", "braidingforups(d)", range2);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k)
                for (int l = 1; l <= kmax; ++l) {
                    ck.web_eq(n, compose(xup(k, l), tensor(dot(k), id(true, l))),
                              compose(tensor(id(true, l), dot(k)), xup(k, l)), {{"k", k}, {"l", l}, {"strand", "left"}});
                    ck.web_eq(n, compose(xup(k, l), tensor(id(true, k), dot(l))),
                              compose(tensor(dot(l), id(true, k)), xup(k, l)), {{"k", k}, {"l", l}, {"strand", "right"}});
                }
    }
}

// ---- R8 ----

SuperMatrix graded_flip(const GradedBasis& a, const GradedBasis& b) {
    SuperMatrix m(a.tensor(b), b.tensor(a));
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < b.dim(); ++y) {
            Scalar s = (a.parity(x) && b.parity(y)) ? Scalar(-1) : Scalar(1);
            m.add_to(y * a.dim() + x, x * b.dim() + y, s);
        }
    return m;
}

void group_r8(Ctx& c) {
    using namespace web;
    const int kmax = c.R.kmax;
    json range = {{"k", {1, kmax}}, {"n", {c.R.nmin, c.R.nmax}}};
    auto U = [](int k) { return id(true, k); };
    auto D = [](int k) { return id(false, k); };

    if (c.want("R8/straighten-zigzag")) {
        Check ck(c, "R8/straighten-zigzag", "straighten-zigzag", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                ck.web_eq(n, compose(tensor(U(k), capL(k)), tensor(cupL(k), U(k))), U(k), {{"k", k}, {"strand", "up"}});
                ck.web_eq(n, compose(tensor(capL(k), D(k)), tensor(D(k), cupL(k))), D(k), {{"k", k}, {"strand", "down"}});
            }
    }
    if (c.want("R8/right-handed-zigzag")) {
        Check ck(c, "R8/right-handed-zigzag", "rightward-cup-and-cap", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                ck.web_eq(n, compose(tensor(capR(k), U(k)), tensor(U(k), cupR(k))), U(k), {{"k", k}, {"strand", "up"}});
                ck.web_eq(n, compose(tensor(D(k), capR(k)), tensor(cupR(k), D(k))), D(k), {{"k", k}, {"strand", "down"}});
            }
    }
    auto bubble = [&](int k, bool clockwise, bool dotted) {
        if (clockwise) {
            WebExpr mid = dotted ? tensor(dot(k), D(k)) : tensor(U(k), D(k));
            return compose({capR(k), mid, cupL(k)});
        }
        WebExpr mid = dotted ? tensor(D(k), dot(k)) : tensor(D(k), U(k));
        return compose({capL(k), mid, cupR(k)});
    };
    if (c.want("R8/delete-bubble")) {
        Check ck(c, "R8/delete-bubble", "delete-bubble", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k)
                for (int cw = 0; cw < 2; ++cw) {
                    WebExpr b = bubble(k, cw, true);
                    ck.web_eq(n, b, zero_web(b), {{"k", k}, {"clockwise", bool(cw)}});
                }
    }
    if (c.want("R8/other-bubbles")) {
        Check ck(c, "R8/other-bubbles", "other-bubbles", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k)
                for (int dotted = 0; dotted < 2; ++dotted) {
                    ck.web_eq(n, bubble(k, false, dotted), bubble(k, true, dotted), {{"k", k}, {"dotted", bool(dotted)}});
                    if (!dotted) {
                        WebExpr b = bubble(k, true, false);
                        ck.web_eq(n, b, zero_web(b), {{"k", k}, {"plain", true}});
                    }
                }
    }
    if (c.want("R8/dot-past-cup")) {
        Check ck(c, "R8/dot-past-cup", "dot-past-cup", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                ck.web_eq(n, compose(tensor(U(k), ddot(k)), cupL(k)), compose(tensor(dot(k), D(k)), cupL(k)),
                          {{"k", k}, {"form", "cupL"}});
                ck.web_eq(n, compose(capL(k), tensor(D(k), dot(k))), compose(capL(k), tensor(ddot(k), U(k))),
                          {{"k", k}, {"form", "capL"}});
                ck.web_eq(n, compose(tensor(D(k), dot(k)), cupR(k)), compose(tensor(ddot(k), U(k)), cupR(k)),
                          {{"k", k}, {"form", "cupR"}});
                ck.web_eq(n, compose(capR(k), tensor(U(k), ddot(k))), compose(capR(k), tensor(dot(k), D(k))),
                          {{"k", k}, {"form", "capR"}});
            }
    }
    if (c.want("R8/reverse-dot-collision")) {
        Check ck(c, "R8/reverse-dot-collision", "reverse-dot-collision", range);
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k)
                ck.web_eq(n, compose(ddot(k), ddot(k)), web::scale(Scalar(-k), D(k)), {{"k", k}});
    }
    if (c.want("R8/crossing-invertible")) {
        Check ck(c, "R8/crossing-invertible", "leftwardcrossing", range);
        int flips = 0, total = 0;
        for (int n = c.R.nmin; n <= c.R.nmax; ++n)
            for (int k = 1; k <= kmax; ++k)
                for (int l = 1; l <= kmax; ++l) {
                    json at = {{"k", k}, {"l", l}};
                    ck.web_eq(n, compose(xl(k, l), rcross(k, l)), id(ObjectWord::parse("^" + std::to_string(k) + " v" + std::to_string(l))), at);
                    ck.web_eq(n, compose(rcross(k, l), xl(k, l)), id(ObjectWord::parse("v" + std::to_string(l) + " ^" + std::to_string(k))), at);
                    SuperMatrix r = eval_web(n, rcross(k, l));
                    ++total;
                    if (r == graded_flip(sym_basis(n, k), dual_sym_basis(n, l))) ++flips;
                }
        ck.info() = {{"rcross_is_graded_flip", flips}, {"of", total}};
    }
}

// ---- R9 ----

using UTerm = std::pair<Scalar, std::vector<PiGen>>; // empty word: identity

struct URel {
    std::string tag;
    std::vector<UTerm> terms;
    // extra identity coefficient depending on lambda
    std::function<Scalar(const std::vector<int>&)> id_coeff;
};

PiGen G(PiGen::Kind kind, int i, int j = 1) {
    PiGen g{};
    g.kind = kind;
    g.i = i;
    g.j = j;
    return g;
}

std::vector<int> word_target(int m, const std::vector<PiGen>& gens, std::vector<int> la) {
    (void)m;
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) la = pi_target(*it, la);
    return la;
}

std::vector<URel> u_relations(int m) {
    using K = PiGen::Kind;
    const auto E = PiGen::E, F = PiGen::F, EB = PiGen::EBar, FB = PiGen::FBar, H = PiGen::HBar;
    (void)sizeof(K);
    std::vector<URel> rels;
    auto d = [](bool b) { return Scalar(b ? 1 : 0); };
    auto add = [&](std::string tag, std::vector<UTerm> terms, std::function<Scalar(const std::vector<int>&)> idc = {}) {
        std::vector<UTerm> kept;
        for (auto& t : terms)
            if (!t.first.is_zero()) kept.push_back(std::move(t));
        rels.push_back({std::move(tag), std::move(kept), std::move(idc)});
    };
    for (int i = 1; i <= m; ++i) {
        add("Q1 h_i^2 = lambda_i (i=" + std::to_string(i) + ")", {{Scalar(1), {G(H, i), G(H, i)}}},
            [i](const std::vector<int>& la) { return Scalar(-la[std::size_t(i - 1)]); });
        for (int j = 1; j <= m; ++j)
            if (i != j)
                add("Q1 h_i h_j = -h_j h_i (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    {{Scalar(1), {G(H, i), G(H, j)}}, {Scalar(1), {G(H, j), G(H, i)}}});
    }
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j < m; ++j) {
            std::string ij = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
            Scalar a = d(i == j) - d(i == j + 1), b = d(i == j) + d(i == j + 1);
            add("Q3 he-eh" + ij, {{Scalar(1), {G(H, i), G(E, j)}}, {Scalar(-1), {G(E, j), G(H, i)}}, {-a, {G(EB, j)}}});
            add("Q3 hf-fh" + ij, {{Scalar(1), {G(H, i), G(F, j)}}, {Scalar(-1), {G(F, j), G(H, i)}}, {a, {G(FB, j)}}});
            add("Q3 hebar+ebarh" + ij,
                {{Scalar(1), {G(H, i), G(EB, j)}}, {Scalar(1), {G(EB, j), G(H, i)}}, {-b, {G(E, j)}}});
            add("Q3 hfbar+fbarh" + ij,
                {{Scalar(1), {G(H, i), G(FB, j)}}, {Scalar(1), {G(FB, j), G(H, i)}}, {-b, {G(F, j)}}});
        }
    for (int i = 1; i < m; ++i)
        for (int j = 1; j < m; ++j) {
            std::string ij = " (" + std::to_string(i) + "," + std::to_string(j) + ")";
            Scalar dl = d(i == j);
            add("Q4 ef-fe" + ij, {{Scalar(1), {G(E, i), G(F, j)}}, {Scalar(-1), {G(F, j), G(E, i)}}},
                [i, dl](const std::vector<int>& la) {
                    return -dl * Scalar(la[std::size_t(i - 1)] - la[std::size_t(i)]);
                });
            add("Q4 ebarfbar+fbarebar" + ij, {{Scalar(1), {G(EB, i), G(FB, j)}}, {Scalar(1), {G(FB, j), G(EB, i)}}},
                [i, dl](const std::vector<int>& la) {
                    return -dl * Scalar(la[std::size_t(i - 1)] + la[std::size_t(i)]);
                });
            add("Q4 ebarf-febar" + ij,
                {{Scalar(1), {G(EB, i), G(F, j)}}, {Scalar(-1), {G(F, j), G(EB, i)}},
                 {-dl, {G(H, i)}}, {dl, {G(H, i + 1)}}});
            add("Q4 efbar-fbare" + ij,
                {{Scalar(1), {G(E, i), G(FB, j)}}, {Scalar(-1), {G(FB, j), G(E, i)}},
                 {-dl, {G(H, i)}}, {dl, {G(H, i + 1)}}});
            std::string q5 = "Q5";
            if (std::abs(i - j) != 1) {
                add(q5 + " e ebar" + ij, {{Scalar(1), {G(E, i), G(EB, j)}}, {Scalar(-1), {G(EB, j), G(E, i)}}});
                add(q5 + " ebar ebar" + ij, {{Scalar(1), {G(EB, i), G(EB, j)}}, {Scalar(1), {G(EB, j), G(EB, i)}}});
                add(q5 + " f fbar" + ij, {{Scalar(1), {G(F, i), G(FB, j)}}, {Scalar(-1), {G(FB, j), G(F, i)}}});
                add(q5 + " fbar fbar" + ij, {{Scalar(1), {G(FB, i), G(FB, j)}}, {Scalar(1), {G(FB, j), G(FB, i)}}});
            }
            if (std::abs(i - j) > 1) {
                add(q5 + " e e" + ij, {{Scalar(1), {G(E, i), G(E, j)}}, {Scalar(-1), {G(E, j), G(E, i)}}});
                add(q5 + " f f" + ij, {{Scalar(1), {G(F, i), G(F, j)}}, {Scalar(-1), {G(F, j), G(F, i)}}});
            }
            if (std::abs(i - j) == 1) {
                add("Q7 e" + ij, {{Scalar(1), {G(E, i, 2), G(E, j)}}, {Scalar(-1), {G(E, i), G(E, j), G(E, i)}},
                                  {Scalar(1), {G(E, j), G(E, i, 2)}}});
                add("Q7 ebar" + ij,
                    {{Scalar(1), {G(EB, i), G(E, i), G(E, j)}}, {Scalar(-1), {G(EB, i), G(E, j), G(E, i)}},
                     {Scalar(-1), {G(E, i), G(E, j), G(EB, i)}}, {Scalar(1), {G(E, j), G(E, i), G(EB, i)}}});
                add("Q7 f" + ij, {{Scalar(1), {G(F, i, 2), G(F, j)}}, {Scalar(-1), {G(F, i), G(F, j), G(F, i)}},
                                  {Scalar(1), {G(F, j), G(F, i, 2)}}});
                add("Q7 fbar" + ij,
                    {{Scalar(1), {G(FB, i), G(F, i), G(F, j)}}, {Scalar(-1), {G(FB, i), G(F, j), G(F, i)}},
                     {Scalar(-1), {G(F, i), G(F, j), G(FB, i)}}, {Scalar(1), {G(F, j), G(F, i), G(FB, i)}}});
            }
        }
    for (int i = 1; i + 1 < m; ++i) {
        std::string s = " (i=" + std::to_string(i) + ")";
        add("Q6 e" + s, {{Scalar(1), {G(E, i), G(E, i + 1)}}, {Scalar(-1), {G(E, i + 1), G(E, i)}},
                          {Scalar(-1), {G(EB, i), G(EB, i + 1)}}, {Scalar(-1), {G(EB, i + 1), G(EB, i)}}});
        add("Q6 ebar" + s, {{Scalar(1), {G(E, i), G(EB, i + 1)}}, {Scalar(-1), {G(EB, i + 1), G(E, i)}},
                             {Scalar(-1), {G(EB, i), G(E, i + 1)}}, {Scalar(1), {G(E, i + 1), G(EB, i)}}});
        add("Q6 f" + s, {{Scalar(1), {G(F, i), G(F, i + 1)}}, {Scalar(-1), {G(F, i + 1), G(F, i)}},
                          {Scalar(-1), {G(FB, i), G(FB, i + 1)}}, {Scalar(-1), {G(FB, i + 1), G(FB, i)}}});
        add("Q6 fbar" + s, {{Scalar(1), {G(F, i), G(FB, i + 1)}}, {Scalar(-1), {G(FB, i + 1), G(F, i)}},
                             {Scalar(-1), {G(FB, i), G(F, i + 1)}}, {Scalar(1), {G(F, i + 1), G(FB, i)}}});
    }
    return rels;
}

// Every instance of rel with entries of lambda in [0, lmax]; returns (instances, failures).
std::pair<int, int> u_instances(Check& ck, int m, const URel& rel, int nmin, int nmax, int lmax) {
    int instances = 0, failures = 0;
    for (const auto& la : label_tuples(m, 0, lmax)) {
        std::vector<PiGen> any;
        for (const auto& t : rel.terms)
            if (!t.second.empty()) any = t.second;
        auto tgt = word_target(m, any, la);
        if (std::any_of(tgt.begin(), tgt.end(), [](int x) { return x < 0; })) continue;
        std::vector<std::pair<Scalar, WebExpr>> terms;
        for (const auto& [s, gens] : rel.terms) terms.push_back({s, pi_word(m, gens, la)});
        if (rel.id_coeff) terms.push_back({rel.id_coeff(la), web::id(ObjectWord::ups(la))});
        WebExpr l = lin(terms);
        for (int n = nmin; n <= nmax; ++n) {
            ++instances;
            if (!ck.web_eq(n, l, zero_web(l), {{"relation", rel.tag}, {"m", m}, {"lambda", la}})) ++failures;
        }
    }
    return {instances, failures};
}

void group_r9(Ctx& c) {
    const int nmax = std::min(c.R.nmax, 2), lmax = 3;
    json range = {{"m", {2, 3}}, {"lambda_i", {0, lmax}}, {"n", {c.R.nmin, nmax}}};
    for (const char* q : {"Q1", "Q3", "Q4", "Q5", "Q6", "Q7"}) {
        std::string name = std::string("R9/") + q;
        if (!c.want(name)) continue;
        Check ck(c, name, q, range);
        ck.keep_going = true;
        int instances = 0;
        json failing = json::object();
        for (int m = 2; m <= 3; ++m)
            for (const URel& rel : u_relations(m)) {
                if (rel.tag.rfind(q, 0) != 0) continue;
                auto [i, f] = u_instances(ck, m, rel, c.R.nmin, nmax, lmax);
                instances += i;
                if (f) failing[rel.tag + " m=" + std::to_string(m)] = json{{"failed", f}, {"of", i}};
            }
        ck.info() = {{"instances", instances}};
        if (!failing.empty()) ck.info()["failing"] = failing;
    }

    // The f-line [f_i, f_i+1] = {fbar_i, fbar_i+1} as displayed fails; this runs it with the
    // opposite sign, which is what the natural representation of q(m) satisfies.
    const std::string diag = "R9/Q6-f-opposite-sign";
    if (c.want(diag)) {
        Check ck(c, diag, "Q6", range);
        ck.keep_going = true;
        int instances = 0, failures = 0;
        const auto F = PiGen::F, FB = PiGen::FBar;
        for (int m = 3; m <= 3; ++m)
            for (int i = 1; i + 1 < m; ++i) {
                URel rel{"Q6 f, opposite sign (i=" + std::to_string(i) + ")",
                         {{Scalar(1), {G(F, i), G(F, i + 1)}},
                          {Scalar(-1), {G(F, i + 1), G(F, i)}},
                          {Scalar(1), {G(FB, i), G(FB, i + 1)}},
                          {Scalar(1), {G(FB, i + 1), G(FB, i)}}},
                         {}};
                auto [a, f] = u_instances(ck, m, rel, c.R.nmin, nmax, lmax);
                instances += a;
                failures += f;
            }
        ck.info() = {{"instances", instances}, {"failures", failures}};
    }
}

// ---- R10 ----

SergeevElt random_homogeneous(std::mt19937& rng, int k, int parity) {
    std::uniform_int_distribution<int> nterms(1, 3), coef(-3, 3), which(0, 3);
    auto perms = all_perms(k);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    std::uniform_int_distribution<std::uint32_t> mask(0, (1u << k) - 1);
    SergeevElt x(k);
    int t = nterms(rng);
    for (int a = 0; a < t; ++a) {
        std::uint32_t mk;
        do mk = mask(rng);
        while (int(__builtin_popcount(mk) % 2) != parity);
        int v = coef(rng);
        if (v == 0) v = 1;
        Scalar s;
        switch (which(rng)) {
        case 0: s = Scalar(v); break;
        case 1: s = Scalar(Rational(v, 2)); break;
        case 2: s = Scalar(0, v, 0, 0); break;
        default: s = Scalar(0, 0, v, 0); break;
        }
        x = x + SergeevElt::basis(k, mk, perms[pick(rng)], s);
    }
    return x;
}

// rank of the span of psi(basis of Ser_k) inside End(V_n^{(x)k})
std::size_t psi_image_rank(int n, int k) {
    std::vector<SparseVec> rows;
    std::size_t dim = 0;
    for (std::uint32_t mk = 0; mk < (1u << k); ++mk)
        for (const Perm& p : all_perms(k)) {
            SuperMatrix m = psi_action(SergeevElt::basis(k, mk, p), n);
            dim = m.cols();
            SparseVec v;
            for (std::size_t col = 0; col < m.cols(); ++col)
                for (const auto& e : m.col(col)) v.push_back({std::uint32_t(col * dim + e.row), e.v});
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(v));
        }
    return rank_of(std::move(rows));
}

void group_r10(Ctx& c) {
    if (c.want("R10/psi-homomorphism")) {
        const int nmax = std::min(c.R.nmax, 2);
        Check ck(c, "R10/psi-homomorphism", "sergeev-duality", {{"pairs", c.R.psi_pairs}, {"k", {1, 3}}, {"n", {1, nmax}}});
        std::mt19937 rng(c.R.seed);
        for (int t = 0; t < c.R.psi_pairs && !ck.failed(); ++t) {
            int k = 1 + t % 3, n = 1 + (t / 3) % nmax;
            SergeevElt x = random_homogeneous(rng, k, int(rng() % 2));
            SergeevElt y = random_homogeneous(rng, k, int(rng() % 2));
            ck.mat_eq(psi_action(x * y, n), mat_compose(psi_action(x, n), psi_action(y, n)),
                      {{"pair", t}, {"k", k}, {"n", n}, {"x", x.str()}, {"y", y.str()}});
        }
    }
    if (c.want("R10/psi-injective")) {
        Check ck(c, "R10/psi-injective", "kernel-of-psi", {{"nk", {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}}});
        json ranks = json::array();
        for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
            std::size_t rank = psi_image_rank(n, k), dim = std::size_t(factorial(k)) << k;
            bool injective = rank == dim, expected = k < (n + 1) * (n + 2) / 2;
            ranks.push_back({{"n", n}, {"k", k}, {"rank", rank}, {"dim", dim}});
            ck.expect(injective == expected, {{"n", n}, {"k", k}, {"rank", rank}, {"dim", dim}});
        }
        ck.info() = {{"ranks", ranks}};
    }
    if (c.want("R10/kernel-e-lambda")) {
        Check ck(c, "R10/kernel-e-lambda", "kernel-of-psi", {{"k", {1, c.R.ser_kmax}}, {"n", {c.R.nmin, c.R.nmax}}});
        for (int k = 1; k <= c.R.ser_kmax; ++k)
            for (const auto& la : strict_partitions(k)) {
                SergeevElt e = e_lambda(la);
                for (int n = c.R.nmin; n <= c.R.nmax; ++n) {
                    bool zero = psi_action(e, n).is_zero();
                    ck.expect(zero == (la.length() > n), {{"lambda", la.str()}, {"n", n}, {"psi_zero", zero}});
                }
            }
    }
    if (c.want("R10/xi-compatibility")) {
        Check ck(c, "R10/xi-compatibility", "sergeev-isomorphism", {{"k", {1, 3}}, {"n", {c.R.nmin, c.R.nmax}}});
        std::mt19937 rng(c.R.seed + 1);
        for (int k = 1; k <= 3; ++k)
            for (int n = c.R.nmin; n <= c.R.nmax; ++n)
                for (int t = 0; t < 5; ++t) {
                    SergeevElt x = random_homogeneous(rng, k, t % 2);
                    ck.mat_eq(eval_web(n, xi_image(x)), psi_action(x, n), {{"k", k}, {"n", n}, {"x", x.str()}});
                }
    }
    if (c.want("R10/hom-vanishing")) {
        const int nmax = std::min(c.R.nmax, 2);
        Check ck(c, "R10/hom-vanishing", "sergeev-duality(1)", {{"r", {0, 3}}, {"s", {0, 3}}, {"n", {1, nmax}}});
        for (int n = 1; n <= nmax; ++n)
            for (int r = 0; r <= 3; ++r)
                for (int s = 0; s <= 3; ++s) {
                    if (r == s || (n == 2 && r + s > 5)) continue;
                    auto h = hom_dim(n, ObjectWord::ups(ones(r)), ObjectWord::ups(ones(s)));
                    ck.expect(h.first == 0 && h.second == 0,
                              {{"n", n}, {"r", r}, {"s", s}, {"even", h.first}, {"odd", h.second}});
                }
    }
    if (c.want("R10/fullness")) {
        Check ck(c, "R10/fullness", "full", {{"nk", {{1, 2}, {1, 3}, {2, 2}}}});
        json rec = json::array();
        for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
            auto h = hom_dim(n, ObjectWord::ups(ones(k)), ObjectWord::ups(ones(k)));
            std::size_t rank = psi_image_rank(n, k);
            rec.push_back({{"n", n}, {"k", k}, {"hom_even", h.first}, {"hom_odd", h.second}, {"psi_rank", rank}});
            ck.expect(h.first + h.second == rank, rec.back());
        }
        ck.info() = {{"dims", rec}};
    }
}

// ---- R11 ----

void group_r11(Ctx& c) {
    if (c.want("R11/staircase-kernel")) {
        Check ck(c, "R11/staircase-kernel", "e_lambda(n)=0", {{"nk", {{1, 3}, {2, 6}}}});
        for (int n = 1; n <= 2; ++n) {
            StrictPartition la = staircase(n);
            bool zero = psi_action(e_lambda(la), n).is_zero();
            ck.expect(zero, {{"n", n}, {"lambda", la.str()}});
        }
    }
    if (c.want("R11/quasi-idempotent")) {
        Check ck(c, "R11/quasi-idempotent", "Sergeevidempotent", {{"k", {1, c.R.ser_kmax}}});
        json kappas = json::object();
        for (int k = 1; k <= c.R.ser_kmax; ++k)
            for (const auto& la : strict_partitions(k)) {
                SergeevElt e = e_lambda(la);
                try {
                    Scalar kappa = quasi_idempotent_constant(e);
                    kappas[la.str()] = scalar_format(kappa);
                    ck.expect(!kappa.is_zero() && e.parity() == 0, {{"lambda", la.str()}, {"kappa", scalar_format(kappa)}});
                } catch (const std::exception& ex) {
                    ck.fail({{"lambda", la.str()}, {"error", ex.what()}});
                }
            }
        ck.info() = {{"kappa", kappas}};
    }
}

// ---- R12 ----

void group_r12(Ctx& c) {
    if (c.want("R12/staircase-tableaux")) {
        Check ck(c, "R12/staircase-tableaux", "staircase-lr-tableau", {{"n", {1, 2}}, {"bound", c.R.bound}});
        std::size_t shapes = 0;
        for (int n = 1; n <= 2; ++n)
            for (const auto& r : verify_prop_714(n, c.R.bound)) {
                ++shapes;
                ck.expect(r.ok, {{"mu", r.mu.str()}, {"n", n}, {"detail", r.detail}});
            }
        ck.info() = {{"shapes", shapes}};
    }
    if (c.want("R12/worked-example")) {
        Check ck(c, "R12/worked-example", "staircase-example", {{"mu", "8,5,4,2"}, {"n", 2}});
        StrictPartition mu({8, 5, 4, 2});
        ShiftedTableau t = staircase_tableau(mu, 2);
        std::string w = format_word(reading_word(t));
        auto cont = content(t);
        long long f = lr_coefficient(staircase(2), StrictPartition({8, 4, 1}), mu);
        ck.expect(reading_word(t) == parse_word("1 2 1' 2' 3 1' 2' 2 1' 1 1 1 1"), {{"word", w}});
        ck.expect(cont == std::vector<int>({8, 4, 1}), {{"content", cont}});
        ck.expect(is_lr_tableau(t), {{"tableau", t.str()}});
        ck.expect(f >= 1, {{"f", f}});
        ck.info() = {{"word", w}, {"tableau", t.str()}, {"f", f}};
    }
    if (c.want("R12/lr-vs-schur-p")) {
        const int m = 4;
        Check ck(c, "R12/lr-vs-schur-p", "stembridge-rule", {{"total", c.R.lr_total}, {"vars", m}});
        std::size_t pairs = 0;
        for (int a = 0; a <= c.R.lr_total; ++a)
            for (int b = 0; a + b <= c.R.lr_total; ++b)
                for (const auto& la : strict_partitions(a))
                    for (const auto& nu : strict_partitions(b)) {
                        if (la.length() > m || nu.length() > m) continue;
                        ++pairs;
                        auto exp = expand_in_p(poly_mul(schur_p(la, m), schur_p(nu, m)), m);
                        for (const auto& mu : strict_partitions(a + b)) {
                            if (mu.length() > m) continue;
                            long long lr = lr_coefficient(la, nu, mu);
                            long long pc = exp.count(mu) ? exp.at(mu) : 0;
                            ck.expect(lr == pc, {{"lambda", la.str()}, {"nu", nu.str()}, {"mu", mu.str()},
                                                 {"tableaux", lr}, {"schur_p", pc}});
                        }
                    }
        ck.info() = {{"pairs", pairs}};
    }
}

using GroupFn = void (*)(Ctx&);

GroupFn group_fn(const std::string& g) {
    static const std::pair<const char*, GroupFn> table[] = {
        {"R1", group_r1}, {"R2", group_r2}, {"R3", group_r3},   {"R4", group_r4},   {"R5", group_r5},   {"R6", group_r6},
        {"R7", group_r7}, {"R8", group_r8}, {"R9", group_r9}, {"R10", group_r10}, {"R11", group_r11}, {"R12", group_r12}};
    for (const auto& [name, fn] : table)
        if (g == name) return fn;
    return nullptr;
}

void sort_results(std::vector<CheckResult>& v) {
    std::stable_sort(v.begin(), v.end(), [](const CheckResult& a, const CheckResult& b) {
        auto ga = group_of(a.name), gb = group_of(b.name);
        int na = std::stoi(ga.substr(1)), nb = std::stoi(gb.substr(1));
        if (na != nb) return na < nb;
        if (a.name != b.name) return a.name < b.name;
        return a.params.dump() < b.params.dump();
    });
}

} // namespace

std::vector<CheckResult> run_group(const std::string& group, const Ranges& ranges, const std::string& only) {
    std::vector<CheckResult> out;
    GroupFn fn = group_fn(group);
    if (!fn) throw std::invalid_argument("unknown catalog group " + group);
    Ctx ctx{ranges, only.empty() ? group : only, out, 0, 0, 0, json()};
    fn(ctx);
    if (ranges.equivariance && ctx.eq_matrices > 0) {
        CheckResult r;
        r.name = group + "/equivariance";
        r.label = "q(n)-equivariance";
        r.params = {{"n", {ctx.eq_nmin, ctx.eq_nmax}}};
        r.info = {{"matrices", ctx.eq_matrices}};
        if (!ctx.eq_witness.is_null()) {
            r.status = Status::Fail;
            r.witness = ctx.eq_witness;
        }
        out.push_back(std::move(r));
    }
    sort_results(out);
    return out;
}

std::vector<CheckResult> run_catalog(const std::string& only, const Ranges& ranges) {
    std::vector<CheckResult> out;
    std::string group = group_of(only);
    for (const auto& g : catalog_groups()) {
        if (!only.empty() && g != group) continue;
        auto part = run_group(g, ranges, only);
        out.insert(out.end(), part.begin(), part.end());
    }
    if (!only.empty() && out.empty()) throw std::invalid_argument("no catalog entry named " + only);
    return out;
}

} // namespace qweb
