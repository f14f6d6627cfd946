#include <doctest.h>

#include "qweb/qfunctor.hpp"

using namespace qweb;
using namespace qweb::web;

namespace {
SuperMatrix E(int n, const WebExpr& w) { return eval_web(n, w); }
SuperMatrix E(int n, const std::string& s) { return eval_web(n, parse_dsl(s)); }
SuperMatrix scaled(long long c, const SuperMatrix& m) { return mat_scale(Scalar(c), m); }
long long binom(int a, int b) {
    long long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}
} // namespace

TEST_CASE("sym bases") {
    CHECK(sym_dim(1, 2) == 2);
    CHECK(sym_basis(1, 2).label(0) == "v1v1");
    CHECK(sym_basis(1, 2).label(1) == "v1vb1");
    CHECK(sym_basis(1, 2).parity(1) == 1);
    CHECK(sym_dim(1, 0) == 1);
    CHECK(sym_basis(1, 0).label(0) == "1");
    CHECK(sym_dim(2, 1) == 4);
    for (int n = 1; n <= 4; ++n)
        for (int k = 0; k <= 6; ++k) {
            long long d = 0;
            for (int j = 0; j <= std::min(n, k); ++j) d += binom(n, j) * binom(n + k - j - 1, k - j);
            if (k == 0) d = 1;
            CHECK(sym_dim(n, k) == std::size_t(d));
        }
}

TEST_CASE("generator matrices") {
    auto d = eval_dot(1, 1);
    CHECK(d.at(1, 0) == Scalar::i());
    CHECK(d.at(0, 1) == -Scalar::i());
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) {
            auto dk = eval_dot(n, k);
            CHECK(mat_compose(dk, dk) == scaled(k, mat_identity(sym_basis(n, k))));
            CHECK(supertrace(dk).is_zero());
            CHECK(supertrace(mat_identity(sym_basis(n, k))).is_zero());
        }
    // odd square vanishes under merge
    auto m = eval_merge(1, 1, 1);
    CHECK(m.col(3).empty());
    auto s = eval_split(2, 1, 1);
    // v1 v2 -> v1 (x) v2 + v2 (x) v1
    std::size_t j = 1; // words of degree 2 for n = 2: v1v1, v1v2, ...
    CHECK(sym_basis(2, 2).label(j) == "v1v2");
    CHECK(s.col(j).size() == 2);
    CHECK(s.at(0 * 4 + 1, j) == Scalar(1));
    CHECK(s.at(1 * 4 + 0, j) == Scalar(1));
    for (int n = 1; n <= 3; ++n)
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; a + b <= 5; ++b)
                CHECK(mat_compose(eval_merge(n, a, b), eval_split(n, a, b)) ==
                      scaled(binom(a + b, b), mat_identity(sym_basis(n, a + b))));
}

TEST_CASE("zigzags and bubbles") {
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto up = E(n, compose(tensor(id(true, k), capL(k)), tensor(cupL(k), id(true, k))));
            CHECK(up == mat_identity(sym_basis(n, k)));
            auto dn = E(n, compose(tensor(capL(k), id(false, k)), tensor(id(false, k), cupL(k))));
            CHECK(dn == mat_identity(dual_sym_basis(n, k)));
            CHECK(E(n, compose(capR(k), cupL(k))).is_zero());
            CHECK(E(n, compose({capR(k), tensor(dot(k), id(false, k)), cupL(k)})).is_zero());
        }
}

TEST_CASE("crossings") {
    for (int n = 1; n <= 2; ++n) {
        // upward 1-1 crossing is the graded flip
        auto x = E(n, xup(1, 1));
        auto v = sym_basis(n, 1);
        for (std::size_t a = 0; a < v.dim(); ++a)
            for (std::size_t b = 0; b < v.dim(); ++b) {
                Scalar sg = v.parity(a) && v.parity(b) ? Scalar(-1) : Scalar(1);
                CHECK(x.at(b * v.dim() + a, a * v.dim() + b) == sg);
            }
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 2; ++l) {
                auto xx = E(n, compose(xup(l, k), xup(k, l)));
                CHECK(xx == mat_identity(sym_basis(n, k).tensor(sym_basis(n, l))));
                auto L = E(n, xl(k, l));
                auto R = E(n, rcross(k, l));
                CHECK(mat_compose(L, R) == mat_identity(R.domain()));
                CHECK(mat_compose(R, L) == mat_identity(L.domain()));
            }
    }
}

TEST_CASE("downward dot squares to -k") {
    for (int n = 1; n <= 2; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto d = E(n, ddot(k));
            CHECK(mat_compose(d, d) == scaled(-k, mat_identity(dual_sym_basis(n, k))));
        }
}

TEST_CASE("xi agrees with psi") {
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 3; ++n) {
            for (int i = 1; i <= k; ++i) CHECK(E(n, xi_image(SergeevElt::c(k, i))) == psi_action(SergeevElt::c(k, i), n));
            for (int i = 1; i < k; ++i) CHECK(E(n, xi_image(SergeevElt::s(k, i))) == psi_action(SergeevElt::s(k, i), n));
            for (const auto& p : all_perms(k))
                CHECK(E(n, xi_image(SergeevElt::basis(k, (1u << k) - 1, p))) ==
                      psi_action(SergeevElt::basis(k, (1u << k) - 1, p), n));
        }
}

TEST_CASE("perm independent of reduced word") {
    for (int k = 3; k <= 4; ++k)
        for (const auto& p : all_perms(k))
            CHECK(E(2, perm_word(p.img, true)) == E(2, perm_word(p.img, false)));
}

TEST_CASE("q(n) action and equivariance") {
    auto acts = qn_generator_action(1, ObjectWord::parse("^1"));
    REQUIRE(acts.size() == 2);
    CHECK(acts[0] == mat_identity(sym_basis(1, 1)));
    for (int n = 1; n <= 2; ++n)
        for (const char* s : {"dot(2)", "merge(1,2)", "split(2,1)", "cupL(2)", "capL(2)", "xr(1,2)", "xup(2,1)"}) {
            auto w = parse_dsl(s);
            auto t = typecheck(w);
            auto f = check_equivariance(n, t.dom, t.cod, E(n, w));
            CHECK_MESSAGE(!f, s);
        }
}

TEST_CASE("hom dimensions") {
    auto h = hom_dim(1, ObjectWord::parse("^1"), ObjectWord::parse("^1"));
    CHECK(h.first == 1);
    CHECK(h.second == 1);
    auto z = hom_dim(1, ObjectWord::parse("^1"), ObjectWord::parse("^1^1"));
    CHECK(z.first + z.second == 0);
}
