#include <doctest.h>

#include <random>

#include "qweb/superlinalg.hpp"

using namespace qweb;

namespace {

GradedBasis small_basis(const std::string& tag, std::vector<Parity> par) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < par.size(); ++i) labels.push_back(tag + std::to_string(i));
    return GradedBasis::simple(labels, par);
}

SuperMatrix random_homogeneous(std::mt19937& g, const GradedBasis& d, const GradedBasis& c, Parity p, int density) {
    SuperMatrix m(d, c);
    std::uniform_int_distribution<int> v(-3, 3), pick(0, 99);
    for (std::size_t j = 0; j < d.dim(); ++j)
        for (std::size_t r = 0; r < c.dim(); ++r)
            if ((d.parity(j) ^ c.parity(r)) == p && pick(g) < density) m.add_to(r, j, Scalar(v(g)));
    return m;
}

} // namespace

TEST_CASE("identity, add, scale") {
    GradedBasis b = small_basis("x", {0, 1, 0});
    SuperMatrix id = mat_identity(b);
    CHECK(id.nnz() == 3);
    CHECK(mat_rank(id) == 3);
    CHECK(mat_add(id, mat_scale(Scalar(-1), id)).is_zero());
    CHECK(mat_scale(Scalar(1), id) == id);
    CHECK(mat_rank(SuperMatrix::zero(b, b)) == 0);
    CHECK(supertrace(id) == Scalar(1));
    CHECK(supertrace(SuperMatrix::zero(b, b)).is_zero());
    CHECK(mat_inverse(id) == id);
    CHECK(mat_inverse(mat_scale(Scalar(2), id)) == mat_scale(Scalar(Rational(1, 2)), id));
    CHECK_THROWS_AS(mat_add(id, SuperMatrix::zero(b, small_basis("y", {0, 1, 0}))), BasisMismatch);
}

TEST_CASE("super-interchange on random homogeneous pairs") {
    std::mt19937 g(11);
    GradedBasis a = small_basis("a", {0, 1, 1}), b = small_basis("b", {1, 0});
    GradedBasis c = small_basis("c", {0, 1}), d = small_basis("d", {1, 1, 0});
    for (int t = 0; t < 40; ++t) {
        Parity pf = t % 2, pg = (t / 2) % 2;
        SuperMatrix f = random_homogeneous(g, a, b, pf, 60);
        SuperMatrix h = random_homogeneous(g, c, d, pg, 60);
        SuperMatrix lhs = mat_compose(mat_tensor(f, mat_identity(d)), mat_tensor(mat_identity(a), h));
        SuperMatrix rhs = mat_compose(mat_tensor(mat_identity(b), h), mat_tensor(f, mat_identity(c)));
        if (pf && pg) rhs = mat_scale(Scalar(-1), rhs);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("tensor associativity and compose associativity") {
    std::mt19937 g(3);
    GradedBasis a = small_basis("a", {0, 1}), b = small_basis("b", {1, 0, 1}), c = small_basis("c", {0, 1});
    SuperMatrix f = random_homogeneous(g, a, b, 1, 70), h = random_homogeneous(g, b, c, 0, 70);
    SuperMatrix k = random_homogeneous(g, c, a, 1, 70);
    CHECK(mat_tensor(mat_tensor(f, h), k) == mat_tensor(f, mat_tensor(h, k)));
    CHECK(mat_compose(k, mat_compose(h, f)) == mat_compose(mat_compose(k, h), f));
    SuperMatrix bad = SuperMatrix::zero(a, a);
    CHECK_THROWS_AS(mat_compose(bad, h), BasisMismatch);
}

TEST_CASE("dot tensor square sign") {
    // dot-like odd map swapping an even and an odd vector
    GradedBasis v = small_basis("v", {0, 1});
    SuperMatrix d(v, v);
    d.add_to(1, 0, Scalar::i());
    d.add_to(0, 1, -Scalar::i());
    SuperMatrix dd = mat_tensor(d, d);
    // column (odd, even) = index 2: f(v1bar) (x) g(v1) picks up (-1)^{1*1}
    CHECK(dd.at(1, 2) == -(d.at(0, 1) * d.at(1, 0)));
    CHECK(dd.at(2, 1) == d.at(1, 0) * d.at(0, 1));
}

TEST_CASE("inverse of random invertible matrices") {
    std::mt19937 g(5);
    for (int size : {1, 4, 9, 20}) {
        std::vector<Parity> par(size);
        for (int i = 0; i < size; ++i) par[i] = i % 2;
        GradedBasis b = small_basis("e", par);
        // unipotent lower times upper: always invertible
        SuperMatrix L = mat_identity(b), U = mat_identity(b);
        std::uniform_int_distribution<int> v(-2, 2);
        for (int r = 0; r < size; ++r)
            for (int c = 0; c < r; ++c) {
                L.add_to(r, c, Scalar(v(g)));
                U.add_to(c, r, Scalar(Rational(v(g), 3)));
            }
        SuperMatrix m = mat_compose(L, U);
        SuperMatrix inv = mat_inverse(m);
        CHECK(mat_compose(inv, m) == mat_identity(b));
        CHECK(mat_compose(m, inv) == mat_identity(b));
    }
    GradedBasis b = small_basis("s", {0, 0});
    SuperMatrix sing(b, b);
    sing.add_to(0, 0, Scalar(1));
    sing.add_to(0, 1, Scalar(1));
    CHECK_THROWS_AS(mat_inverse(sing), SingularMatrix);
}

TEST_CASE("null space") {
    std::vector<SparseVec> rows = {{{0, Scalar(1)}, {1, Scalar(1)}}, {{1, Scalar(1)}, {2, Scalar(-1)}}};
    auto ns = solve_null(rows, 3);
    REQUIRE(ns.size() == 1);
    // x = (-1, 1, 1) up to scale
    CHECK(ns[0].size() == 3);
    CHECK(ns[0][0].second == -ns[0][1].second);
    CHECK(ns[0][1].second == ns[0][2].second);
}

TEST_CASE("json layout") {
    GradedBasis b = small_basis("x", {0, 1});
    SuperMatrix m(b, b);
    m.add_to(1, 0, Scalar::i());
    auto j = m.to_json();
    CHECK(j["domain"][1][0] == "x1");
    CHECK(j["domain"][1][1] == 1);
    CHECK(j["entries"][0][0] == 1);
    CHECK(j["entries"][0][1] == 0);
    CHECK(j["entries"][0][2] == "1*i");
}
