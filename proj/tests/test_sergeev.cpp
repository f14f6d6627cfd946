#include <doctest.h>

#include <algorithm>
#include <random>

#include "qweb/sergeev.hpp"
#include "qweb/shifted.hpp"

using namespace qweb;

TEST_CASE("perm basics") {
    Perm s = Perm::transposition(3, 1, 2), t = Perm::transposition(3, 2, 3);
    CHECK((s * t).img == std::vector<int>{2, 3, 1});
    CHECK((s * s) == Perm::identity(3));
    CHECK((s * t).inverse() * (s * t) == Perm::identity(3));
    CHECK(all_perms(4).size() == 24);
}

TEST_CASE("normal forms and small products") {
    const int k = 3;
    auto s1 = SergeevElt::s(k, 1), c1 = SergeevElt::c(k, 1), c2 = SergeevElt::c(k, 2);
    CHECK(s1 * s1 == SergeevElt::one(k));
    CHECK(s1 * c1 == c2 * s1);
    CHECK((c1 * c2) * (c2 * c1) == SergeevElt::one(k));
    CHECK(c1 * c2 == -(c2 * c1));
    CHECK((s1 * c1).str() == "1*c[2]*p[2,1,3]");
    CHECK(SergeevElt(k).str() == "0");
}

TEST_CASE("dimension of Ser_k") {
    for (int k = 0; k <= 6; ++k) {
        long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        std::vector<std::uint32_t> idx;
        for (std::uint32_t m = 0; m < (1u << k); ++m)
            for (const auto& p : all_perms(k)) idx.push_back(SergeevElt::basis(k, m, p).raw().front().first);
        std::sort(idx.begin(), idx.end());
        idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
        CHECK(idx.size() == std::size_t(f << k));
    }
}

TEST_CASE("text round trip") {
    const int k = 3;
    SergeevElt x = Scalar(Rational(1, 2)) * SergeevElt::s(k, 2) + Scalar::i() * SergeevElt::c(k, 3) * SergeevElt::s(k, 1) -
                   SergeevElt::one(k);
    CHECK(SergeevElt::parse(x.str(), k) == x);
    CHECK(SergeevElt::parse("s1*c1", k) == SergeevElt::s(k, 1) * SergeevElt::c(k, 1));
    CHECK(SergeevElt::parse("tau(1,2) - pi(2)", k).is_zero());
    CHECK(SergeevElt::parse("2*c[1,2] - 2*c[1,2]", k).is_zero());
    CHECK(SergeevElt::parse("(1*r2)*c[1]", k) == Scalar::sqrt2() * SergeevElt::c(k, 1));
    CHECK_THROWS_AS(SergeevElt::parse("c[4]", k), ParseError);
    CHECK_THROWS_AS(SergeevElt::parse("q1", k), ParseError);
    CHECK_THROWS_AS(SergeevElt::parse("p[1,2]", k), ParseError);
}

TEST_CASE("odd Jucys-Murphy elements") {
    CHECK(pi(1, 3).is_zero());
    auto p2 = pi(2, 2);
    CHECK(p2 * p2 == -SergeevElt::one(2));
    auto t = tau(1, 2, 3);
    CHECK(t.parity() == 1);
    bool uses_r2 = false;
    for (const auto& [b, v] : t.terms()) uses_r2 = uses_r2 || !v.c.is_zero();
    CHECK(uses_r2);
    CHECK_THROWS(tau(2, 2, 3));
}

TEST_CASE("clasps") {
    CHECK(clasp(1) == SergeevElt::one(1));
    CHECK(clasp(2) == Scalar(Rational(1, 2)) * (SergeevElt::one(2) + SergeevElt::s(2, 1)));
    for (int k = 1; k <= 5; ++k) CHECK(clasp(k) * clasp(k) == clasp(k));
}

TEST_CASE("quasi-idempotents for small partitions") {
    CHECK(b_lambda(StrictPartition({3})).size() == 6);
    CHECK(b_lambda(StrictPartition({3, 2})).size() == 12);
    const int k = 3;
    auto one = SergeevElt::one(k);
    auto p2 = pi(2, k) * pi(2, k), p3 = pi(3, k) * pi(3, k);
    // cols 1,2,2
    CHECK(a_lambda(StrictPartition({2, 1})) == (Scalar(3) * one - p2) * (Scalar(3) * one - p3));
    // contents 0,1,0: box 2 kills 0, box 3 kills 1 and 2
    CHECK(content_projector(StrictPartition({2, 1})) == p2 * (one + p3) * (Scalar(3) * one + p3));
    CHECK(e_lambda(StrictPartition({2, 1})) == content_projector(StrictPartition({2, 1})) * b_lambda(StrictPartition({2, 1})));
    CHECK_THROWS_AS(quasi_idempotent_constant(a_lambda(StrictPartition({2, 1})) * b_lambda(StrictPartition({2, 1}))),
                    std::domain_error);
    for (int n = 1; n <= 4; ++n)
        for (const auto& mu : strict_partitions(n)) {
            auto e = e_lambda(mu);
            CHECK(e.parity() == 0);
            Scalar kappa = quasi_idempotent_constant(e);
            CHECK(!kappa.is_zero());
            if (mu.length() > 1) CHECK(psi_action(e, 1).is_zero());
        }
}

TEST_CASE("psi on small cases") {
    // psi(c1)(v1) = i v1bar for n = 1, k = 1
    auto c = psi_action(SergeevElt::c(1, 1), 1);
    CHECK(c.at(1, 0) == Scalar::i());
    CHECK(c.at(0, 1) == -Scalar::i());
    // psi(s1)(v1bar (x) v1bar) = -v1bar (x) v1bar
    auto s = psi_action(SergeevElt::s(2, 1), 1);
    CHECK(s.at(3, 3) == Scalar(-1));
    CHECK(s.at(2, 1) == Scalar(1));
}

TEST_CASE("psi is multiplicative") {
    std::mt19937 g(1);
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 2; ++n) {
            auto perms = all_perms(k);
            std::uniform_int_distribution<int> pm(0, int(perms.size()) - 1), mm(0, (1 << k) - 1);
            for (int t = 0; t < 10; ++t) {
                auto x = SergeevElt::basis(k, mm(g), perms[pm(g)]);
                auto y = SergeevElt::basis(k, mm(g), perms[pm(g)]);
                CHECK(psi_action(x * y, n) == mat_compose(psi_action(x, n), psi_action(y, n)));
            }
        }
}
