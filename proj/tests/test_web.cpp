#include <doctest.h>

#include "qweb/web.hpp"

using namespace qweb;

TEST_CASE("typecheck") {
    auto t = typecheck(parse_dsl("merge(2,3)"));
    CHECK(t.dom == ObjectWord::parse("^2^3"));
    CHECK(t.cod == ObjectWord::parse("^5"));
    auto u = typecheck(parse_dsl("merge(1,2) ; split(1,2)"));
    CHECK(u.dom == ObjectWord::parse("^3"));
    CHECK(u.cod == ObjectWord::parse("^3"));
    CHECK_THROWS_AS(typecheck(parse_dsl("merge(1,1) ; dot(3)")), TypeError);
    auto l = typecheck(parse_dsl("xl(2,3)"));
    CHECK(l.dom == ObjectWord::parse("v3^2"));
    CHECK(l.cod == ObjectWord::parse("^2v3"));
    auto ex = typecheck(expand(parse_dsl("xl(2,3)")));
    CHECK(ex.dom == l.dom);
    CHECK(ex.cod == l.cod);
}

TEST_CASE("parse shapes and errors") {
    auto w = parse_dsl("merge(1,1) ; split(1,1)");
    CHECK(w->op == Op::Compose);
    CHECK(w->kids[0]->op == Op::Merge);
    auto d = parse_dsl("dot(1) * id(^1)");
    CHECK(d->op == Op::Tensor);
    CHECK(d->kids[1]->op == Op::Id);
    try {
        parse_dsl("merge(1,1) ; splt(1,1)");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.pos == 13);
    }
    CHECK_THROWS_AS(parse_dsl("merge(1)"), ParseError);
    CHECK_THROWS_AS(parse_dsl("(dot(1)"), ParseError);
}

TEST_CASE("format round trip") {
    for (const char* s : {"merge(1,1) ; split(1,1)", "dot(1) * id(^1)", "a", "(dot(1) ; dot(1)) * id(v2)",
                          "id(^1) * (dot(1) * dot(2))", "lin({1/2}: clasp(2), {-1}: id(^1) * id(^1))",
                          "zero([^1,v2],[])", "perm(2,3,1) ; explode(1,2)"}) {
        if (std::string(s) == "a") {
            CHECK_THROWS(parse_dsl(s));
            continue;
        }
        auto w = parse_dsl(s);
        std::string f = format_dsl(w);
        CHECK(format_dsl(parse_dsl(f)) == f);
    }
}

TEST_CASE("builders") {
    using namespace web;
    CHECK(typecheck(rungL(2, 3, 0)).dom == ObjectWord::parse("^2^3"));
    CHECK(rungL(2, 3, 0)->op != Op::RungL);
    CHECK(is_zero_web(dot(0)));
    CHECK(is_zero_web(merge(-1, 2)));
    CHECK(is_zero_web(compose(dot(2), compose(merge(1, 1), split(1, 1))) ) == false);
    CHECK(is_zero_web(tensor(dot(1), merge(2, -1))));
    auto p = pi_generator(2, {PiGen::E, 1, 1}, {1, 2});
    auto t = typecheck(p);
    CHECK(t.cod == ObjectWord::parse("^2^1"));
    CHECK(is_zero_web(pi_generator(2, {PiGen::E, 1, 3}, {1, 2})));
    CHECK(dot_count(parse_dsl("dot(1) * dot(2) ; merge(1,2)")) == 2);
}
