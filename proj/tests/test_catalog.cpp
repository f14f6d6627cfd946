#include <doctest.h>

#include "qweb/catalog.hpp"
#include "qweb/qfunctor.hpp"

using namespace qweb;

TEST_CASE("signed permutation path agrees with the generic one") {
    // lin(...) hides the permutation shape, forcing the multiply-through evaluation
    const char* fast = "(xup(1,1) * id(^1)) ; (id(^1) * xup(1,1)) ; (xup(1,1) * id(^1))";
    const char* slow = "(lin({1}: xup(1,1)) * id(^1)) ; (id(^1) * lin({1}: xup(1,1))) ; (lin({1}: xup(1,1)) * id(^1))";
    for (int n = 1; n <= 3; ++n) {
        clear_eval_cache();
        CHECK(eval_web(n, parse_dsl(fast)) == eval_web(n, parse_dsl(slow)));
    }
    const char* fast2 = "(id(^1) * xup(2,2)) ; (xup(2,1) * id(^2))";
    const char* slow2 = "(id(^1) * lin({1}: xup(2,2))) ; (lin({1}: xup(2,1)) * id(^2))";
    for (int n = 1; n <= 2; ++n) CHECK(eval_web(n, parse_dsl(fast2)) == eval_web(n, parse_dsl(slow2)));
}

TEST_CASE("catalog selection and stable reports") {
    Ranges r;
    r.kmax = 2;
    r.nmax = 1;
    auto a = run_catalog("R2", r), b = run_catalog("R2", r);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].to_json(false).dump() == b[i].to_json(false).dump());
        CHECK(a[i].status == Status::Pass);
    }
    CHECK(a.back().name == "R2/equivariance");
    auto one = run_catalog("R12/worked-example", r);
    REQUIRE(one.size() == 1);
    CHECK(one[0].status == Status::Pass);
    CHECK_THROWS_AS(run_catalog("R99", r), std::invalid_argument);
    std::size_t unverified = 0;
    for (const auto& c : run_catalog("R1", r)) unverified += c.status == Status::UnverifiedByLabel;
    CHECK(unverified == 9);
}
