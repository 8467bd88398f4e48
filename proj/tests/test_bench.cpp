#include <doctest.h>

#include "cbneed/bench.hpp"
#include "cbneed/oracle.hpp"
#include "cbneed/syntax.hpp"

using namespace cbneed;

TEST_CASE("gen_t") {
    CHECK(alpha_eq(gen_t(1), parse_term("\\x.\\y.y x x")));
    CHECK(alpha_eq(gen_t(2), parse_term("\\x.(\\x1.\\y1.y1 x1 x1) (\\y.y x x)")));
    // linear growth: constant size difference between consecutive members
    std::size_t d = term_size(gen_t(2)) - term_size(gen_t(1));
    for (std::size_t n = 2; n < 6; ++n)
        CHECK(term_size(gen_t(n + 1)) - term_size(gen_t(n)) == d);
}

TEST_CASE("gen_u") {
    CHECK(alpha_eq(gen_u(0), parse_term("\\z.z")));
    CHECK(alpha_eq(gen_u(1), parse_term("\\y.y (\\z.z) (\\z.z)")));
    for (std::size_t n = 0; n < 10; ++n)
        CHECK(term_size(gen_u(n)) >= (std::size_t{1} << n));
    // exact node count: |u_n| = 6 * 2^n - 4
    for (std::size_t n = 0; n < 10; ++n)
        CHECK(term_size(gen_u(n)) == 6 * (std::size_t{1} << n) - 4);
}

TEST_CASE("family points") {
    FamilyPoint p1 = run_family_point(1);
    CHECK(p1.beta_steps == 1);
    CHECK(p1.beta_matches);
    CHECK(p1.unfold_matches);
    CHECK(p1.useful_counts[static_cast<std::size_t>(StepKind::UsefulMult)] == 1);
    CHECK(p1.useful_counts[static_cast<std::size_t>(StepKind::UsefulExp)] == 0);

    FamilyPoint p3 = run_family_point(3);
    CHECK(p3.beta_steps == 3);
    CHECK(p3.beta_matches);
    CHECK(p3.unfold_matches);
    CHECK(p3.useful_counts[static_cast<std::size_t>(StepKind::UsefulMult)] == 3);
    CHECK(p3.unfold_size >= 8);
    // open and useful runs coincide on this family
    CHECK(p3.open_counts[static_cast<std::size_t>(StepKind::OpenMult)] == 3);
    CHECK(p3.open_counts[static_cast<std::size_t>(StepKind::OpenExp)] == 0);
}

TEST_CASE("sharing gap grows") {
    auto points = run_family(8);
    REQUIRE(points.size() == 8);
    for (const auto& p : points) {
        CHECK(p.beta_matches);
        CHECK(p.unfold_matches);
        CHECK(p.unfold_size >= (std::size_t{1} << p.n));
        CHECK_FALSE(p.unfold_capped);
    }
    // shared size linear, unfolded size exponential
    CHECK(points[7].final_program_size < 8 * 30 + 30);
    CHECK(points[7].unfold_size > 4 * points[3].unfold_size);
}
