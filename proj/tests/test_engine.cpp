#include <doctest.h>

#include "cbneed/engine.hpp"
#include "cbneed/syntax.hpp"

using namespace cbneed;

namespace {
Program P(const std::string& s) { return parse_program(s).program; }
TermPtr T(const std::string& s) { return parse_term(s); }

Program after(const std::string& src, Strategy s) {
    StepResult r = step_once(P(src), s);
    REQUIRE(r.status == StepStatus::Stepped);
    return r.step->after;
}
}  // namespace

TEST_CASE("closed multiplicative step uses program plugging") {
    // the new [y <- s] lands right after the rewritten content
    Program q = after("x t [x <- (\\y.u) s t'][z <- u']", Strategy::Closed);
    CHECK(alpha_eq(q, P("x t [x <- u t'][y <- s][z <- u']")));

    Program top = after("(\\x.x) y", Strategy::Closed);
    CHECK(alpha_eq(top, P("x [x <- y]")));
}

TEST_CASE("closed exponential step substitutes a fresh copy") {
    StepResult r = step_once(P("x [x <- \\z.z]"), Strategy::Closed);
    REQUIRE(r.status == StepStatus::Stepped);
    CHECK(r.step->kind == StepKind::ClosedExp);
    CHECK(alpha_eq(r.step->after.head, T("\\z.z")));
    // Barendregt: the copy's binder is renamed
    CHECK(r.step->after.head->name != "z");
    REQUIRE(r.step->copied);
    CHECK(alpha_eq(r.step->copied, T("\\z.z")));
}

TEST_CASE("closed engine reports stuck on free head variables") {
    StepResult r = step_once(P("x"), Strategy::Closed);
    CHECK(r.status == StepStatus::Stuck);
    CHECK(r.stuck_var == "x");

    StepResult deep = step_once(P("x [x <- y t]"), Strategy::Closed);
    CHECK(deep.status == StepStatus::Stuck);
    CHECK(deep.stuck_var == "y");
}

TEST_CASE("closed answers") {
    CHECK(step_once(P("\\x.x"), Strategy::Closed).status == StepStatus::Normal);
    CHECK(step_once(P("\\x.x [y <- z z]"), Strategy::Closed).status ==
          StepStatus::Normal);
}

TEST_CASE("open steps reach redexes under inert heads") {
    Program a = after("x ((\\z.z) (\\w.w)) [y <- t]", Strategy::Open);
    CHECK(alpha_eq(a, P("x z [z <- \\w.w][y <- t]")));

    Program b = after("x z [z <- \\w.w][y <- t]", Strategy::Open);
    CHECK(alpha_eq(b, P("x (\\w.w) [z <- \\w.w][y <- t]")));

    // redex inside an ES content; the created ES is spliced after it
    Program c = after("y x [x <- y ((\\z.z) (\\w.w))]", Strategy::Open);
    CHECK(alpha_eq(c, P("y x [x <- y z][z <- \\w.w]")));
}

TEST_CASE("open treats free variables as frozen") {
    CHECK(step_once(P("x"), Strategy::Open).status == StepStatus::Normal);
    CHECK(step_once(P("x y [x <- z w]"), Strategy::Open).status ==
          StepStatus::Normal);
}

TEST_CASE("useful fires applied substitutions and skips useless ones") {
    StepResult useful = step_once(P("x y [x <- \\z.z]"), Strategy::Useful);
    REQUIRE(useful.status == StepStatus::Stepped);
    CHECK(useful.step->kind == StepKind::UsefulExp);
    CHECK(alpha_eq(useful.step->after, P("(\\z1.z1) y [x <- \\z.z]")));

    // open fires here, useful does not: the substitution is useless
    CHECK(step_once(P("x y [y <- \\z.z]"), Strategy::Useful).status ==
          StepStatus::Normal);
    CHECK(step_once(P("x y [y <- \\z.z]"), Strategy::Open).status ==
          StepStatus::Stepped);

    // hereditarily applied through a variable chain
    Program h = after("x y [x <- z][z <- \\w.w]", Strategy::Useful);
    CHECK(alpha_eq(h, P("x y [x <- \\w.w][z <- \\w.w]")));
}

TEST_CASE("run counts and fuel") {
    RunReport omega = run(P("(\\x.x x) (\\x.x x)"), Strategy::Open, 50);
    CHECK(omega.fuel_exhausted);
    CHECK(omega.steps_total == 50);

    RunReport chain = run(P("x t [x <- y][y <- \\w.w]"), Strategy::Useful, 10);
    CHECK_FALSE(chain.fuel_exhausted);
    CHECK(chain.counts[static_cast<std::size_t>(StepKind::UsefulExp)] == 2);
    CHECK(chain.counts[static_cast<std::size_t>(StepKind::UsefulMult)] == 1);

    RunReport traced = run(P("x ((\\z.z) (\\w.w)) [y <- t]"), Strategy::Open,
                           100, true);
    CHECK(traced.trace.size() == traced.steps_total);
    std::size_t sum = 0;
    for (std::size_t c : traced.counts) sum += c;
    CHECK(sum == traced.steps_total);
    CHECK(traced.steps_total == 2);
}

TEST_CASE("steps carry a position and a plugging-consistent context") {
    StepResult r = step_once(P("y x [x <- y ((\\z.z) (\\w.w))]"), Strategy::Open);
    REQUIRE(r.status == StepStatus::Stepped);
    CHECK_FALSE(r.step->position.empty());
    CHECK(r.step->position.front() == "x");  // jumped into the ES of x
    // plugging the focus back into the context restores the program
    Program again = plug_prog(r.step->ctx, r.step->focus, {});
    CHECK(alpha_eq(again, r.step->before));
}

TEST_CASE("tags and strategy names") {
    CHECK(std::string(step_kind_tag(StepKind::ClosedMult)) == "m");
    CHECK(std::string(step_kind_tag(StepKind::OpenExp)) == "oe");
    CHECK(std::string(step_kind_tag(StepKind::UsefulMult)) == "um");
    CHECK(parse_strategy("useful") == Strategy::Useful);
    CHECK_FALSE(parse_strategy("bogus").has_value());
}
