#include <doctest.h>

#include "cbneed/normalform.hpp"
#include "cbneed/syntax.hpp"
#include "cbneed/varsets.hpp"

using namespace cbneed;

namespace {
Program P(const std::string& s) { return parse_program(s).program; }
}  // namespace

TEST_CASE("onorm") {
    CHECK(onorm(P("\\z.z")) == OpenNormalClass::Abs);
    CHECK(onorm(P("x")) == OpenNormalClass::Inert);
    CHECK(onorm(P("x y [y <- z w]")) == OpenNormalClass::Inert);
    CHECK(onorm(P("x [x <- \\z.z]")) == OpenNormalClass::NotNormal);
    CHECK(onorm(P("(\\x.x) y")) == OpenNormalClass::NotNormal);
    // unneeded ES content is garbage-collected by the predicate
    CHECK(onorm(P("\\z.z [y <- (\\w.w) u]")) == OpenNormalClass::Abs);
    CHECK(onorm(P("x [y <- (\\w.w) u]")) == OpenNormalClass::Inert);
    // a needed binder must hold an inert term (variables are inert)
    CHECK(onorm(P("x y [x <- z]")) == OpenNormalClass::Inert);
    CHECK(onorm(P("x y [x <- z w]")) == OpenNormalClass::Inert);
    CHECK(onorm(P("x y [x <- (\\w.w) u]")) == OpenNormalClass::NotNormal);
}

TEST_CASE("ufnorm") {
    UsefulNormalForm gv = ufnorm(P("x [x <- y]"));
    CHECK(gv.cls == UsefulNormalClass::GenVar);
    CHECK(gv.gen_var == "y");

    CHECK(ufnorm(P("x [x <- y][y <- \\z.z]")).cls == UsefulNormalClass::UfAbs);
    CHECK(ufnorm(P("x y [y <- \\z.z]")).cls == UsefulNormalClass::UfInert);
    // open would fire an exponential step here; useful keeps the sharing
    // since the head variable is unapplied, and the program is normal
    CHECK(ufnorm(P("x [x <- \\z.z]")).cls == UsefulNormalClass::UfAbs);
    CHECK(ufnorm(P("(\\x.x) y")).cls == UsefulNormalClass::NotNormal);
    CHECK(ufnorm(P("x y [x <- \\z.z]")).cls == UsefulNormalClass::NotNormal);

    // a generalized variable promoted by a non-variable inert content
    CHECK(ufnorm(P("x [x <- y][y <- z w]")).cls == UsefulNormalClass::UfInert);
    // chained generalized variable
    UsefulNormalForm chain = ufnorm(P("x [x <- y][y <- z]"));
    CHECK(chain.cls == UsefulNormalClass::GenVar);
    CHECK(chain.gen_var == "z");

    // plain variable program
    UsefulNormalForm bare = ufnorm(P("x"));
    CHECK(bare.cls == UsefulNormalClass::GenVar);
    CHECK(bare.gen_var == "x");

    CHECK(ufnorm(P("\\z.z")).cls == UsefulNormalClass::UfAbs);
}

TEST_CASE("unfold") {
    CHECK(alpha_eq(*unfold(P("t")), parse_term("t")));
    CHECK(alpha_eq(*unfold(P("x [x <- y][y <- \\z.z]")), parse_term("\\z.z")));
    CHECK(alpha_eq(*unfold(P("x [x <- y][y <- z w]")), parse_term("z w")));
    // rightmost entry substituted last (it is the outermost binder)
    CHECK(alpha_eq(*unfold(P("x [x <- y z][z <- \\w.w][y <- u]")),
                   parse_term("u (\\w.w)")));
}

TEST_CASE("unfold respects the node cap") {
    Program p = P("x [x <- y y][y <- z z][z <- w w]");
    CHECK(unfold(p).has_value());
    CHECK_FALSE(unfold(p, 3).has_value());
}

TEST_CASE("useful normal classes satisfy their unfolding laws") {
    Program gv = P("x [x <- y]");
    CHECK(alpha_eq(*unfold(gv), parse_term("y")));
    CHECK(nv(gv) == VarSet{"y"});
    CHECK(unv(gv) == VarSet{"y"});
    CHECK(anv(gv) == VarSet{});

    Program ab = P("x [x <- y][y <- \\z.z]");
    CHECK(is_value(*unfold(ab)));
    CHECK(nv(ab) == VarSet{});

    Program in = P("x y [y <- \\z.z]");
    TermPtr u = *unfold(in);
    CHECK(is_app(u));
    CHECK(anv(in) == anv(u));
    CHECK(unv(in) == unv(u));
}
