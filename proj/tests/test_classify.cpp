#include <doctest.h>

#include "cbneed/classify.hpp"
#include "cbneed/syntax.hpp"

using namespace cbneed;

namespace {
TermPtr T(const std::string& s) { return parse_term(s); }
}  // namespace

TEST_CASE("classify_term") {
    CHECK(classify_term(T("\\x.x")) == TermClass::Value);
    CHECK(classify_term(T("x")) == TermClass::VarInert);
    CHECK(classify_term(T("x (\\y.y)")) == TermClass::NonVarInert);
    CHECK(classify_term(T("(\\x.x) y")) == TermClass::NonNormal);
    CHECK(classify_term(T("x y z")) == TermClass::NonVarInert);
    CHECK(classify_term(T("x ((\\y.y) z)")) == TermClass::NonNormal);
    // argument of an inert application may be any fireball, including inert
    CHECK(classify_term(T("x (y z)")) == TermClass::NonVarInert);
    // a value in function position is never inert
    CHECK(classify_term(T("(\\x.x) (\\y.y) z")) == TermClass::NonNormal);
}

TEST_CASE("fireball recognizers") {
    CHECK(is_fireball(T("x")));
    CHECK(is_fireball(T("\\x.x")));
    CHECK(is_fireball(T("x (\\y.y)")));
    CHECK_FALSE(is_fireball(T("(\\x.x) y")));
    CHECK(is_inert(T("x")));
    CHECK_FALSE(is_inert(T("\\x.x")));
    CHECK(is_non_var_inert(T("x y")));
    CHECK_FALSE(is_non_var_inert(T("x")));
}

TEST_CASE("find_term_redex returns none exactly on fireballs") {
    CHECK_FALSE(find_term_redex(T("x")).has_value());
    CHECK_FALSE(find_term_redex(T("\\x.(\\y.y) z")).has_value());  // under lambda
    CHECK_FALSE(find_term_redex(T("x (\\y.y) z")).has_value());

    auto top = find_term_redex(T("(\\x.x) y"));
    REQUIRE(top.has_value());
    CHECK(top->ctx->kind == TermCtx::Kind::Hole);
    CHECK(alpha_eq(top->redex, T("(\\x.x) y")));

    // inert head: the redex sits in the argument, context x <.>
    auto arg = find_term_redex(T("x ((\\y.y) z)"));
    REQUIRE(arg.has_value());
    REQUIRE(arg->ctx->kind == TermCtx::Kind::AppRight);
    CHECK(is_var(arg->ctx->term));
    CHECK(alpha_eq(arg->redex, T("(\\y.y) z")));

    // head spine first: redex in function position wins over the argument
    auto spine = find_term_redex(T("(\\x.x) y ((\\z.z) w)"));
    REQUIRE(spine.has_value());
    CHECK(alpha_eq(spine->redex, T("(\\x.x) y")));

    // arguments of an inert head scanned left to right
    auto ltr = find_term_redex(T("x ((\\y.y) a) ((\\z.z) b)"));
    REQUIRE(ltr.has_value());
    CHECK(alpha_eq(ltr->redex, T("(\\y.y) a")));
}

TEST_CASE("decomposition plugs back and follows the restricted grammar") {
    for (const char* src : {
             "(\\x.x) y",
             "x ((\\y.y) z)",
             "x a ((\\y.y) b) c",
             "(\\x.x) ((\\y.y) z)",
         }) {
        TermPtr t = T(src);
        auto r = find_term_redex(t);
        REQUIRE(r.has_value());
        CHECK(alpha_eq(plug_term(r->ctx, r->redex), t));
        CHECK(is_eval_term_ctx(r->ctx));
    }
}

TEST_CASE("classification agrees with redex search") {
    for (const char* src : {
             "x", "\\x.x", "x y", "x (\\y.y)", "(\\x.x) y", "x ((\\y.y) z)",
             "\\x.(\\y.y) z", "x y (\\z.z) w",
         }) {
        TermPtr t = T(src);
        bool nonnormal = classify_term(t) == TermClass::NonNormal;
        CHECK(nonnormal == find_term_redex(t).has_value());
    }
}
