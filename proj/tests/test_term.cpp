#include <doctest.h>

#include "cbneed/syntax.hpp"
#include "cbneed/term.hpp"

using namespace cbneed;

namespace {
TermPtr T(const std::string& s) { return parse_term(s); }
}  // namespace

TEST_CASE("free variables of terms and programs") {
    CHECK(free_vars(T("x")) == VarSet{"x"});
    CHECK(free_vars(T("\\x.x")) == VarSet{});
    CHECK(free_vars(T("\\x.x y")) == VarSet{"y"});

    // A binder scopes over the head and the entries to its left only.
    Program p{T("x y"), {{"x", T("z")}, {"z", T("\\w.w")}}};
    CHECK(free_vars(p) == VarSet{"y"});
    Program q{T("x"), {{"z", T("\\w.w")}, {"x", T("z")}}};
    // [x <- z] is outermost; its content's z is NOT captured by the inner
    // [z <- ...] binder, which scopes only leftwards.
    CHECK(free_vars(q) == VarSet{"z"});
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(T("\\x.x"), T("\\y.y")));
    CHECK_FALSE(alpha_eq(T("\\x.y"), T("\\x.z")));
    CHECK(alpha_eq(T("\\a.\\b.a b c"), T("\\x.\\y.x y c")));
    CHECK_FALSE(alpha_eq(T("\\a.\\b.a"), T("\\a.\\b.b")));

    Program a{T("x"), {{"x", T("\\z.z")}}};
    Program b{T("y"), {{"y", T("\\w.w")}}};
    CHECK(alpha_eq(a, b));
    Program c{T("y"), {{"x", T("\\z.z")}}};
    CHECK_FALSE(alpha_eq(a, c));
}

TEST_CASE("substitution is capture avoiding") {
    CHECK(alpha_eq(subst(T("x"), "x", T("\\z.z")), T("\\z.z")));
    CHECK(alpha_eq(subst(T("\\x.x"), "x", T("u")), T("\\x.x")));
    // subst(\y.x, x, y) must rename the binder
    TermPtr r = subst(T("\\y.x"), "x", T("y"));
    CHECK(alpha_eq(r, T("\\w.y")));
    CHECK(is_abs(r));
    CHECK(r->name != "y");
}

TEST_CASE("name supply strips digit suffixes") {
    NameSupply s;
    s.reserve("z");
    CHECK(s.fresh("z") == "z1");
    CHECK(s.fresh("z") == "z2");
    CHECK(s.fresh("z1") == "z3");  // digit suffix stripped before counting
    CHECK(s.fresh("w") == "w1");
}

TEST_CASE("fresh_rename keeps alpha class and avoids used names") {
    NameSupply s;
    s.reserve_all({"z", "x", "y"});
    TermPtr v = T("\\z.z");
    TermPtr r = fresh_rename(v, s);
    CHECK(alpha_eq(v, r));
    CHECK(r->name == "z1");

    TermPtr w = T("\\y.y x x");
    TermPtr rw = fresh_rename(w, s);
    CHECK(alpha_eq(w, rw));
    CHECK(free_vars(rw) == VarSet{"x"});
    CHECK(rw->name != "y");
}

TEST_CASE("rename_apart enforces distinct binders") {
    NameSupply s;
    Program p{T("x"), {{"x", T("\\x.x")}}};
    s.reserve_all(all_names(p));
    auto renamed = rename_apart(p, s);
    // ES binder x and abstraction binder x collide; one must change.
    VarSet binders = binder_names(p.head);
    for (const auto& e : p.env) {
        binders.insert(e.name);
        VarSet inner = binder_names(e.value);
        binders.insert(inner.begin(), inner.end());
    }
    CHECK(binders.size() == 2);
    CHECK(!renamed.empty());
}

TEST_CASE("sizes count AST nodes, one per ES") {
    CHECK(term_size(T("x")) == 1);
    CHECK(term_size(T("\\x.x")) == 2);
    CHECK(term_size(T("(\\z.z) y")) == 4);
    Program p{T("x"), {{"x", T("\\z.z")}}};
    CHECK(program_size(p) == 1 + 1 + 2);
}
