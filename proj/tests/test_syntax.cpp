#include <doctest.h>

#include "cbneed/syntax.hpp"

using namespace cbneed;

TEST_CASE("parse_term basics") {
    TermPtr t = parse_term("\\x.x");
    CHECK(is_abs(t));
    CHECK(t->name == "x");
    CHECK(is_var(t->body));

    // left-associative application
    TermPtr a = parse_term("x (\\y.y) z");
    REQUIRE(is_app(a));
    REQUIRE(is_app(a->left));
    CHECK(is_var(a->left->left));
    CHECK(is_abs(a->left->right));
    CHECK(is_var(a->right));

    // body extends maximally right: t_1
    TermPtr t1 = parse_term("\\x.\\y.y x x");
    REQUIRE(is_abs(t1));
    REQUIRE(is_abs(t1->body));
    CHECK(is_app(t1->body->body));

    // lambda spelling accepted
    CHECK(alpha_eq(parse_term("λx.x"), parse_term("\\x.x")));
}

TEST_CASE("parse_program and environments") {
    ParsedProgram p = parse_program("x y [x <- \\z.z]");
    CHECK(is_app(p.program.head));
    REQUIRE(p.program.env.size() == 1);
    CHECK(p.program.env[0].name == "x");
    CHECK(is_abs(p.program.env[0].value));
    CHECK(p.renamed.empty());

    ParsedProgram q = parse_program("x [x <- y][y <- \\z.z]");
    REQUIRE(q.program.env.size() == 2);
    CHECK(q.program.env[0].name == "x");
    CHECK(q.program.env[1].name == "y");

    ParsedProgram bare = parse_program("x");
    CHECK(is_var(bare.program.head));
    CHECK(bare.program.env.empty());
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_program("(x"), ParseError);
    CHECK_THROWS_AS(parse_program("x [y <-"), ParseError);
    CHECK_THROWS_AS(parse_program(""), ParseError);
    CHECK_THROWS_AS(parse_program("x ]"), ParseError);
}

TEST_CASE("duplicate binders renamed apart at parse time") {
    ParsedProgram p = parse_program("x [x <- y][x <- z]");
    CHECK(p.program.env[0].name != p.program.env[1].name);
    CHECK(!p.renamed.empty());
}

TEST_CASE("printing round-trips") {
    for (const char* src : {
             "x",
             "x y z",
             "\\x.x",
             "(\\x.x) y",
             "x (y z)",
             "\\x.\\y.y x x",
             "x y [x <- \\z.z]",
             "x [x <- y][y <- \\z.z]",
             "x ((\\z.z) w) [y <- t]",
         }) {
        ParsedProgram p = parse_program(src);
        ParsedProgram q = parse_program(print_program(p.program));
        CHECK(alpha_eq(p.program, q.program));
    }
    CHECK(print_program(parse_program("x").program) == "x");
    CHECK(print_term(parse_term("\\x.x")) == "\\x.x");
    CHECK(print_program(parse_program("x y [y <- \\z.z]").program) ==
          "x y [y <- \\z.z]");
}
