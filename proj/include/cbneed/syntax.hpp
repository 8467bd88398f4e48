#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cbneed/term.hpp"

namespace cbneed {

struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t position)
        : std::runtime_error(std::move(msg)), pos(position) {}
    std::size_t pos;
};

// Surface syntax:
//   identifiers  [A-Za-z_][A-Za-z0-9_']*
//   abstraction  \x. t  or  λx. t   (body extends maximally to the right)
//   application  juxtaposition, left-associative; parentheses allowed
//   program      term ([x <- term])*   entries listed left to right
TermPtr parse_term(const std::string& text);

struct ParsedProgram {
    Program program;
    // Binder renamings applied to restore the Barendregt convention.
    std::vector<std::pair<std::string, std::string>> renamed;
};

// Parses and renames apart. When a supply is given it is seeded with all
// names of the program, so later evaluation stays capture-free.
ParsedProgram parse_program(const std::string& text);
ParsedProgram parse_program(const std::string& text, NameSupply& supply);

std::string print_term(const TermPtr& t);
std::string print_program(const Program& p);

}  // namespace cbneed
