#pragma once

#include <optional>
#include <utility>

#include "cbneed/context.hpp"
#include "cbneed/term.hpp"

namespace cbneed {

// Values v ::= \x.t, inert terms i ::= x | i f, fireballs f ::= v | i.
enum class TermClass { Value, VarInert, NonVarInert, NonNormal };

TermClass classify_term(const TermPtr& t);

bool is_inert(const TermPtr& t);
bool is_non_var_inert(const TermPtr& t);
bool is_fireball(const TermPtr& t);

struct TermRedex {
    TermCtxPtr ctx;   // H with t = H<(\x.u) s>
    TermPtr redex;    // the beta-redex (\x.u) s
};

// The unique decomposition of a non-normal term around its first beta-redex:
// head spine first, then arguments of an inert head, left to right.
std::optional<TermRedex> find_term_redex(const TermPtr& t);

const char* term_class_name(TermClass c);

}  // namespace cbneed
