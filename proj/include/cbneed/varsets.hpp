#pragma once

#include "cbneed/context.hpp"
#include "cbneed/term.hpp"

namespace cbneed {

// Needed, applied, and unapplied variables. Applied here always means
// *hereditarily* applied.
VarSet nv(const TermPtr& t);
VarSet nv(const Program& p);
VarSet nv(const TermCtxPtr& ctx);

VarSet anv(const TermPtr& t);
VarSet anv(const Program& p);
VarSet anv(const TermCtxPtr& ctx);

VarSet unv(const TermPtr& t);
VarSet unv(const Program& p);
VarSet unv(const TermCtxPtr& ctx);

// Unapplied and not applied: substituting a value on such a variable cannot
// create a beta-redex.
VarSet useless(const TermPtr& t);
VarSet useless(const Program& p);

// upd(S, x, y): S if x not in S, otherwise (S \ {x}) u {y}.
VarSet upd(VarSet s, const std::string& x, const std::string& y);

// All three program-level sets in one left-to-right fold over the
// environment. The per-entry side conditions read the prefix sets.
struct VarTriple {
    VarSet needed;
    VarSet applied;
    VarSet unapplied;
};
VarTriple var_triple(const Program& p);

// One fold step: the triple of p[x <- u] from the triple of p.
VarTriple var_triple_step(VarTriple v, const EnvEntry& e);

}  // namespace cbneed
