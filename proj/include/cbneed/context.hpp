#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbneed/term.hpp"

namespace cbneed {

struct TermCtx;
using TermCtxPtr = std::shared_ptr<const TermCtx>;

// One-hole term context: <.> | C t | t C.
struct TermCtx {
    enum class Kind { Hole, AppLeft, AppRight };
    Kind kind;
    TermCtxPtr inner;  // AppLeft / AppRight
    TermPtr term;      // the non-hole side
};

TermCtxPtr ctx_hole();
TermCtxPtr ctx_app_left(TermCtxPtr inner, TermPtr arg);
TermCtxPtr ctx_app_right(TermPtr fun, TermCtxPtr inner);

TermPtr plug_term(const TermCtxPtr& ctx, const TermPtr& t);

// Grammar recognizers on term contexts.
// H  ::= <.> | H t | i H          (open/useful evaluation order)
// H@ ::= <.> t | H@ t | i H@      (the hole is in applied position)
// Closed head contexts use only <.> | H t.
bool is_eval_term_ctx(const TermCtxPtr& ctx);
bool is_applicative(const TermCtxPtr& ctx);
bool is_head_ctx(const TermCtxPtr& ctx);

// Program context: hole either in the head or inside one ES content.
struct ProgCtx {
    enum class Kind { Head, Env };
    Kind kind;

    // Head: hole at ctx inside the head term; `left` holds the environment.
    // Env: head term plus left entries, then [binder <- ctx], then right entries.
    TermPtr head;       // Env only
    TermCtxPtr ctx;
    Environment left;
    std::string binder;  // Env only
    Environment right;   // Env only
};

ProgCtx prog_ctx_head(TermCtxPtr ctx, Environment env);
ProgCtx prog_ctx_env(TermPtr head, Environment left, std::string binder,
                     TermCtxPtr ctx, Environment right);

// Appends [x <- u] at the right end of the outer environment.
// Rejects a duplicate binder.
Program append_es(Program p, std::string x, TermPtr u);
ProgCtx append_es(ProgCtx p, std::string x, TermPtr u);

// Environment-splicing plugging: for a head context the new environment is
// prefixed to the existing one; for an env context it is spliced right
// after the ES holding the hole.
Program plug_prog(const ProgCtx& P, const TermPtr& t, const Environment& new_env = {});

std::optional<TermPtr> lookup(const Environment& env, const std::string& x);
std::optional<TermPtr> lookup(const Program& p, const std::string& x);
// For a program context, the hole entry itself has no term content.
std::optional<TermPtr> lookup(const ProgCtx& P, const std::string& x);

bool binds(const ProgCtx& P, const std::string& x);
// Binders visible from the hole (the domain relevant to "x not in dom(P)").
bool binds_visible(const ProgCtx& P, const std::string& x);

// Structural equality, exact names (no alpha).
bool term_ctx_eq(const TermCtxPtr& a, const TermCtxPtr& b);
bool prog_ctx_eq(const ProgCtx& a, const ProgCtx& b);

// Declarative derivation checkers. Each returns the judgment's parameter
// sets when the context is derivable, and nothing otherwise.
std::optional<VarSet> derive_open(const ProgCtx& P);

struct MultJudgment {
    VarSet unapplied;
    VarSet applied;
};
std::optional<MultJudgment> derive_mult(const ProgCtx& P);

struct ExpJudgment {
    VarSet unapplied;
    VarSet applied;
    std::size_t na_count = 0;  // uses of the hereditary-jump exponential rule
};
std::optional<ExpJudgment> derive_exp(const ProgCtx& P);

// Hereditary head contexts of the closed calculus (pure grammar check).
bool derive_hhctx(const ProgCtx& P);

// All contexts P with plug_prog(P, x) == p whose focus is a free occurrence
// of x. Used by the her/jump rules of the checkers and by the oracle.
std::vector<ProgCtx> var_occurrence_ctxs(const Program& p, const std::string& x);

}  // namespace cbneed
