#include "cbneed/varsets.hpp"

namespace cbneed {

namespace {

void set_union_into(VarSet& dst, const VarSet& src) {
    dst.insert(src.begin(), src.end());
}

}  // namespace

VarSet nv(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var: return {t->name};
        case Term::Kind::Abs: return {};
        case Term::Kind::App: {
            VarSet s = nv(t->left);
            set_union_into(s, nv(t->right));
            return s;
        }
    }
    return {};
}

VarSet anv(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var: return {};
        case Term::Kind::Abs: return {};
        case Term::Kind::App: {
            VarSet s;
            if (is_var(t->left))
                s.insert(t->left->name);
            else
                s = anv(t->left);
            set_union_into(s, anv(t->right));
            return s;
        }
    }
    return {};
}

VarSet unv(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var: return {t->name};
        case Term::Kind::Abs: return {};
        case Term::Kind::App: {
            VarSet s;
            if (!is_var(t->left)) s = unv(t->left);
            set_union_into(s, unv(t->right));
            return s;
        }
    }
    return {};
}

VarTriple var_triple_step(VarTriple v, const EnvEntry& e) {
    const std::string& x = e.name;
    const TermPtr& u = e.value;
    bool x_needed = v.needed.count(x) != 0;
    bool x_applied = v.applied.count(x) != 0;
    bool x_unapplied = v.unapplied.count(x) != 0;
    bool u_is_var = is_var(u);

    VarSet applied = v.applied;
    if (x_needed) {
        if (x_applied && u_is_var) {
            applied.erase(x);
            applied.insert(u->name);
        } else {
            applied.erase(x);
            set_union_into(applied, anv(u));
        }
    }

    VarSet unapplied = v.unapplied;
    if (x_unapplied || (x_needed && !u_is_var)) {
        unapplied.erase(x);
        set_union_into(unapplied, unv(u));
    }

    VarSet needed = v.needed;
    if (x_needed) {
        needed.erase(x);
        set_union_into(needed, nv(u));
    }

    v.needed = std::move(needed);
    v.applied = std::move(applied);
    v.unapplied = std::move(unapplied);
    return v;
}

VarTriple var_triple(const Program& p) {
    VarTriple v{nv(p.head), anv(p.head), unv(p.head)};
    for (const auto& e : p.env) v = var_triple_step(std::move(v), e);
    return v;
}

VarSet nv(const Program& p) { return var_triple(p).needed; }
VarSet anv(const Program& p) { return var_triple(p).applied; }
VarSet unv(const Program& p) { return var_triple(p).unapplied; }

// Term-context clauses (restricted grammar H ::= <.> | H t | i H):
// the argument of the hole's spine contributes nothing, the inert part does.
VarSet nv(const TermCtxPtr& ctx) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return {};
        case TermCtx::Kind::AppLeft: return nv(ctx->inner);
        case TermCtx::Kind::AppRight: {
            VarSet s = nv(ctx->term);
            set_union_into(s, nv(ctx->inner));
            return s;
        }
    }
    return {};
}

VarSet anv(const TermCtxPtr& ctx) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return {};
        case TermCtx::Kind::AppLeft: return anv(ctx->inner);
        case TermCtx::Kind::AppRight: {
            // As for terms, a bare variable in function position is applied.
            VarSet s = is_var(ctx->term) ? VarSet{ctx->term->name}
                                         : anv(ctx->term);
            set_union_into(s, anv(ctx->inner));
            return s;
        }
    }
    return {};
}

VarSet unv(const TermCtxPtr& ctx) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return {};
        case TermCtx::Kind::AppLeft: return unv(ctx->inner);
        case TermCtx::Kind::AppRight: {
            VarSet s = is_var(ctx->term) ? VarSet{} : unv(ctx->term);
            set_union_into(s, unv(ctx->inner));
            return s;
        }
    }
    return {};
}

VarSet useless(const TermPtr& t) {
    VarSet u = unv(t);
    for (const auto& x : anv(t)) u.erase(x);
    return u;
}

VarSet useless(const Program& p) {
    VarTriple v = var_triple(p);
    VarSet u = v.unapplied;
    for (const auto& x : v.applied) u.erase(x);
    return u;
}

VarSet upd(VarSet s, const std::string& x, const std::string& y) {
    if (s.erase(x) > 0) s.insert(y);
    return s;
}

}  // namespace cbneed
