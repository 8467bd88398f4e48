#include "cbneed/context.hpp"

#include <stdexcept>

#include "cbneed/classify.hpp"
#include "cbneed/varsets.hpp"

namespace cbneed {

TermCtxPtr ctx_hole() {
    static const TermCtxPtr hole = [] {
        auto c = std::make_shared<TermCtx>();
        c->kind = TermCtx::Kind::Hole;
        return c;
    }();
    return hole;
}

TermCtxPtr ctx_app_left(TermCtxPtr inner, TermPtr arg) {
    auto c = std::make_shared<TermCtx>();
    c->kind = TermCtx::Kind::AppLeft;
    c->inner = std::move(inner);
    c->term = std::move(arg);
    return c;
}

TermCtxPtr ctx_app_right(TermPtr fun, TermCtxPtr inner) {
    auto c = std::make_shared<TermCtx>();
    c->kind = TermCtx::Kind::AppRight;
    c->inner = std::move(inner);
    c->term = std::move(fun);
    return c;
}

TermPtr plug_term(const TermCtxPtr& ctx, const TermPtr& t) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return t;
        case TermCtx::Kind::AppLeft: return mk_app(plug_term(ctx->inner, t), ctx->term);
        case TermCtx::Kind::AppRight: return mk_app(ctx->term, plug_term(ctx->inner, t));
    }
    return t;
}

bool is_eval_term_ctx(const TermCtxPtr& ctx) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return true;
        case TermCtx::Kind::AppLeft: return is_eval_term_ctx(ctx->inner);
        case TermCtx::Kind::AppRight:
            return is_inert(ctx->term) && is_eval_term_ctx(ctx->inner);
    }
    return false;
}

bool is_applicative(const TermCtxPtr& ctx) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return false;
        case TermCtx::Kind::AppLeft:
            return ctx->inner->kind == TermCtx::Kind::Hole || is_applicative(ctx->inner);
        case TermCtx::Kind::AppRight:
            return is_inert(ctx->term) && is_applicative(ctx->inner);
    }
    return false;
}

bool is_head_ctx(const TermCtxPtr& ctx) {
    switch (ctx->kind) {
        case TermCtx::Kind::Hole: return true;
        case TermCtx::Kind::AppLeft: return is_head_ctx(ctx->inner);
        case TermCtx::Kind::AppRight: return false;
    }
    return false;
}

ProgCtx prog_ctx_head(TermCtxPtr ctx, Environment env) {
    ProgCtx p;
    p.kind = ProgCtx::Kind::Head;
    p.ctx = std::move(ctx);
    p.left = std::move(env);
    return p;
}

ProgCtx prog_ctx_env(TermPtr head, Environment left, std::string binder,
                     TermCtxPtr ctx, Environment right) {
    ProgCtx p;
    p.kind = ProgCtx::Kind::Env;
    p.head = std::move(head);
    p.left = std::move(left);
    p.binder = std::move(binder);
    p.ctx = std::move(ctx);
    p.right = std::move(right);
    return p;
}

bool binds(const ProgCtx& P, const std::string& x) {
    for (const auto& e : P.left)
        if (e.name == x) return true;
    if (P.kind == ProgCtx::Kind::Env) {
        if (P.binder == x) return true;
        for (const auto& e : P.right)
            if (e.name == x) return true;
    }
    return false;
}

bool binds_visible(const ProgCtx& P, const std::string& x) {
    const Environment& visible = P.kind == ProgCtx::Kind::Head ? P.left : P.right;
    for (const auto& e : visible)
        if (e.name == x) return true;
    return false;
}

namespace {

bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Var: return a->name == b->name;
        case Term::Kind::Abs: return a->name == b->name && term_eq(a->body, b->body);
        case Term::Kind::App:
            return term_eq(a->left, b->left) && term_eq(a->right, b->right);
    }
    return false;
}

bool env_eq(const Environment& a, const Environment& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].name != b[i].name || !term_eq(a[i].value, b[i].value)) return false;
    return true;
}

}  // namespace

bool term_ctx_eq(const TermCtxPtr& a, const TermCtxPtr& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == TermCtx::Kind::Hole) return true;
    return term_eq(a->term, b->term) && term_ctx_eq(a->inner, b->inner);
}

bool prog_ctx_eq(const ProgCtx& a, const ProgCtx& b) {
    if (a.kind != b.kind) return false;
    if (!term_ctx_eq(a.ctx, b.ctx) || !env_eq(a.left, b.left)) return false;
    if (a.kind == ProgCtx::Kind::Head) return true;
    return a.binder == b.binder && term_eq(a.head, b.head) && env_eq(a.right, b.right);
}

Program append_es(Program p, std::string x, TermPtr u) {
    for (const auto& e : p.env)
        if (e.name == x) throw std::invalid_argument("append_es: duplicate binder " + x);
    p.env.push_back({std::move(x), std::move(u)});
    return p;
}

ProgCtx append_es(ProgCtx p, std::string x, TermPtr u) {
    if (binds(p, x)) throw std::invalid_argument("append_es: duplicate binder " + x);
    if (p.kind == ProgCtx::Kind::Head)
        p.left.push_back({std::move(x), std::move(u)});
    else
        p.right.push_back({std::move(x), std::move(u)});
    return p;
}

Program plug_prog(const ProgCtx& P, const TermPtr& t, const Environment& new_env) {
    for (const auto& e : new_env)
        if (binds(P, e.name))
            throw std::invalid_argument("plug_prog: binder clash on " + e.name);
    Program out;
    if (P.kind == ProgCtx::Kind::Head) {
        out.head = plug_term(P.ctx, t);
        out.env = new_env;
        out.env.insert(out.env.end(), P.left.begin(), P.left.end());
    } else {
        out.head = P.head;
        out.env = P.left;
        out.env.push_back({P.binder, plug_term(P.ctx, t)});
        out.env.insert(out.env.end(), new_env.begin(), new_env.end());
        out.env.insert(out.env.end(), P.right.begin(), P.right.end());
    }
    return out;
}

std::optional<TermPtr> lookup(const Environment& env, const std::string& x) {
    for (const auto& e : env)
        if (e.name == x) return e.value;
    return std::nullopt;
}

std::optional<TermPtr> lookup(const Program& p, const std::string& x) {
    return lookup(p.env, x);
}

std::optional<TermPtr> lookup(const ProgCtx& P, const std::string& x) {
    // Only binders visible from the hole count: every entry when the hole is
    // in the head, and only the entries right of the hole's ES otherwise
    // (a binder scopes over the head and the entries to its left).
    const Environment& visible = P.kind == ProgCtx::Kind::Head ? P.left : P.right;
    for (const auto& e : visible)
        if (e.name == x) return e.value;
    return std::nullopt;
}

namespace {

// Free occurrences of x reachable by term contexts (which never enter
// abstraction bodies).
void term_occurrences(const TermPtr& t, const std::string& x,
                      std::vector<TermCtxPtr>& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            if (t->name == x) out.push_back(ctx_hole());
            break;
        case Term::Kind::Abs:
            break;
        case Term::Kind::App: {
            std::vector<TermCtxPtr> l, r;
            term_occurrences(t->left, x, l);
            term_occurrences(t->right, x, r);
            for (auto& c : l) out.push_back(ctx_app_left(std::move(c), t->right));
            for (auto& c : r) out.push_back(ctx_app_right(t->left, std::move(c)));
            break;
        }
    }
}

}  // namespace

std::vector<ProgCtx> var_occurrence_ctxs(const Program& p, const std::string& x) {
    std::vector<ProgCtx> out;
    // If some entry binds x, occurrences in the head and to its left are bound.
    std::size_t bound_at = p.env.size();
    for (std::size_t i = 0; i < p.env.size(); ++i)
        if (p.env[i].name == x) { bound_at = i; break; }

    if (bound_at == p.env.size()) {
        std::vector<TermCtxPtr> occ;
        term_occurrences(p.head, x, occ);
        for (auto& c : occ) out.push_back(prog_ctx_head(std::move(c), p.env));
    }
    for (std::size_t j = 0; j < p.env.size(); ++j) {
        if (bound_at != p.env.size() && j < bound_at) continue;
        std::vector<TermCtxPtr> occ;
        term_occurrences(p.env[j].value, x, occ);
        for (auto& c : occ) {
            Environment left(p.env.begin(), p.env.begin() + j);
            Environment right(p.env.begin() + j + 1, p.env.end());
            out.push_back(prog_ctx_env(p.head, std::move(left), p.env[j].name,
                                       std::move(c), std::move(right)));
        }
    }
    return out;
}

namespace {

void set_union_into(VarSet& dst, const VarSet& src) {
    dst.insert(src.begin(), src.end());
}

ProgCtx drop_last_es(const ProgCtx& P, EnvEntry& peeled) {
    ProgCtx inner = P;
    if (P.kind == ProgCtx::Kind::Head) {
        peeled = inner.left.back();
        inner.left.pop_back();
    } else {
        peeled = inner.right.back();
        inner.right.pop_back();
    }
    return inner;
}

bool has_outer_es(const ProgCtx& P) {
    return P.kind == ProgCtx::Kind::Head ? !P.left.empty() : !P.right.empty();
}

}  // namespace

std::optional<VarSet> derive_open(const ProgCtx& P) {
    if (has_outer_es(P)) {
        EnvEntry e;
        ProgCtx inner = drop_last_es(P, e);
        auto v = derive_open(inner);
        if (!v) return std::nullopt;
        if (!v->count(e.name)) return v;  // o_gc
        if (is_inert(e.value)) {          // o_i
            v->erase(e.name);
            set_union_into(*v, nv(e.value));
            return v;
        }
        return std::nullopt;
    }
    if (P.kind == ProgCtx::Kind::Head) {  // o_ax
        if (!is_eval_term_ctx(P.ctx)) return std::nullopt;
        return nv(P.ctx);
    }
    // o_her: P = P'<x>[x <- H]
    if (!is_eval_term_ctx(P.ctx)) return std::nullopt;
    Program sub{P.head, P.left};
    for (const ProgCtx& q : var_occurrence_ctxs(sub, P.binder)) {
        auto v = derive_open(q);
        if (v && !v->count(P.binder)) {
            set_union_into(*v, nv(P.ctx));
            return v;
        }
    }
    return std::nullopt;
}

std::optional<MultJudgment> derive_mult(const ProgCtx& P) {
    if (has_outer_es(P)) {
        EnvEntry e;
        ProgCtx inner = drop_last_es(P, e);
        auto j = derive_mult(inner);
        if (!j) return std::nullopt;
        bool in_u = j->unapplied.count(e.name) != 0;
        bool in_a = j->applied.count(e.name) != 0;
        if (!in_u && !in_a) return j;  // m_gc
        if (is_var(e.value))           // m_var
            return MultJudgment{upd(j->unapplied, e.name, e.value->name),
                                upd(j->applied, e.name, e.value->name)};
        if (is_non_var_inert(e.value)) {  // m_i
            j->unapplied.erase(e.name);
            set_union_into(j->unapplied, unv(e.value));
            j->applied.erase(e.name);
            set_union_into(j->applied, anv(e.value));
            return j;
        }
        if (is_value(e.value) && in_u && !in_a) {  // m_u: useless variable only
            j->unapplied.erase(e.name);
            return j;
        }
        return std::nullopt;
    }
    if (P.kind == ProgCtx::Kind::Head) {  // m_ax
        if (!is_eval_term_ctx(P.ctx)) return std::nullopt;
        return MultJudgment{unv(P.ctx), anv(P.ctx)};
    }
    // m_her: first needed occurrence of the binder
    if (!is_eval_term_ctx(P.ctx)) return std::nullopt;
    Program sub{P.head, P.left};
    for (const ProgCtx& q : var_occurrence_ctxs(sub, P.binder)) {
        auto j = derive_mult(q);
        if (j && !j->unapplied.count(P.binder) && !j->applied.count(P.binder)) {
            set_union_into(j->unapplied, unv(P.ctx));
            set_union_into(j->applied, anv(P.ctx));
            return j;
        }
    }
    return std::nullopt;
}

std::optional<ExpJudgment> derive_exp(const ProgCtx& P) {
    if (has_outer_es(P)) {
        EnvEntry e;
        ProgCtx inner = drop_last_es(P, e);
        auto j = derive_exp(inner);
        if (!j) return std::nullopt;
        bool in_u = j->unapplied.count(e.name) != 0;
        bool in_a = j->applied.count(e.name) != 0;
        if (!in_u && !in_a) return j;  // e_gc
        if (is_var(e.value))           // e_var
            return ExpJudgment{upd(j->unapplied, e.name, e.value->name),
                               upd(j->applied, e.name, e.value->name), j->na_count};
        if (is_non_var_inert(e.value)) {  // e_i
            j->unapplied.erase(e.name);
            set_union_into(j->unapplied, unv(e.value));
            j->applied.erase(e.name);
            set_union_into(j->applied, anv(e.value));
            return j;
        }
        if (is_value(e.value) && in_u && !in_a) {  // e_u
            j->unapplied.erase(e.name);
            return j;
        }
        return std::nullopt;
    }
    if (P.kind == ProgCtx::Kind::Head) {  // e_ax1
        if (!is_applicative(P.ctx)) return std::nullopt;
        return ExpJudgment{unv(P.ctx), anv(P.ctx), 0};
    }
    Program sub{P.head, P.left};
    if (P.ctx->kind == TermCtx::Kind::Hole) {
        // e_na: the hole is a whole ES content, hereditarily applied position
        for (const ProgCtx& q : var_occurrence_ctxs(sub, P.binder)) {
            auto j = derive_exp(q);
            if (j && !j->applied.count(P.binder)) {
                j->unapplied.erase(P.binder);
                j->na_count += 1;
                return j;
            }
        }
        return std::nullopt;
    }
    if (is_applicative(P.ctx)) {
        // e_ax2: applicative context inside an ES over a multiplicative prefix
        for (const ProgCtx& q : var_occurrence_ctxs(sub, P.binder)) {
            auto m = derive_mult(q);
            if (m && !m->unapplied.count(P.binder) && !m->applied.count(P.binder)) {
                ExpJudgment j{m->unapplied, m->applied, 0};
                j.unapplied.erase(P.binder);
                set_union_into(j.unapplied, unv(P.ctx));
                set_union_into(j.applied, anv(P.ctx));
                return j;
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

bool derive_hhctx(const ProgCtx& P) {
    if (P.kind == ProgCtx::Kind::Head) return is_head_ctx(P.ctx);
    if (!P.right.empty()) {
        EnvEntry e;
        ProgCtx inner = drop_last_es(P, e);
        return derive_hhctx(inner);
    }
    if (!is_head_ctx(P.ctx)) return false;
    Program sub{P.head, P.left};
    for (const ProgCtx& q : var_occurrence_ctxs(sub, P.binder))
        if (derive_hhctx(q)) return true;
    return false;
}

}  // namespace cbneed
