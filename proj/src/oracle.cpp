#include "cbneed/oracle.hpp"

#include <algorithm>

#include "cbneed/classify.hpp"
#include "cbneed/varsets.hpp"

namespace cbneed {

namespace {

void term_decomps(const TermPtr& t, std::vector<std::pair<TermCtxPtr, TermPtr>>& out) {
    out.emplace_back(ctx_hole(), t);
    if (is_app(t)) {
        std::vector<std::pair<TermCtxPtr, TermPtr>> l, r;
        term_decomps(t->left, l);
        term_decomps(t->right, r);
        for (auto& [c, f] : l) out.emplace_back(ctx_app_left(std::move(c), t->right), f);
        for (auto& [c, f] : r) out.emplace_back(ctx_app_right(t->left, std::move(c)), f);
    }
}

bool is_beta_redex(const TermPtr& t) { return is_app(t) && is_abs(t->left); }

bool superset(const VarSet& big, const VarSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const Program& p,
                                                    std::size_t max_nodes,
                                                    std::size_t max_decompositions) {
    if (program_size(p) > max_nodes)
        throw OracleLimitError("program exceeds the oracle node bound");

    std::vector<Decomposition> out;
    auto push = [&](ProgCtx ctx, TermPtr focus) {
        if (out.size() >= max_decompositions)
            throw OracleLimitError("too many decompositions");
        out.push_back({std::move(ctx), std::move(focus)});
    };

    std::vector<std::pair<TermCtxPtr, TermPtr>> ds;
    term_decomps(p.head, ds);
    for (auto& [c, f] : ds) push(prog_ctx_head(std::move(c), p.env), f);

    for (std::size_t j = 0; j < p.env.size(); ++j) {
        ds.clear();
        term_decomps(p.env[j].value, ds);
        Environment left(p.env.begin(), p.env.begin() + j);
        Environment right(p.env.begin() + j + 1, p.env.end());
        for (auto& [c, f] : ds)
            push(prog_ctx_env(p.head, left, p.env[j].name, std::move(c), right), f);
    }
    return out;
}

VarSet admissible_set(const Program& p, Calculus calculus) {
    VarSet s;
    for (const auto& d : enumerate_decompositions(p)) {
        if (calculus == Calculus::Open) {
            if (auto v = derive_open(d.ctx)) s.insert(v->begin(), v->end());
        } else {
            if (auto m = derive_mult(d.ctx)) {
                s.insert(m->unapplied.begin(), m->unapplied.end());
                s.insert(m->applied.begin(), m->applied.end());
            }
        }
    }
    return s;
}

std::vector<ReductionPlace> reduction_places(const Program& p, const VarSet& S,
                                             Calculus calculus) {
    std::vector<ReductionPlace> out;
    for (auto& d : enumerate_decompositions(p)) {
        if (calculus == Calculus::Open) {
            auto v = derive_open(d.ctx);
            if (!v || !superset(S, *v)) continue;
            if (is_beta_redex(d.focus)) {
                out.push_back({d.ctx, d.focus, PlaceCategory::MultRedex});
            } else if (is_var(d.focus)) {
                const std::string& x = d.focus->name;
                bool bound = binds_visible(d.ctx, x);
                auto content = lookup(d.ctx, x);
                if (bound && content && is_value(*content))
                    out.push_back({d.ctx, d.focus, PlaceCategory::ExpRedex});
                else if (!bound && !S.count(x))
                    out.push_back({d.ctx, d.focus, PlaceCategory::NewNeededVar});
            }
        } else {
            auto m = derive_mult(d.ctx);
            auto e = derive_exp(d.ctx);
            if (!m && !e) continue;
            if (m && is_beta_redex(d.focus)) {
                out.push_back({d.ctx, d.focus, PlaceCategory::MultRedex});
            } else if (is_var(d.focus)) {
                const std::string& x = d.focus->name;
                bool bound = binds_visible(d.ctx, x);
                auto content = lookup(d.ctx, x);
                if (e && bound && content && is_value(*content)) {
                    out.push_back({d.ctx, d.focus, PlaceCategory::ExpRedex});
                } else if (!bound && !S.count(x)) {
                    VarSet ua;
                    if (m) {
                        ua = m->unapplied;
                        ua.insert(m->applied.begin(), m->applied.end());
                    }
                    if (m && superset(S, ua))
                        out.push_back(
                            {d.ctx, d.focus, PlaceCategory::NewHereditaryJump});
                    else if (e && superset(S, e->applied))
                        out.push_back({d.ctx, d.focus, PlaceCategory::NewAppliedVar});
                }
            }
        }
    }
    return out;
}

std::optional<ProgCtx> focus_on_variable(const Program& p, const std::string& x,
                                         FocusMode mode) {
    VarTriple v = var_triple(p);
    switch (mode) {
        case FocusMode::Needed:
            if (!v.needed.count(x))
                throw std::invalid_argument("focus_on_variable: x not needed");
            break;
        case FocusMode::Unapplied:
            if (!v.unapplied.count(x))
                throw std::invalid_argument("focus_on_variable: x not unapplied");
            break;
        case FocusMode::Applied:
            if (!v.applied.count(x))
                throw std::invalid_argument("focus_on_variable: x not applied");
            break;
    }
    for (const ProgCtx& q : var_occurrence_ctxs(p, x)) {
        switch (mode) {
            case FocusMode::Needed: {
                auto j = derive_open(q);
                if (j && !j->count(x)) return q;
                break;
            }
            case FocusMode::Unapplied: {
                auto j = derive_mult(q);
                if (j && !j->unapplied.count(x)) return q;
                break;
            }
            case FocusMode::Applied: {
                auto j = derive_exp(q);
                if (j && !j->applied.count(x)) return q;
                break;
            }
        }
    }
    return std::nullopt;
}

ExpForm classify_exp_form(const ProgCtx& P) {
    if (!derive_exp(P))
        throw std::invalid_argument("classify_exp_form: not an exponential context");
    if (P.kind == ProgCtx::Kind::Head) return ExpForm::Form1;
    if (P.ctx->kind == TermCtx::Kind::Hole) return ExpForm::Form3;
    return ExpForm::Form2;
}

namespace {

std::optional<TermPtr> normal_order_step(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var:
            return std::nullopt;
        case Term::Kind::Abs:
            if (auto b = normal_order_step(t->body)) return mk_abs(t->name, *b);
            return std::nullopt;
        case Term::Kind::App:
            if (is_abs(t->left)) return subst(t->left->body, t->left->name, t->right);
            if (auto l = normal_order_step(t->left)) return mk_app(*l, t->right);
            if (auto r = normal_order_step(t->right)) return mk_app(t->left, *r);
            return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<BetaResult> ref_beta_normalize(const TermPtr& t, std::size_t fuel) {
    BetaResult r{t, 0};
    for (std::size_t i = 0; i < fuel; ++i) {
        auto next = normal_order_step(r.term);
        if (!next) return r;
        r.term = *next;
        r.steps += 1;
    }
    return normal_order_step(r.term) ? std::nullopt : std::optional<BetaResult>(r);
}

const char* place_category_name(PlaceCategory c) {
    switch (c) {
        case PlaceCategory::MultRedex: return "MultRedex";
        case PlaceCategory::ExpRedex: return "ExpRedex";
        case PlaceCategory::NewNeededVar: return "NewNeededVar";
        case PlaceCategory::NewHereditaryJump: return "NewHereditaryJump";
        case PlaceCategory::NewAppliedVar: return "NewAppliedVar";
    }
    return "?";
}

}  // namespace cbneed
