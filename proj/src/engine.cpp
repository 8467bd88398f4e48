#include "cbneed/engine.hpp"

#include <algorithm>
#include <cassert>

#include "cbneed/classify.hpp"

namespace cbneed {

const char* step_kind_tag(StepKind k) {
    switch (k) {
        case StepKind::ClosedMult: return "m";
        case StepKind::ClosedExp: return "e";
        case StepKind::OpenMult: return "om";
        case StepKind::OpenExp: return "oe";
        case StepKind::UsefulMult: return "um";
        case StepKind::UsefulExp: return "ue";
    }
    return "?";
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Closed: return "closed";
        case Strategy::Open: return "open";
        case Strategy::Useful: return "useful";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
    if (name == "closed") return Strategy::Closed;
    if (name == "open") return Strategy::Open;
    if (name == "useful") return Strategy::Useful;
    return std::nullopt;
}

namespace {

constexpr std::size_t kHead = static_cast<std::size_t>(-1);

struct SearchHit {
    ProgCtx pctx;
    TermPtr focus;  // beta-redex (mult) or variable occurrence (exp)
    bool exponential = false;
    std::vector<std::string> position;
};

// Partial hit local to one ES content / the head; the context and path are
// assembled while unwinding. `full` carries a hit completed in a jumped-to
// location unchanged through the outer frames.
struct TermHit {
    TermCtxPtr ctx;
    TermPtr focus;
    bool exponential = false;
    std::vector<std::string> path;  // reversed; fixed up in finish()
    std::optional<SearchHit> full;
};

class Searcher {
public:
    Searcher(const Program& p, Strategy s) : p_(p), strat_(s) {}

    std::optional<SearchHit> search() { return search_loc(kHead, false); }

    std::optional<SearchHit> search_closed() {
        auto h = closed_loc(kHead);
        return stuck_ ? std::nullopt : h;
    }

    bool stuck() const { return stuck_; }
    const std::string& stuck_var() const { return stuck_var_; }

private:
    const Program& p_;
    Strategy strat_;
    std::vector<std::string> chain_;  // binders of the ESs jumped through
    bool stuck_ = false;
    std::string stuck_var_;

    const TermPtr& content(std::size_t loc) const {
        return loc == kHead ? p_.head : p_.env[loc].value;
    }

    // A binder at position j scopes over the head and the entries left of j,
    // so an occurrence inside entry `loc` only sees binders at j > loc.
    std::optional<std::size_t> scope_lookup(const std::string& x,
                                            std::size_t scope_min) const {
        for (std::size_t j = scope_min; j < p_.env.size(); ++j)
            if (p_.env[j].name == x) return j;
        return std::nullopt;
    }

    SearchHit finish(std::size_t loc, TermHit h) {
        std::reverse(h.path.begin(), h.path.end());
        SearchHit out;
        out.focus = std::move(h.focus);
        out.exponential = h.exponential;
        out.position = chain_;
        out.position.insert(out.position.end(), h.path.begin(), h.path.end());
        if (loc == kHead) {
            out.pctx = prog_ctx_head(std::move(h.ctx), p_.env);
        } else {
            Environment left(p_.env.begin(), p_.env.begin() + loc);
            Environment right(p_.env.begin() + loc + 1, p_.env.end());
            out.pctx = prog_ctx_env(p_.head, std::move(left), p_.env[loc].name,
                                    std::move(h.ctx), std::move(right));
        }
        return out;
    }

    // ---- open / useful search ----

    std::optional<SearchHit> search_loc(std::size_t loc, bool applied) {
        std::size_t scope_min = loc == kHead ? 0 : loc + 1;
        if (loc != kHead) chain_.push_back(p_.env[loc].name);
        auto h = search_term(content(loc), scope_min, applied);
        std::optional<SearchHit> out;
        if (h) out = h->full ? std::move(*h->full) : finish(loc, std::move(*h));
        if (loc != kHead) chain_.pop_back();
        return out;
    }

    std::optional<TermHit> search_term(const TermPtr& t, std::size_t scope_min,
                                       bool applied) {
        switch (t->kind) {
            case Term::Kind::Abs:
                return std::nullopt;
            case Term::Kind::App: {
                if (is_abs(t->left)) {
                    TermHit h;
                    h.ctx = ctx_hole();
                    h.focus = t;
                    return h;
                }
                if (auto r = search_term(t->left, scope_min, true)) {
                    if (!r->full) {
                        r->ctx = ctx_app_left(std::move(r->ctx), t->right);
                        r->path.push_back("l");
                    }
                    return r;
                }
                // The left part found nothing, hence it is inert; scan the
                // argument.
                if (auto r = search_term(t->right, scope_min, false)) {
                    if (!r->full) {
                        r->ctx = ctx_app_right(t->left, std::move(r->ctx));
                        r->path.push_back("r");
                    }
                    return r;
                }
                return std::nullopt;
            }
            case Term::Kind::Var: {
                auto j = scope_lookup(t->name, scope_min);
                if (!j) return std::nullopt;  // free: frozen
                // Jump into the ES content first. The applied flag is
                // hereditary: a bare-variable content inherits it.
                if (auto sub = search_loc(*j, applied)) {
                    TermHit h;
                    h.full = std::move(sub);
                    return h;
                }
                const TermPtr& u = p_.env[*j].value;
                if (is_value(u) && (strat_ == Strategy::Open || applied)) {
                    // Exponential step at this occurrence. In the useful
                    // calculus an unapplied value binding is useless and
                    // skipped instead.
                    TermHit h;
                    h.ctx = ctx_hole();
                    h.focus = t;
                    h.exponential = true;
                    return h;
                }
                return std::nullopt;
            }
        }
        return std::nullopt;
    }

    // ---- closed search (head contexts only: <.> | H t) ----

    std::optional<SearchHit> closed_loc(std::size_t loc) {
        std::size_t scope_min = loc == kHead ? 0 : loc + 1;
        if (loc != kHead) chain_.push_back(p_.env[loc].name);
        auto h = closed_term(content(loc), scope_min);
        std::optional<SearchHit> out;
        if (h) out = h->full ? std::move(*h->full) : finish(loc, std::move(*h));
        if (loc != kHead) chain_.pop_back();
        return out;
    }

    std::optional<TermHit> closed_term(const TermPtr& t, std::size_t scope_min) {
        switch (t->kind) {
            case Term::Kind::Abs:
                return std::nullopt;  // answer (only reachable at the root)
            case Term::Kind::App: {
                if (is_abs(t->left)) {
                    TermHit h;
                    h.ctx = ctx_hole();
                    h.focus = t;
                    return h;
                }
                auto r = closed_term(t->left, scope_min);
                if (r && !r->full) {
                    r->ctx = ctx_app_left(std::move(r->ctx), t->right);
                    r->path.push_back("l");
                }
                return r;
            }
            case Term::Kind::Var: {
                auto j = scope_lookup(t->name, scope_min);
                if (!j) {
                    stuck_ = true;
                    stuck_var_ = t->name;
                    return std::nullopt;
                }
                const TermPtr& u = p_.env[*j].value;
                if (is_abs(u)) {
                    TermHit h;
                    h.ctx = ctx_hole();
                    h.focus = t;
                    h.exponential = true;
                    return h;
                }
                auto sub = closed_loc(*j);
                if (!sub) return std::nullopt;  // stuck below
                TermHit h;
                h.full = std::move(sub);
                return h;
            }
        }
        return std::nullopt;
    }
};

StepKind kind_for(Strategy s, bool exponential) {
    switch (s) {
        case Strategy::Closed:
            return exponential ? StepKind::ClosedExp : StepKind::ClosedMult;
        case Strategy::Open:
            return exponential ? StepKind::OpenExp : StepKind::OpenMult;
        case Strategy::Useful:
            return exponential ? StepKind::UsefulExp : StepKind::UsefulMult;
    }
    return StepKind::OpenMult;
}

StepResult make_step(const Program& p, Strategy s, SearchHit hit,
                     NameSupply& supply) {
    Step st;
    st.kind = kind_for(s, hit.exponential);
    st.position = std::move(hit.position);
    st.before = p;
    st.ctx = std::move(hit.pctx);
    st.focus = hit.focus;
    if (!hit.exponential) {
        // focus = (\x.b) u  ~~>  plug (b, [x <- u])
        const TermPtr& abs = hit.focus->left;
        st.after = plug_prog(st.ctx, abs->body, {{abs->name, hit.focus->right}});
    } else {
        auto v = lookup(p, hit.focus->name);
        assert(v && is_value(*v));
        st.copied = fresh_rename(*v, supply);
        st.after = plug_prog(st.ctx, st.copied, {});
    }
    StepResult r;
    r.status = StepStatus::Stepped;
    r.step = std::move(st);
    return r;
}

}  // namespace

StepResult step_closed(const Program& p, NameSupply& supply) {
    if (is_abs(p.head)) return {};  // answer
    Searcher s(p, Strategy::Closed);
    auto hit = s.search_closed();
    if (s.stuck()) {
        StepResult r;
        r.status = StepStatus::Stuck;
        r.stuck_var = s.stuck_var();
        return r;
    }
    if (!hit) return {};
    return make_step(p, Strategy::Closed, std::move(*hit), supply);
}

StepResult step_open(const Program& p, NameSupply& supply) {
    Searcher s(p, Strategy::Open);
    auto hit = s.search();
    if (!hit) return {};
    return make_step(p, Strategy::Open, std::move(*hit), supply);
}

StepResult step_useful(const Program& p, NameSupply& supply) {
    Searcher s(p, Strategy::Useful);
    auto hit = s.search();
    if (!hit) return {};
    return make_step(p, Strategy::Useful, std::move(*hit), supply);
}

StepResult step_once(const Program& p, Strategy s, NameSupply& supply) {
    switch (s) {
        case Strategy::Closed: return step_closed(p, supply);
        case Strategy::Open: return step_open(p, supply);
        case Strategy::Useful: return step_useful(p, supply);
    }
    return {};
}

StepResult step_once(const Program& p, Strategy s) {
    NameSupply supply;
    supply.reserve_all(all_names(p));
    return step_once(p, s, supply);
}

RunReport run(const Program& p, Strategy s, std::size_t fuel, bool keep_trace) {
    RunReport rep;
    rep.initial = p;
    rep.strategy = s;
    rep.initial_size = program_size(p);

    NameSupply supply;
    supply.reserve_all(all_names(p));

    Program cur = p;
    for (std::size_t i = 0; i < fuel; ++i) {
        StepResult r = step_once(cur, s, supply);
        if (r.status == StepStatus::Normal) {
            rep.final_program = cur;
            rep.final_size = program_size(cur);
            return rep;
        }
        if (r.status == StepStatus::Stuck) {
            rep.stuck = true;
            rep.stuck_var = r.stuck_var;
            rep.final_program = cur;
            rep.final_size = program_size(cur);
            return rep;
        }
        cur = r.step->after;
        rep.counts[static_cast<std::size_t>(r.step->kind)] += 1;
        rep.steps_total += 1;
        if (keep_trace && rep.trace.size() < kTraceCap)
            rep.trace.push_back(std::move(*r.step));
    }
    rep.fuel_exhausted = true;
    rep.final_program = cur;
    rep.final_size = program_size(cur);
    return rep;
}

}  // namespace cbneed
