#include "cbneed/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "cbneed/classify.hpp"
#include "cbneed/engine.hpp"
#include "cbneed/gen.hpp"
#include "cbneed/normalform.hpp"
#include "cbneed/oracle.hpp"
#include "cbneed/syntax.hpp"
#include "cbneed/varsets.hpp"

namespace cbneed {

namespace {

bool subset(const VarSet& small, const VarSet& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string show_set(const VarSet& s) {
    std::string out = "{";
    for (const auto& x : s) {
        if (out.size() > 1) out += ",";
        out += x;
    }
    return out + "}";
}

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const Program& p, const std::string& what) {
        result_.checked += 1;
        if (ok) return;
        result_.failures += 1;
        if (result_.first_counterexample.empty())
            result_.first_counterexample = print_program(p) + "  -- " + what;
    }

    SuiteResult take() { return std::move(result_); }

private:
    SuiteResult result_;
};

SuiteResult suite_determinism(const std::vector<Program>& corpus) {
    Suite s("determinism");
    for (const auto& p : corpus) {
        for (Calculus calc : {Calculus::Open, Calculus::Useful}) {
            const char* tag = calc == Calculus::Open ? "open" : "useful";
            VarSet S = admissible_set(p, calc);
            auto places = reduction_places(p, S, calc);
            s.check(places.size() <= 1, p,
                    std::string(tag) + ": " + std::to_string(places.size()) +
                        " reduction places");
            Strategy strat = calc == Calculus::Open ? Strategy::Open : Strategy::Useful;
            StepResult r = step_once(p, strat);
            bool fired = r.status == StepStatus::Stepped;
            bool redex_place =
                !places.empty() && (places[0].category == PlaceCategory::MultRedex ||
                                    places[0].category == PlaceCategory::ExpRedex);
            s.check(fired == redex_place, p,
                    std::string(tag) + ": stepper/oracle disagree on whether a "
                                       "redex exists");
            if (fired && redex_place) {
                s.check(prog_ctx_eq(r.step->ctx, places[0].ctx) &&
                            alpha_eq(plug_term(ctx_hole(), r.step->focus),
                                     places[0].focus) &&
                            print_term(r.step->focus) == print_term(places[0].focus),
                        p, std::string(tag) + ": stepper decomposition differs "
                                              "from the oracle's");
            }
        }
    }
    return s.take();
}

SuiteResult suite_characterization(const std::vector<Program>& corpus,
                                   std::size_t reduct_fuel) {
    Suite s("characterization");
    for (const auto& p : corpus) {
        for (Strategy strat : {Strategy::Open, Strategy::Useful}) {
            NameSupply supply;
            supply.reserve_all(all_names(p));
            Program cur = p;
            for (std::size_t i = 0; i <= reduct_fuel; ++i) {
                StepResult r = step_once(cur, strat, supply);
                bool fired = r.status == StepStatus::Stepped;
                bool normal = strat == Strategy::Open ? is_open_normal(cur)
                                                      : is_useful_normal(cur);
                s.check(fired != normal, cur,
                        std::string(strategy_name(strat)) +
                            ": step presence must match the normal-form "
                            "predicate");
                if (!fired) break;
                cur = r.step->after;
            }
        }
    }
    return s.take();
}

SuiteResult suite_coverage(const std::vector<Program>& corpus,
                           std::size_t reduct_fuel) {
    Suite s("coverage");
    for (const auto& p : corpus) {
        NameSupply supply;
        supply.reserve_all(all_names(p));
        Program cur = p;
        for (std::size_t i = 0; i <= reduct_fuel; ++i) {
            VarTriple v = var_triple(cur);
            VarSet both = v.unapplied;
            both.insert(v.applied.begin(), v.applied.end());
            s.check(v.needed == both, cur,
                    "nv=" + show_set(v.needed) + " but unv+anv=" + show_set(both));
            StepResult r = step_once(cur, Strategy::Useful, supply);
            if (r.status != StepStatus::Stepped) break;
            cur = r.step->after;
        }
    }
    return s.take();
}

SuiteResult suite_expmult(const std::vector<Program>& corpus,
                          std::size_t reduct_fuel) {
    Suite s("expmult");
    auto harvest = [&](const Program& owner, const ProgCtx& ctx) {
        auto e = derive_exp(ctx);
        if (!e) return;
        auto m = derive_mult(ctx);
        if (!m) {
            s.check(false, owner, "exponential context is not multiplicative");
            return;
        }
        s.check(subset(m->unapplied, e->unapplied) && subset(m->applied, e->applied),
                owner,
                "multiplicative sets not included in the exponential ones: U=" +
                    show_set(m->unapplied) + " vs " + show_set(e->unapplied) +
                    ", A=" + show_set(m->applied) + " vs " + show_set(e->applied));
    };
    for (const auto& p : corpus) {
        // every enumerable context of the program itself...
        for (const auto& d : enumerate_decompositions(p)) harvest(p, d.ctx);
        // ...plus the decompositions the stepper actually uses along its run
        RunReport rep = run(p, Strategy::Useful, reduct_fuel, true);
        for (const auto& st : rep.trace) harvest(st.before, st.ctx);
    }
    return s.take();
}

SuiteResult suite_usefulness(const std::vector<Program>& corpus,
                             std::size_t reduct_fuel) {
    Suite s("usefulness");
    for (const auto& p : corpus) {
        RunReport rep = run(p, Strategy::Useful, reduct_fuel, true);
        const auto& tr = rep.trace;
        for (std::size_t i = 0; i < tr.size(); ++i) {
            if (tr[i].kind == StepKind::UsefulMult) {
                s.check(derive_mult(tr[i].ctx).has_value(), tr[i].before,
                        "um decomposition not a multiplicative context");
                continue;
            }
            auto e = derive_exp(tr[i].ctx);
            s.check(e.has_value(), tr[i].before,
                    "ue decomposition not an exponential context");
            if (!e) continue;
            std::size_t k = e->na_count;
            // After a ue step with k hereditary jumps in its derivation:
            // exactly k further ue steps, then one um step.
            if (i + k + 1 >= tr.size() && rep.fuel_exhausted) continue;
            bool ok = i + k + 1 < tr.size();
            for (std::size_t j = 1; ok && j <= k; ++j)
                ok = tr[i + j].kind == StepKind::UsefulExp;
            if (ok) ok = tr[i + k + 1].kind == StepKind::UsefulMult;
            s.check(ok, tr[i].before,
                    "ue with k=" + std::to_string(k) +
                        " not followed by k ue steps and one um step");
        }
    }
    return s.take();
}

// Independent, nondeterministic derivation search for the useful normal-form
// classes; the deterministic fold is checked against it.
struct UfClassSet {
    std::set<std::string> genvar;  // heads
    bool ufabs = false;
    bool ufinert = false;
    std::size_t total() const {
        return genvar.size() + (ufabs ? 1 : 0) + (ufinert ? 1 : 0);
    }
};

UfClassSet derive_uf_classes(const Program& p) {
    UfClassSet cs;
    if (p.env.empty()) {
        switch (classify_term(p.head)) {
            case TermClass::VarInert: cs.genvar.insert(p.head->name); break;
            case TermClass::Value: cs.ufabs = true; break;
            case TermClass::NonVarInert: cs.ufinert = true; break;
            default: break;
        }
        return cs;
    }
    Program q{p.head, Environment(p.env.begin(), p.env.end() - 1)};
    const EnvEntry& e = p.env.back();
    UfClassSet inner = derive_uf_classes(q);
    for (const auto& x : inner.genvar) {
        if (e.name != x) {
            cs.genvar.insert(x);
        } else if (is_var(e.value)) {
            cs.genvar.insert(e.value->name);
        } else if (is_value(e.value)) {
            cs.ufabs = true;
        } else if (is_non_var_inert(e.value)) {
            cs.ufinert = true;
        }
    }
    if (inner.ufabs) cs.ufabs = true;
    if (inner.ufinert) {
        VarTriple v = var_triple(q);
        bool in_n = v.needed.count(e.name) != 0;
        if (!in_n) cs.ufinert = true;
        if (in_n && is_inert(e.value)) cs.ufinert = true;
        if (is_value(e.value) && v.unapplied.count(e.name) &&
            !v.applied.count(e.name))
            cs.ufinert = true;
    }
    return cs;
}

SuiteResult suite_disjointness(const std::vector<Program>& corpus) {
    Suite s("disjointness");
    for (const auto& p : corpus) {
        UfClassSet cs = derive_uf_classes(p);
        s.check(cs.total() <= 1, p, "several useful normal-form classes derivable");

        UsefulNormalForm nf = ufnorm(p);
        bool fold_normal = nf.cls != UsefulNormalClass::NotNormal;
        s.check(fold_normal == (cs.total() == 1), p,
                "fold and derivation search disagree on normality");
        if (!fold_normal) continue;

        VarTriple v = var_triple(p);
        auto unf = unfold(p);
        s.check(unf.has_value(), p, "normal program too large to unfold");
        if (!unf) continue;
        switch (nf.cls) {
            case UsefulNormalClass::GenVar: {
                s.check(cs.genvar.count(nf.gen_var) == 1, p,
                        "generalized-variable head mismatch");
                bool props = is_var(*unf) && (*unf)->name == nf.gen_var &&
                             v.needed == VarSet{nf.gen_var} &&
                             v.unapplied == VarSet{nf.gen_var} && v.applied.empty();
                s.check(props, p, "generalized-variable properties violated");
                break;
            }
            case UsefulNormalClass::UfAbs:
                s.check(cs.ufabs, p, "class mismatch (UfAbs)");
                s.check(is_value(*unf) && v.needed.empty() && v.applied.empty() &&
                            v.unapplied.empty(),
                        p, "abstraction-program properties violated");
                break;
            case UsefulNormalClass::UfInert: {
                s.check(cs.ufinert, p, "class mismatch (UfInert)");
                bool props = is_non_var_inert(*unf) && !v.applied.empty() &&
                             v.applied == anv(*unf) && v.unapplied == unv(*unf);
                s.check(props, p, "inert-program properties violated");
                break;
            }
            default:
                break;
        }
    }
    return s.take();
}

// Equality up to a bijective renaming of variables, bound and free alike.
// Copies taken by exponential steps are alpha-renamed to keep binders
// distinct, and later steps can turn those fresh binders into environment
// binders; the duplicated value then differs from the original subterm by
// exactly such a renaming.
bool eq_mod_renaming(const TermPtr& a, const TermPtr& b,
                     std::vector<std::pair<std::string, std::string>>& bound,
                     std::map<std::string, std::string>& fwd,
                     std::map<std::string, std::string>& bwd) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Var: {
            for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
                bool la = it->first == a->name;
                bool lb = it->second == b->name;
                if (la || lb) return la && lb;
            }
            auto f = fwd.find(a->name);
            auto g = bwd.find(b->name);
            if (f == fwd.end() && g == bwd.end()) {
                fwd.emplace(a->name, b->name);
                bwd.emplace(b->name, a->name);
                return true;
            }
            return f != fwd.end() && g != bwd.end() && f->second == b->name &&
                   g->second == a->name;
        }
        case Term::Kind::Abs: {
            bound.emplace_back(a->name, b->name);
            bool ok = eq_mod_renaming(a->body, b->body, bound, fwd, bwd);
            bound.pop_back();
            return ok;
        }
        case Term::Kind::App:
            return eq_mod_renaming(a->left, b->left, bound, fwd, bwd) &&
                   eq_mod_renaming(a->right, b->right, bound, fwd, bwd);
    }
    return false;
}

bool subterm_match(const TermPtr& a, const TermPtr& b) {
    std::vector<std::pair<std::string, std::string>> bound;
    std::map<std::string, std::string> fwd, bwd;
    return eq_mod_renaming(a, b, bound, fwd, bwd);
}

void collect_subterms(const TermPtr& t, std::vector<TermPtr>& out) {
    out.push_back(t);
    switch (t->kind) {
        case Term::Kind::Var: break;
        case Term::Kind::Abs: collect_subterms(t->body, out); break;
        case Term::Kind::App:
            collect_subterms(t->left, out);
            collect_subterms(t->right, out);
            break;
    }
}

SuiteResult suite_subterm(const std::vector<Program>& corpus,
                          std::size_t reduct_fuel) {
    Suite s("subterm");
    for (const auto& p : corpus) {
        std::vector<TermPtr> subs;
        collect_subterms(p.head, subs);
        for (const auto& e : p.env) collect_subterms(e.value, subs);
        for (Strategy strat : {Strategy::Closed, Strategy::Open, Strategy::Useful}) {
            RunReport rep = run(p, strat, reduct_fuel, true);
            for (const auto& st : rep.trace) {
                if (!st.copied) continue;
                bool found = false;
                for (const auto& t : subs)
                    if (subterm_match(t, st.copied)) {
                        found = true;
                        break;
                    }
                s.check(found, p,
                        std::string(strategy_name(strat)) + ": substituted value " +
                            print_term(st.copied) +
                            " is not a subterm of the initial program");
            }
        }
    }
    return s.take();
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::vector<Program>& corpus,
                                    const std::vector<std::string>& which,
                                    std::size_t reduct_fuel) {
    auto wanted = [&](const std::string& n) {
        return which.empty() ||
               std::find(which.begin(), which.end(), n) != which.end();
    };
    std::vector<SuiteResult> out;
    if (wanted("determinism")) out.push_back(suite_determinism(corpus));
    if (wanted("characterization"))
        out.push_back(suite_characterization(corpus, reduct_fuel));
    if (wanted("coverage")) out.push_back(suite_coverage(corpus, reduct_fuel));
    if (wanted("expmult")) out.push_back(suite_expmult(corpus, reduct_fuel));
    if (wanted("usefulness")) out.push_back(suite_usefulness(corpus, reduct_fuel));
    if (wanted("disjointness")) out.push_back(suite_disjointness(corpus));
    if (wanted("subterm")) out.push_back(suite_subterm(corpus, reduct_fuel));
    return out;
}

std::size_t count_ue_steps(const std::vector<Program>& corpus, std::size_t fuel) {
    std::size_t total = 0;
    for (const auto& p : corpus) {
        RunReport rep = run(p, Strategy::Useful, fuel);
        total += rep.counts[static_cast<std::size_t>(StepKind::UsefulExp)];
    }
    return total;
}

}  // namespace cbneed
