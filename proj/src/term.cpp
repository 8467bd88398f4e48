#include "cbneed/term.hpp"

#include <cassert>
#include <cctype>

namespace cbneed {

TermPtr mk_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Var;
    t->name = std::move(name);
    return t;
}

TermPtr mk_abs(std::string binder, TermPtr body) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Abs;
    t->name = std::move(binder);
    t->body = std::move(body);
    return t;
}

TermPtr mk_app(TermPtr left, TermPtr right) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::App;
    t->left = std::move(left);
    t->right = std::move(right);
    return t;
}

std::size_t term_size(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Var: return 1;
        case Term::Kind::Abs: return 1 + term_size(t->body);
        case Term::Kind::App: return 1 + term_size(t->left) + term_size(t->right);
    }
    return 0;
}

std::size_t program_size(const Program& p) {
    std::size_t n = term_size(p.head);
    for (const auto& e : p.env) n += term_size(e.value) + 1;
    return n;
}

static void free_vars_rec(const TermPtr& t, VarSet& bound, VarSet& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            if (!bound.count(t->name)) out.insert(t->name);
            break;
        case Term::Kind::Abs: {
            bool fresh = bound.insert(t->name).second;
            free_vars_rec(t->body, bound, out);
            if (fresh) bound.erase(t->name);
            break;
        }
        case Term::Kind::App:
            free_vars_rec(t->left, bound, out);
            free_vars_rec(t->right, bound, out);
            break;
    }
}

VarSet free_vars(const TermPtr& t) {
    VarSet bound, out;
    free_vars_rec(t, bound, out);
    return out;
}

VarSet free_vars(const Program& p) {
    // fv(t, env[x<-u]) = (fv(t, env) \ {x}) u fv(u): peel from the right,
    // which amounts to a left-to-right fold over the entries.
    VarSet out = free_vars(p.head);
    for (const auto& e : p.env) {
        out.erase(e.name);
        VarSet fu = free_vars(e.value);
        out.insert(fu.begin(), fu.end());
    }
    return out;
}

void collect_names(const TermPtr& t, VarSet& out) {
    switch (t->kind) {
        case Term::Kind::Var:
            out.insert(t->name);
            break;
        case Term::Kind::Abs:
            out.insert(t->name);
            collect_names(t->body, out);
            break;
        case Term::Kind::App:
            collect_names(t->left, out);
            collect_names(t->right, out);
            break;
    }
}

VarSet binder_names(const TermPtr& t) {
    VarSet out;
    switch (t->kind) {
        case Term::Kind::Var: break;
        case Term::Kind::Abs: {
            out.insert(t->name);
            VarSet inner = binder_names(t->body);
            out.insert(inner.begin(), inner.end());
            break;
        }
        case Term::Kind::App: {
            out = binder_names(t->left);
            VarSet r = binder_names(t->right);
            out.insert(r.begin(), r.end());
            break;
        }
    }
    return out;
}

VarSet all_names(const Program& p) {
    VarSet out;
    collect_names(p.head, out);
    for (const auto& e : p.env) {
        out.insert(e.name);
        collect_names(e.value, out);
    }
    return out;
}

namespace {

using RenameMap = std::unordered_map<std::string, std::string>;

bool alpha_eq_rec(const TermPtr& a, const TermPtr& b, RenameMap& ab, RenameMap& ba) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Term::Kind::Var: {
            auto ita = ab.find(a->name);
            auto itb = ba.find(b->name);
            if (ita == ab.end() && itb == ba.end()) return a->name == b->name;
            if (ita == ab.end() || itb == ba.end()) return false;
            return ita->second == b->name && itb->second == a->name;
        }
        case Term::Kind::Abs: {
            auto olda = ab.find(a->name) == ab.end()
                            ? std::optional<std::string>{}
                            : std::optional<std::string>{ab[a->name]};
            auto oldb = ba.find(b->name) == ba.end()
                            ? std::optional<std::string>{}
                            : std::optional<std::string>{ba[b->name]};
            ab[a->name] = b->name;
            ba[b->name] = a->name;
            bool ok = alpha_eq_rec(a->body, b->body, ab, ba);
            if (olda) ab[a->name] = *olda; else ab.erase(a->name);
            if (oldb) ba[b->name] = *oldb; else ba.erase(b->name);
            return ok;
        }
        case Term::Kind::App:
            return alpha_eq_rec(a->left, b->left, ab, ba) &&
                   alpha_eq_rec(a->right, b->right, ab, ba);
    }
    return false;
}

// Entry i of the environment is in the scope of binders i+1..n-1 (to its
// right); the head is in the scope of all of them.
bool alpha_eq_prog_rec(const Program& a, const Program& b, std::size_t upto,
                       RenameMap& ab, RenameMap& ba) {
    if (upto == 0) return alpha_eq_rec(a.head, b.head, ab, ba);
    std::size_t i = upto - 1;
    const auto& ea = a.env[i];
    const auto& eb = b.env[i];
    if (!alpha_eq_rec(ea.value, eb.value, ab, ba)) return false;
    auto olda = ab.find(ea.name) == ab.end()
                    ? std::optional<std::string>{}
                    : std::optional<std::string>{ab[ea.name]};
    auto oldb = ba.find(eb.name) == ba.end()
                    ? std::optional<std::string>{}
                    : std::optional<std::string>{ba[eb.name]};
    ab[ea.name] = eb.name;
    ba[eb.name] = ea.name;
    bool ok = alpha_eq_prog_rec(a, b, i, ab, ba);
    if (olda) ab[ea.name] = *olda; else ab.erase(ea.name);
    if (oldb) ba[eb.name] = *oldb; else ba.erase(eb.name);
    return ok;
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) {
    RenameMap ab, ba;
    return alpha_eq_rec(a, b, ab, ba);
}

bool alpha_eq(const Program& a, const Program& b) {
    if (a.env.size() != b.env.size()) return false;
    RenameMap ab, ba;
    return alpha_eq_prog_rec(a, b, a.env.size(), ab, ba);
}

namespace {

std::string strip_digits(const std::string& s) {
    std::size_t end = s.size();
    while (end > 1 && std::isdigit(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(0, end);
}

std::string pick_fresh(const std::string& base, const VarSet& avoid) {
    std::string root = strip_digits(base);
    for (int i = 1;; ++i) {
        std::string cand = root + std::to_string(i);
        if (!avoid.count(cand)) return cand;
    }
}

}  // namespace

std::string NameSupply::fresh(const std::string& base) {
    std::string root = strip_digits(base);
    for (int i = 1;; ++i) {
        std::string cand = root + std::to_string(i);
        if (used_.insert(cand).second) return cand;
    }
}

TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& u) {
    switch (t->kind) {
        case Term::Kind::Var:
            return t->name == x ? u : t;
        case Term::Kind::Abs: {
            if (t->name == x) return t;
            VarSet fu = free_vars(u);
            if (fu.count(t->name)) {
                // Binder would capture a free variable of u: rename it first.
                VarSet avoid = fu;
                VarSet fb = free_vars(t->body);
                avoid.insert(fb.begin(), fb.end());
                avoid.insert(x);
                std::string nb = pick_fresh(t->name, avoid);
                TermPtr body = subst(t->body, t->name, mk_var(nb));
                return mk_abs(nb, subst(body, x, u));
            }
            TermPtr body = subst(t->body, x, u);
            return body == t->body ? t : mk_abs(t->name, body);
        }
        case Term::Kind::App: {
            TermPtr l = subst(t->left, x, u);
            TermPtr r = subst(t->right, x, u);
            return (l == t->left && r == t->right) ? t : mk_app(l, r);
        }
    }
    return t;
}

namespace {

TermPtr rename_binders(const TermPtr& t, NameSupply& supply, RenameMap& map) {
    switch (t->kind) {
        case Term::Kind::Var: {
            auto it = map.find(t->name);
            return it == map.end() ? t : mk_var(it->second);
        }
        case Term::Kind::Abs: {
            std::string nb = supply.fresh(t->name);
            auto old = map.find(t->name) == map.end()
                           ? std::optional<std::string>{}
                           : std::optional<std::string>{map[t->name]};
            map[t->name] = nb;
            TermPtr body = rename_binders(t->body, supply, map);
            if (old) map[t->name] = *old; else map.erase(t->name);
            return mk_abs(nb, body);
        }
        case Term::Kind::App: {
            TermPtr l = rename_binders(t->left, supply, map);
            TermPtr r = rename_binders(t->right, supply, map);
            return mk_app(l, r);
        }
    }
    return t;
}

// Rename abstraction binders that collide with `taken`; every binder kept or
// introduced is added to `taken`.
TermPtr uniquify_term(const TermPtr& t, VarSet& taken, NameSupply& supply,
                      std::vector<std::pair<std::string, std::string>>& renamed) {
    switch (t->kind) {
        case Term::Kind::Var:
            return t;
        case Term::Kind::Abs: {
            std::string binder = t->name;
            TermPtr body = t->body;
            if (taken.count(binder)) {
                std::string nb = supply.fresh(binder);
                renamed.emplace_back(binder, nb);
                body = subst(body, binder, mk_var(nb));
                binder = nb;
            }
            taken.insert(binder);
            supply.reserve(binder);
            body = uniquify_term(body, taken, supply, renamed);
            return mk_abs(binder, body);
        }
        case Term::Kind::App: {
            TermPtr l = uniquify_term(t->left, taken, supply, renamed);
            TermPtr r = uniquify_term(t->right, taken, supply, renamed);
            return mk_app(l, r);
        }
    }
    return t;
}

}  // namespace

TermPtr fresh_rename(const TermPtr& v, NameSupply& supply) {
    assert(is_abs(v));
    RenameMap map;
    return rename_binders(v, supply, map);
}

std::vector<std::pair<std::string, std::string>>
rename_apart(Program& p, NameSupply& supply) {
    std::vector<std::pair<std::string, std::string>> renamed;
    supply.reserve_all(all_names(p));
    VarSet taken = free_vars(p);

    // ES binders, right to left: a binder scopes over the head and over every
    // entry to its left, so renaming must rewrite exactly those places.
    for (std::size_t k = p.env.size(); k-- > 0;) {
        std::string binder = p.env[k].name;
        // Distinct from free vars and from binders already fixed to its right.
        bool clash = taken.count(binder) != 0;
        if (clash) {
            std::string nb = supply.fresh(binder);
            renamed.emplace_back(binder, nb);
            p.head = subst(p.head, binder, mk_var(nb));
            for (std::size_t j = 0; j < k; ++j)
                p.env[j].value = subst(p.env[j].value, binder, mk_var(nb));
            p.env[k].name = nb;
        }
        taken.insert(p.env[k].name);
    }

    p.head = uniquify_term(p.head, taken, supply, renamed);
    for (auto& e : p.env)
        e.value = uniquify_term(e.value, taken, supply, renamed);
    return renamed;
}

}  // namespace cbneed
