#include "cbneed/classify.hpp"

namespace cbneed {

TermClass classify_term(const TermPtr& t) {
    switch (t->kind) {
        case Term::Kind::Abs: return TermClass::Value;
        case Term::Kind::Var: return TermClass::VarInert;
        case Term::Kind::App: {
            TermClass l = classify_term(t->left);
            if (l != TermClass::VarInert && l != TermClass::NonVarInert)
                return TermClass::NonNormal;
            return is_fireball(t->right) ? TermClass::NonVarInert : TermClass::NonNormal;
        }
    }
    return TermClass::NonNormal;
}

bool is_inert(const TermPtr& t) {
    TermClass c = classify_term(t);
    return c == TermClass::VarInert || c == TermClass::NonVarInert;
}

bool is_non_var_inert(const TermPtr& t) {
    return classify_term(t) == TermClass::NonVarInert;
}

bool is_fireball(const TermPtr& t) {
    return classify_term(t) != TermClass::NonNormal;
}

std::optional<TermRedex> find_term_redex(const TermPtr& t) {
    if (!is_app(t)) return std::nullopt;
    if (is_abs(t->left)) return TermRedex{ctx_hole(), t};
    if (auto r = find_term_redex(t->left))
        return TermRedex{ctx_app_left(r->ctx, t->right), r->redex};
    if (is_inert(t->left)) {
        if (auto r = find_term_redex(t->right))
            return TermRedex{ctx_app_right(t->left, r->ctx), r->redex};
    }
    return std::nullopt;
}

const char* term_class_name(TermClass c) {
    switch (c) {
        case TermClass::Value: return "Value";
        case TermClass::VarInert: return "VarInert";
        case TermClass::NonVarInert: return "NonVarInert";
        case TermClass::NonNormal: return "NonNormal";
    }
    return "?";
}

}  // namespace cbneed
