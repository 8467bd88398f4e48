#include "cbneed/normalform.hpp"

#include "cbneed/classify.hpp"
#include "cbneed/varsets.hpp"

namespace cbneed {

OpenNormalClass onorm(const Program& p) {
    OpenNormalClass cls;
    VarSet needed;
    switch (classify_term(p.head)) {
        case TermClass::Value:
            cls = OpenNormalClass::Abs;
            break;
        case TermClass::VarInert:
        case TermClass::NonVarInert:
            cls = OpenNormalClass::Inert;
            needed = nv(p.head);
            break;
        default:
            return OpenNormalClass::NotNormal;
    }
    for (const auto& e : p.env) {
        if (!needed.count(e.name)) continue;  // gc: arbitrary content
        // Only inert programs have needed variables.
        if (!is_inert(e.value)) return OpenNormalClass::NotNormal;
        needed.erase(e.name);
        VarSet more = nv(e.value);
        needed.insert(more.begin(), more.end());
    }
    return cls;
}

UsefulNormalForm ufnorm(const Program& p) {
    UsefulNormalForm nf;
    switch (classify_term(p.head)) {
        case TermClass::VarInert:
            nf = {UsefulNormalClass::GenVar, p.head->name};
            break;
        case TermClass::Value:
            nf = {UsefulNormalClass::UfAbs, {}};
            break;
        case TermClass::NonVarInert:
            nf = {UsefulNormalClass::UfInert, {}};
            break;
        default:
            return {UsefulNormalClass::NotNormal, {}};
    }
    // Prefix variable sets drive the inert side conditions.
    VarTriple v{nv(p.head), anv(p.head), unv(p.head)};
    for (const auto& e : p.env) {
        switch (nf.cls) {
            case UsefulNormalClass::GenVar:
                if (e.name != nf.gen_var) break;  // gc
                if (is_var(e.value))
                    nf.gen_var = e.value->name;  // chain one hop further
                else if (is_value(e.value))
                    nf = {UsefulNormalClass::UfAbs, {}};
                else if (is_non_var_inert(e.value))
                    nf = {UsefulNormalClass::UfInert, {}};
                else
                    return {UsefulNormalClass::NotNormal, {}};
                break;
            case UsefulNormalClass::UfAbs:
                break;  // gc: any content
            case UsefulNormalClass::UfInert: {
                bool in_n = v.needed.count(e.name) != 0;
                bool in_a = v.applied.count(e.name) != 0;
                bool in_u = v.unapplied.count(e.name) != 0;
                if (!in_n) break;                   // gc
                if (is_inert(e.value)) break;       // inert content, stays inert
                if (is_value(e.value) && in_u && !in_a)
                    break;                          // useless value binding
                return {UsefulNormalClass::NotNormal, {}};
            }
            default:
                return {UsefulNormalClass::NotNormal, {}};
        }
        v = var_triple_step(std::move(v), e);
    }
    if (nf.cls != UsefulNormalClass::GenVar) nf.gen_var.clear();
    return nf;
}

const char* open_normal_class_name(OpenNormalClass c) {
    switch (c) {
        case OpenNormalClass::Inert: return "Inert";
        case OpenNormalClass::Abs: return "Abs";
        case OpenNormalClass::NotNormal: return "NotNormal";
    }
    return "?";
}

const char* useful_normal_class_name(UsefulNormalClass c) {
    switch (c) {
        case UsefulNormalClass::GenVar: return "GenVar";
        case UsefulNormalClass::UfAbs: return "UfAbs";
        case UsefulNormalClass::UfInert: return "UfInert";
        case UsefulNormalClass::NotNormal: return "NotNormal";
    }
    return "?";
}

std::optional<TermPtr> unfold(const Program& p, std::size_t max_nodes) {
    TermPtr t = p.head;
    if (term_size(t) > max_nodes) return std::nullopt;
    for (const auto& e : p.env) {
        t = subst(t, e.name, e.value);
        if (term_size(t) > max_nodes) return std::nullopt;
    }
    return t;
}

}  // namespace cbneed
