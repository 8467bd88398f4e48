#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace cbneed {

// Ordered set of variable names. std::set gives deterministic iteration,
// which keeps printed judgments and golden files stable.
using VarSet = std::set<std::string>;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable lambda-term node. Values are abstractions; variables are not values.
struct Term {
    enum class Kind { Var, Abs, App };

    Kind kind;
    std::string name;  // Var name or Abs binder
    TermPtr body;      // Abs
    TermPtr left;      // App
    TermPtr right;     // App
};

TermPtr mk_var(std::string name);
TermPtr mk_abs(std::string binder, TermPtr body);
TermPtr mk_app(TermPtr left, TermPtr right);

inline bool is_var(const TermPtr& t) { return t->kind == Term::Kind::Var; }
inline bool is_abs(const TermPtr& t) { return t->kind == Term::Kind::Abs; }
inline bool is_app(const TermPtr& t) { return t->kind == Term::Kind::App; }
inline bool is_value(const TermPtr& t) { return is_abs(t); }

// One explicit substitution [name <- value]. The binder scopes over the
// program head and over every entry to its *left* in the environment.
struct EnvEntry {
    std::string name;
    TermPtr value;
};

using Environment = std::vector<EnvEntry>;

// A term paired with an ordered environment. The rightmost entry is the
// outermost binder (the most recently appended one).
struct Program {
    TermPtr head;
    Environment env;
};

std::size_t term_size(const TermPtr& t);
std::size_t program_size(const Program& p);

VarSet free_vars(const TermPtr& t);
VarSet free_vars(const Program& p);

// All binder names occurring in t (abstraction binders only).
VarSet binder_names(const TermPtr& t);
// Every name mentioned anywhere: free, bound, ES binders.
VarSet all_names(const Program& p);
void collect_names(const TermPtr& t, VarSet& out);

bool alpha_eq(const TermPtr& a, const TermPtr& b);
bool alpha_eq(const Program& a, const Program& b);

// Capture-avoiding meta-level substitution t{x:=u}.
TermPtr subst(const TermPtr& t, const std::string& x, const TermPtr& u);

// Generates names that are fresh with respect to everything it has seen.
// Each evaluation session owns one; they are not shared across threads.
class NameSupply {
public:
    NameSupply() = default;

    void reserve(const std::string& name) { used_.insert(name); }
    void reserve_all(const VarSet& names) { used_.insert(names.begin(), names.end()); }

    // Strips any digit suffix from `base` and returns root1, root2, ...
    // skipping names already reserved. The result is reserved.
    std::string fresh(const std::string& base);

    bool is_used(const std::string& name) const { return used_.count(name) != 0; }

private:
    std::set<std::string> used_;
};

// Alpha-renames every binder of the abstraction v to names fresh for `supply`.
// Free variables are untouched.
TermPtr fresh_rename(const TermPtr& v, NameSupply& supply);

// Renames binders (abstraction and ES) so that they are pairwise distinct and
// distinct from every free variable. Returns the renamed pairs, if any.
std::vector<std::pair<std::string, std::string>>
rename_apart(Program& p, NameSupply& supply);

}  // namespace cbneed
