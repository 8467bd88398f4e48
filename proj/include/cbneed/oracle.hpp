#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cbneed/context.hpp"
#include "cbneed/engine.hpp"
#include "cbneed/term.hpp"

namespace cbneed {

// Brute-force reference procedures. Deliberately slow and obvious; the fast
// steppers are tested against them.

struct OracleLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxNodes = 200;
inline constexpr std::size_t kOracleMaxDecompositions = 10000;

struct Decomposition {
    ProgCtx ctx;
    TermPtr focus;
};

// Every way to split p into a context and a focused subterm (term contexts
// never enter abstractions); includes positions inside ES contents.
std::vector<Decomposition> enumerate_decompositions(
    const Program& p, std::size_t max_nodes = kOracleMaxNodes,
    std::size_t max_decompositions = kOracleMaxDecompositions);

enum class PlaceCategory {
    MultRedex,
    ExpRedex,
    NewNeededVar,
    NewHereditaryJump,
    NewAppliedVar,
};

struct ReductionPlace {
    ProgCtx ctx;
    TermPtr focus;
    PlaceCategory category;
};

enum class Calculus { Open, Useful };

// S-reduction places of p: decompositions filtered through the declarative
// context checkers and the category side conditions, with S covering the
// required parameter sets. At most one place is emitted per decomposition.
std::vector<ReductionPlace> reduction_places(const Program& p, const VarSet& S,
                                             Calculus calculus);

// The S that makes every candidate place of p admissible: the union of the
// required parameter sets over all derivable decomposition contexts.
VarSet admissible_set(const Program& p, Calculus calculus);

enum class FocusMode { Needed, Unapplied, Applied };

// A context focusing a free occurrence of x whose judgment excludes x from
// the relevant parameter set. Requires x in nv/unv/anv of p respectively.
std::optional<ProgCtx> focus_on_variable(const Program& p, const std::string& x,
                                         FocusMode mode);

enum class ExpForm { Form1, Form2, Form3 };

// Shape of a derivable exponential context: hole in the head (Form1), inside
// an ES content under an applicative term context (Form2), or a bare-hole ES
// (Form3, the hereditary-jump case).
ExpForm classify_exp_form(const ProgCtx& P);

struct BetaResult {
    TermPtr term;
    std::size_t steps = 0;
};

// Normal-order (leftmost-outermost) beta reduction with meta-level
// substitution. None on fuel exhaustion.
std::optional<BetaResult> ref_beta_normalize(const TermPtr& t, std::size_t fuel);

const char* place_category_name(PlaceCategory c);

}  // namespace cbneed
