#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cbneed/context.hpp"
#include "cbneed/term.hpp"

namespace cbneed {

enum class Strategy { Closed, Open, Useful };

enum class StepKind { ClosedMult, ClosedExp, OpenMult, OpenExp, UsefulMult, UsefulExp };

// Short rule tags used in traces: m, e, om, oe, um, ue.
const char* step_kind_tag(StepKind k);
const char* strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

struct Step {
    StepKind kind;
    // Redex locator: ES binder chain (jumps), then "l"/"r" spine path inside
    // the content where the redex or variable occurrence sits.
    std::vector<std::string> position;
    Program before;
    Program after;
    // The decomposition used, focusing the beta-redex (multiplicative) or the
    // variable occurrence (exponential).
    ProgCtx ctx;
    TermPtr focus;
    TermPtr copied;  // renamed value, exponential steps only
};

enum class StepStatus { Stepped, Normal, Stuck };

struct StepResult {
    StepStatus status = StepStatus::Normal;
    std::optional<Step> step;
    std::string stuck_var;  // closed engine only: free hereditary head variable
};

// The supply must have every name of p reserved; it owns freshness for the
// whole evaluation session.
StepResult step_once(const Program& p, Strategy s, NameSupply& supply);
// Convenience: one-shot supply seeded from p.
StepResult step_once(const Program& p, Strategy s);

StepResult step_closed(const Program& p, NameSupply& supply);
StepResult step_open(const Program& p, NameSupply& supply);
StepResult step_useful(const Program& p, NameSupply& supply);

inline constexpr std::size_t kDefaultFuel = 10000;
inline constexpr std::size_t kTraceCap = 10000;

struct RunReport {
    Program initial;
    Program final_program;
    Strategy strategy = Strategy::Open;
    std::vector<Step> trace;  // only when requested; capped at kTraceCap
    std::array<std::size_t, 6> counts{};  // indexed by StepKind
    std::size_t steps_total = 0;
    bool fuel_exhausted = false;
    bool stuck = false;
    std::string stuck_var;
    std::size_t initial_size = 0;
    std::size_t final_size = 0;
};

RunReport run(const Program& p, Strategy s, std::size_t fuel = kDefaultFuel,
              bool keep_trace = false);

}  // namespace cbneed
