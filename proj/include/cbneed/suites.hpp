#pragma once

#include <string>
#include <vector>

#include "cbneed/term.hpp"

namespace cbneed {

// Property suites run over a program corpus: the heart of the oracle command
// and of the acceptance checks. Each suite returns how many checks ran and
// the first counterexample, pretty-printed, if any failed.
struct SuiteResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_counterexample;
    bool passed() const { return failures == 0; }
};

inline const std::vector<std::string> kAllSuites = {
    "determinism",  "characterization", "coverage",  "expmult",
    "usefulness",   "disjointness",     "subterm",
};

// `which` empty means all suites. `reduct_fuel` bounds the reachable states
// explored per program by the stateful suites.
std::vector<SuiteResult> run_suites(const std::vector<Program>& corpus,
                                    const std::vector<std::string>& which = {},
                                    std::size_t reduct_fuel = 200);

// Total useful-exponential steps fired across the corpus; corpus-adequacy
// check for the usefulness suite.
std::size_t count_ue_steps(const std::vector<Program>& corpus,
                           std::size_t fuel = 200);

}  // namespace cbneed
