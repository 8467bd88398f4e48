#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cbneed/term.hpp"

namespace cbneed {

// Seeded random program corpus for the oracle and property suites. The mix
// deliberately includes closed programs, values under ES, inert applications,
// and variable-to-variable ES chains (which exercise the hereditary-jump
// exponential rule).
struct CorpusConfig {
    std::size_t count = 500;
    std::size_t max_size = 40;
    std::uint64_t seed = 7;
};

TermPtr random_term(std::mt19937_64& rng, std::size_t budget,
                    std::vector<std::string> scope, bool closed);

// Barendregt-renamed; program_size <= max_size.
Program random_program(std::mt19937_64& rng, std::size_t max_size, bool closed);

std::vector<Program> generate_corpus(const CorpusConfig& cfg);

}  // namespace cbneed
