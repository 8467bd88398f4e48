#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "cbneed/term.hpp"

namespace cbneed {

// Open normal programs: either an inert program or an abstraction program.
enum class OpenNormalClass { Inert, Abs, NotNormal };

OpenNormalClass onorm(const Program& p);
inline bool is_open_normal(const Program& p) {
    return onorm(p) != OpenNormalClass::NotNormal;
}

// Useful normal programs split three ways. A generalized variable carries the
// variable it hereditarily stands for.
enum class UsefulNormalClass { GenVar, UfAbs, UfInert, NotNormal };

struct UsefulNormalForm {
    UsefulNormalClass cls;
    std::string gen_var;  // set when cls == GenVar
};

UsefulNormalForm ufnorm(const Program& p);
inline bool is_useful_normal(const Program& p) {
    return ufnorm(p).cls != UsefulNormalClass::NotNormal;
}

const char* open_normal_class_name(OpenNormalClass c);
const char* useful_normal_class_name(UsefulNormalClass c);

// Unfolding: substitutes every ES content back into the head, leftmost
// (innermost) entry first. Returns nothing if an intermediate term exceeds
// `max_nodes`.
inline constexpr std::size_t kUnfoldMaxNodes = std::size_t{1} << 22;
std::optional<TermPtr> unfold(const Program& p,
                              std::size_t max_nodes = kUnfoldMaxNodes);

}  // namespace cbneed
