#pragma once

#include <cstddef>
#include <vector>

#include "cbneed/engine.hpp"
#include "cbneed/term.hpp"

namespace cbneed {

// Size-explosion family:
//   t_1 = \x.\y.y x x        t_{n+1} = \x.t_n (\y.y x x)
//   u_0 = \z.z               u_{n+1} = \y.y u_n u_n
// t_n applied to the identity beta-reduces in n steps to u_n, whose size is
// exponential in n, while the shared evaluation stays linear.
TermPtr gen_t(std::size_t n);  // n >= 1; binders freshened per level
TermPtr gen_u(std::size_t n);

struct FamilyPoint {
    std::size_t n = 0;
    std::size_t t_n_size = 0;
    std::size_t u_n_size = 0;
    std::size_t beta_steps = 0;
    std::array<std::size_t, 6> open_counts{};    // indexed by StepKind
    std::array<std::size_t, 6> useful_counts{};
    std::size_t final_program_size = 0;
    std::size_t unfold_size = 0;
    bool unfold_capped = false;
    bool beta_matches = false;    // ref normalization reaches u_n in n steps
    bool unfold_matches = false;  // final shared program unfolds to u_n
};

inline constexpr std::size_t kDefaultFamilyMax = 18;

std::vector<FamilyPoint> run_family(std::size_t n_max = kDefaultFamilyMax);
FamilyPoint run_family_point(std::size_t n);

}  // namespace cbneed
