#include "cbneed/bench.hpp"

#include <stdexcept>
#include <string>

#include "cbneed/normalform.hpp"
#include "cbneed/oracle.hpp"

namespace cbneed {

namespace {

TermPtr pair_abs(const std::string& x, const std::string& y) {
    // \y. y x x  with the given names
    return mk_abs(y, mk_app(mk_app(mk_var(y), mk_var(x)), mk_var(x)));
}

}  // namespace

TermPtr gen_t(std::size_t n) {
    if (n < 1) throw std::invalid_argument("gen_t: n must be >= 1");
    // t_1 with level-1 names; each further level wraps with fresh binders.
    TermPtr t = mk_abs("x1", pair_abs("x1", "y1"));
    for (std::size_t k = 2; k <= n; ++k) {
        std::string x = "x" + std::to_string(k);
        std::string y = "y" + std::to_string(k);
        t = mk_abs(x, mk_app(t, pair_abs(x, y)));
    }
    return t;
}

TermPtr gen_u(std::size_t n) {
    TermPtr u = mk_abs("z", mk_var("z"));
    for (std::size_t k = 0; k < n; ++k)
        u = mk_abs("y", mk_app(mk_app(mk_var("y"), u), u));
    return u;
}

FamilyPoint run_family_point(std::size_t n) {
    FamilyPoint pt;
    pt.n = n;

    TermPtr t = gen_t(n);
    TermPtr u = gen_u(n);
    pt.t_n_size = term_size(t);
    pt.u_n_size = term_size(u);

    TermPtr start = mk_app(t, mk_abs("z", mk_var("z")));

    if (auto beta = ref_beta_normalize(start, n + 5)) {
        pt.beta_steps = beta->steps;
        pt.beta_matches = beta->steps == n && alpha_eq(beta->term, u);
    }

    Program p{start, {}};
    RunReport open_rep = run(p, Strategy::Open, 4 * n + 20);
    RunReport useful_rep = run(p, Strategy::Useful, 4 * n + 20);
    pt.open_counts = open_rep.counts;
    pt.useful_counts = useful_rep.counts;
    pt.final_program_size = useful_rep.final_size;

    if (auto unf = unfold(useful_rep.final_program)) {
        pt.unfold_size = term_size(*unf);
        pt.unfold_matches = alpha_eq(*unf, u);
    } else {
        pt.unfold_capped = true;
    }
    return pt;
}

std::vector<FamilyPoint> run_family(std::size_t n_max) {
    std::vector<FamilyPoint> out;
    for (std::size_t n = 1; n <= n_max; ++n) out.push_back(run_family_point(n));
    return out;
}

}  // namespace cbneed
