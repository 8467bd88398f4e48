#include "cbneed/gen.hpp"

namespace cbneed {

namespace {

const char* kFreeNames[] = {"a", "b", "c", "d", "w"};
const char* kBinderNames[] = {"x", "y", "z", "u", "v", "s", "t"};

std::string pick(std::mt19937_64& rng, const std::vector<std::string>& pool) {
    std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
    return pool[d(rng)];
}

std::string pick_binder(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> d(0, std::size(kBinderNames) - 1);
    return kBinderNames[d(rng)];
}

std::string pick_free(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> d(0, std::size(kFreeNames) - 1);
    return kFreeNames[d(rng)];
}

}  // namespace

TermPtr random_term(std::mt19937_64& rng, std::size_t budget,
                    std::vector<std::string> scope, bool closed) {
    std::uniform_int_distribution<int> pct(0, 99);
    bool can_var = !closed || !scope.empty();
    if (budget <= 1) {
        if (can_var && (closed || pct(rng) < 70))
            return mk_var(scope.empty() ? pick_free(rng) : pick(rng, scope));
        if (!can_var || pct(rng) < 50) {
            std::string b = pick_binder(rng);
            return mk_abs(b, mk_var(b));
        }
        return mk_var(pick_free(rng));
    }
    int roll = pct(rng);
    if (roll < 25 && can_var) {
        bool bound = !scope.empty() && (closed || pct(rng) < 60);
        return mk_var(bound ? pick(rng, scope) : pick_free(rng));
    }
    if (roll < 60) {
        std::string b = pick_binder(rng);
        scope.push_back(b);
        return mk_abs(b, random_term(rng, budget - 1, std::move(scope), closed));
    }
    std::uniform_int_distribution<std::size_t> split(1, budget - 1);
    std::size_t lb = split(rng);
    TermPtr l = random_term(rng, lb, scope, closed);
    TermPtr r = random_term(rng, budget - lb, std::move(scope), closed);
    return mk_app(std::move(l), std::move(r));
}

namespace {

Program random_program_once(std::mt19937_64& rng, std::size_t max_size,
                            bool closed) {
    std::uniform_int_distribution<int> pct(0, 99);
    std::uniform_int_distribution<std::size_t> n_entries(0, 4);

    std::size_t entries = n_entries(rng);
    // Budget: each entry costs 1 plus its content.
    std::size_t content_budget =
        max_size > 2 * entries + 2 ? (max_size - entries) / (entries + 1) : 2;

    // ES binders, innermost (leftmost) to outermost. Entry j may refer to
    // binders of entries > j, so contents draw from the names to their right.
    std::vector<std::string> binders;
    for (std::size_t j = 0; j < entries; ++j)
        binders.push_back("e" + std::to_string(j));

    Environment env;
    for (std::size_t j = 0; j < entries; ++j) {
        std::vector<std::string> scope(binders.begin() + j + 1, binders.end());
        TermPtr content;
        int roll = pct(rng);
        if (roll < 30) {
            // value content: feeds exponential steps (useful or useless)
            std::string b = pick_binder(rng);
            std::vector<std::string> inner = scope;
            inner.push_back(b);
            content = mk_abs(b, random_term(rng, content_budget > 1 ? content_budget - 1 : 1,
                                            std::move(inner), closed));
        } else if (roll < 50 && !scope.empty()) {
            // bare variable content: builds the chains behind hereditary jumps
            content = mk_var(pick(rng, scope));
        } else {
            content = random_term(rng, content_budget, scope, closed);
        }
        env.push_back({binders[j], std::move(content)});
    }

    // The head sees every ES binder. Bias towards applying a bound variable,
    // so that substitutions are frequently useful.
    TermPtr head;
    std::vector<std::string> head_scope = binders;
    if (!binders.empty() && pct(rng) < 55) {
        head = mk_var(pick(rng, head_scope));
        std::uniform_int_distribution<std::size_t> n_args(1, 2);
        std::size_t args = n_args(rng);
        for (std::size_t k = 0; k < args; ++k)
            head = mk_app(head, random_term(rng, content_budget, head_scope, closed));
    } else {
        head = random_term(rng, content_budget + 1, head_scope, closed);
    }

    Program p{std::move(head), std::move(env)};
    NameSupply supply;
    supply.reserve_all(all_names(p));
    rename_apart(p, supply);
    return p;
}

}  // namespace

Program random_program(std::mt19937_64& rng, std::size_t max_size, bool closed) {
    // The term generator treats its budget as a guide, not a bound; shrink
    // the target until the generated program actually fits.
    std::size_t target = max_size;
    for (int attempt = 0; attempt < 100; ++attempt) {
        Program p = random_program_once(rng, target, closed);
        if (program_size(p) <= max_size) return p;
        if (target > 4) target -= target / 4;
    }
    return Program{closed ? mk_abs("x", mk_var("x")) : mk_var("a"), {}};
}

std::vector<Program> generate_corpus(const CorpusConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<Program> out;
    out.reserve(cfg.count);
    for (std::size_t i = 0; i < cfg.count; ++i) {
        bool closed = i % 5 == 4;
        out.push_back(random_program(rng, cfg.max_size, closed));
    }
    return out;
}

}  // namespace cbneed
