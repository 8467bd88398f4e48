#include <doctest.h>

#include "cbneed/gen.hpp"
#include "cbneed/suites.hpp"

using namespace cbneed;

TEST_CASE("corpus generation is seeded and bounded") {
    CorpusConfig cfg;
    cfg.count = 40;
    cfg.max_size = 30;
    cfg.seed = 11;
    auto a = generate_corpus(cfg);
    auto b = generate_corpus(cfg);
    REQUIRE(a.size() == 40);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(alpha_eq(a[i], b[i]));
        CHECK(program_size(a[i]) <= 30);
    }
}

TEST_CASE("all property suites pass on a small corpus") {
    CorpusConfig cfg;
    cfg.count = 60;
    cfg.max_size = 35;
    cfg.seed = 3;
    auto corpus = generate_corpus(cfg);
    auto results = run_suites(corpus);
    REQUIRE(results.size() == kAllSuites.size());
    for (const auto& r : results) {
        INFO(r.name, ": ", r.first_counterexample);
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
}

TEST_CASE("suite selection") {
    CorpusConfig cfg;
    cfg.count = 10;
    cfg.max_size = 25;
    cfg.seed = 5;
    auto corpus = generate_corpus(cfg);
    auto one = run_suites(corpus, {"coverage"});
    REQUIRE(one.size() == 1);
    CHECK(one[0].name == "coverage");
}

TEST_CASE("the corpus exercises useful exponential steps") {
    CorpusConfig cfg;
    auto corpus = generate_corpus(cfg);
    CHECK(count_ue_steps(corpus) >= 100);
}
