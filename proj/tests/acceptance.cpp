// Acceptance gate: one pass/fail line per criterion. Usage:
//   acceptance <path-to-cbneed-cli> <golden-dir>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cbneed/bench.hpp"
#include "cbneed/engine.hpp"
#include "cbneed/gen.hpp"
#include "cbneed/suites.hpp"

using namespace cbneed;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("criterion %d (%s): %s%s%s\n", idx, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    const char* file;
    const char* strategy;
    const char* program;
    int expected_exit;
};

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <cli> <golden-dir>\n", argv[0]);
        return 2;
    }
    const std::string cli = argv[1];
    const std::string golden_dir = argv[2];

    using clock = std::chrono::steady_clock;

    // 1. Size explosion: shared evaluation linear, unfolding exponential.
    {
        auto start = clock::now();
        bool ok = true;
        std::string detail;
        for (std::size_t n = 1; n <= 12 && ok; ++n) {
            FamilyPoint p = run_family_point(n);
            std::size_t um = p.useful_counts[static_cast<std::size_t>(StepKind::UsefulMult)];
            std::size_t ue = p.useful_counts[static_cast<std::size_t>(StepKind::UsefulExp)];
            std::size_t om = p.open_counts[static_cast<std::size_t>(StepKind::OpenMult)];
            std::size_t oe = p.open_counts[static_cast<std::size_t>(StepKind::OpenExp)];
            ok = p.beta_matches && p.beta_steps == n && p.unfold_matches &&
                 !p.unfold_capped && um == n && ue == 0 && om == n && oe == 0 &&
                 p.unfold_size >= (std::size_t{1} << n) &&
                 p.final_program_size <= 30 * n + 30;
            if (!ok) detail = "first failing n = " + std::to_string(n);
        }
        double secs = std::chrono::duration<double>(clock::now() - start).count();
        if (ok && secs >= 10.0) {
            ok = false;
            detail = "runtime " + std::to_string(secs) + "s";
        }
        report(1, "size explosion n=1..12", ok, detail);
    }

    // 2-8. Property suites over the seeded 500-program corpus.
    {
        CorpusConfig cfg;  // count 500, max_size 40, seed 7
        auto corpus = generate_corpus(cfg);

        auto start = clock::now();
        auto results = run_suites(corpus);
        double secs = std::chrono::duration<double>(clock::now() - start).count();

        auto find = [&](const char* name) -> const SuiteResult* {
            for (const auto& r : results)
                if (r.name == name) return &r;
            return nullptr;
        };
        auto suite_line = [&](int idx, const char* label, const char* suite,
                              bool extra_ok = true, const std::string& extra = "") {
            const SuiteResult* r = find(suite);
            bool ok = r && r->passed() && extra_ok;
            std::string detail = extra;
            if (r && !r->passed()) detail = r->first_counterexample;
            report(idx, label, ok, detail);
        };

        bool time_ok = secs < 60.0;
        suite_line(2, "determinism vs brute-force oracle", "determinism", time_ok,
                   time_ok ? "" : "runtime " + std::to_string(secs) + "s");
        suite_line(3, "normal-form characterization", "characterization");
        suite_line(4, "coverage of needed variables", "coverage");
        suite_line(5, "exponential contexts are multiplicative", "expmult");

        std::size_t ue_total = count_ue_steps(corpus);
        suite_line(6, "usefulness counter k", "usefulness", ue_total >= 100,
                   "ue steps: " + std::to_string(ue_total));
        suite_line(7, "normal-class disjointness and unfolding", "disjointness");
        suite_line(8, "subterm property of substituted values", "subterm");
    }

    // 9. Golden traces, byte-compared against the CLI output.
    {
        const std::vector<GoldenCase> cases = {
            {"open-inert-argument.jsonl", "open", "x ((\\z.z) (\\w.w)) [y <- t]", 0},
            {"useful-hereditary-chain.jsonl", "useful", "x y [x <- z][z <- \\w.w]", 0},
            {"useful-applied-chain.jsonl", "useful", "x t [x <- y][y <- \\w.w]", 0},
            {"closed-splice.jsonl", "closed", "x t [x <- (\\y.u) s t'][z <- u']", 4},
            {"useful-useless-skip.jsonl", "useful", "x y [y <- \\z.z]", 0},
            {"open-useless-fires.jsonl", "open", "x y [y <- \\z.z]", 0},
        };
        bool ok = true;
        std::string detail;
        for (const auto& c : cases) {
            std::string tmp = std::string("acceptance-trace-") + c.file;
            std::string cmd = cli + " run --strategy " + c.strategy + " --trace " +
                              tmp + " \"" + c.program + "\" > /dev/null";
            int rc = std::system(cmd.c_str());
            int exit_code = WEXITSTATUS(rc);
            std::string got = read_file(tmp);
            std::string want = read_file(golden_dir + "/" + c.file);
            std::remove(tmp.c_str());
            if (exit_code != c.expected_exit || got != want) {
                ok = false;
                detail = c.file;
                break;
            }
        }
        report(9, "golden traces byte-stable", ok, detail);
    }

    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
