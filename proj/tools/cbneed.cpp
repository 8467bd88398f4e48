#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbneed/bench.hpp"
#include "cbneed/engine.hpp"
#include "cbneed/gen.hpp"
#include "cbneed/normalform.hpp"
#include "cbneed/oracle.hpp"
#include "cbneed/suites.hpp"
#include "cbneed/syntax.hpp"
#include "cbneed/varsets.hpp"

using json = nlohmann::json;
using namespace cbneed;

namespace {

constexpr int kExitNormal = 0;
constexpr int kExitFailure = 1;
constexpr int kExitFuel = 2;
constexpr int kExitParse = 3;
constexpr int kExitStuck = 4;

std::size_t env_or(const char* name, std::size_t fallback) {
    if (const char* v = std::getenv(name)) {
        try {
            return static_cast<std::size_t>(std::stoull(v));
        } catch (...) {
        }
    }
    return fallback;
}

// A program argument is a literal or @file.
std::string read_program_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot open " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string show_counts(const RunReport& rep) {
    StepKind kinds[2];
    switch (rep.strategy) {
        case Strategy::Closed:
            kinds[0] = StepKind::ClosedMult;
            kinds[1] = StepKind::ClosedExp;
            break;
        case Strategy::Open:
            kinds[0] = StepKind::OpenMult;
            kinds[1] = StepKind::OpenExp;
            break;
        default:
            kinds[0] = StepKind::UsefulMult;
            kinds[1] = StepKind::UsefulExp;
            break;
    }
    std::string out = "{";
    for (StepKind k : kinds) {
        if (out.size() > 1) out += ", ";
        out += std::string(step_kind_tag(k)) + ":" +
               std::to_string(rep.counts[static_cast<std::size_t>(k)]);
    }
    return out + "}";
}

std::string final_class(const RunReport& rep) {
    switch (rep.strategy) {
        case Strategy::Closed:
            if (rep.stuck) return "Stuck(" + rep.stuck_var + ")";
            return rep.fuel_exhausted ? "NotNormal" : "Answer";
        case Strategy::Open:
            return open_normal_class_name(onorm(rep.final_program));
        default: {
            UsefulNormalForm nf = ufnorm(rep.final_program);
            if (nf.cls == UsefulNormalClass::GenVar)
                return "GenVar(" + nf.gen_var + ")";
            return useful_normal_class_name(nf.cls);
        }
    }
}

void write_trace(const RunReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    std::size_t i = 0;
    for (const auto& st : rep.trace) {
        json line = {
            {"i", i++},
            {"kind", step_kind_tag(st.kind)},
            {"pos", st.position},
            {"prog", print_program(st.after)},
            {"size", program_size(st.after)},
        };
        out << line.dump() << "\n";
    }
}

int cmd_run(const std::string& prog_arg, const std::string& strategy,
            std::size_t fuel, const std::string& trace_path,
            const std::string& format) {
    ParsedProgram parsed;
    try {
        parsed = parse_program(read_program_arg(prog_arg));
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.pos << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    Strategy strat = *parse_strategy(strategy);
    RunReport rep = run(parsed.program, strat, fuel, !trace_path.empty());
    if (!trace_path.empty()) write_trace(rep, trace_path);

    if (format == "json") {
        json j = {
            {"initial", print_program(rep.initial)},
            {"final", print_program(rep.final_program)},
            {"class", final_class(rep)},
            {"steps", rep.steps_total},
            {"fuel_exhausted", rep.fuel_exhausted},
            {"initial_size", rep.initial_size},
            {"final_size", rep.final_size},
        };
        json counts = json::object();
        for (int k = 0; k < 6; ++k)
            counts[step_kind_tag(static_cast<StepKind>(k))] = rep.counts[k];
        j["counts"] = counts;
        if (rep.stuck) j["stuck_var"] = rep.stuck_var;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [from, to] : parsed.renamed)
            std::cerr << "warning: renamed binder " << from << " to " << to << "\n";
        std::cout << "initial: " << print_program(rep.initial) << "\n";
        std::cout << "final: " << print_program(rep.final_program) << "\n";
        std::cout << "class: " << final_class(rep) << "\n";
        std::cout << "counts: " << show_counts(rep) << "\n";
        std::cout << "steps: " << rep.steps_total << "\n";
        std::cout << "size: " << rep.initial_size << " -> " << rep.final_size
                  << "\n";
    }

    if (rep.stuck) return kExitStuck;
    if (rep.fuel_exhausted) return kExitFuel;
    return kExitNormal;
}

int cmd_check(const std::string& prog_arg, const std::string& predicate) {
    ParsedProgram parsed;
    try {
        parsed = parse_program(read_program_arg(prog_arg));
    } catch (const ParseError& e) {
        std::cerr << "parse error at " << e.pos << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    const Program& p = parsed.program;
    if (predicate == "onorm") {
        std::cout << open_normal_class_name(onorm(p)) << "\n";
    } else if (predicate == "ufnorm") {
        UsefulNormalForm nf = ufnorm(p);
        if (nf.cls == UsefulNormalClass::GenVar)
            std::cout << "GenVar(" << nf.gen_var << ")\n";
        else
            std::cout << useful_normal_class_name(nf.cls) << "\n";
    } else {  // varsets
        VarTriple v = var_triple(p);
        VarSet ul = useless(p);
        auto show = [](const VarSet& s) {
            std::string out = "{";
            for (const auto& x : s) {
                if (out.size() > 1) out += ",";
                out += x;
            }
            return out + "}";
        };
        std::cout << "nv=" << show(v.needed) << " anv=" << show(v.applied)
                  << " unv=" << show(v.unapplied) << " useless=" << show(ul)
                  << "\n";
    }
    return kExitNormal;
}

int cmd_oracle(std::size_t count, std::size_t max_size, std::uint64_t seed,
               const std::vector<std::string>& suites, std::size_t fuel) {
    CorpusConfig cfg{count, max_size, seed};
    std::vector<Program> corpus = generate_corpus(cfg);

    bool all_pass = true;
    for (const auto& r : run_suites(corpus, suites, fuel)) {
        if (r.passed()) {
            std::cout << "suite " << r.name << ": pass (" << r.checked
                      << " checks)\n";
        } else {
            all_pass = false;
            std::cout << "suite " << r.name << ": FAIL (" << r.failures << "/"
                      << r.checked << " checks)\n";
            std::cout << "  first counterexample: " << r.first_counterexample
                      << "\n";
        }
    }
    std::cout << "ue steps across corpus: " << count_ue_steps(corpus, fuel)
              << "\n";
    if (all_pass)
        std::cout << "all suites passed (" << corpus.size() << " programs)\n";
    return all_pass ? kExitNormal : kExitFailure;
}

int cmd_bench(std::size_t max_n, const std::string& format) {
    std::vector<FamilyPoint> pts = run_family(max_n);
    auto um = [](const FamilyPoint& p) {
        return p.useful_counts[static_cast<std::size_t>(StepKind::UsefulMult)];
    };
    auto ue = [](const FamilyPoint& p) {
        return p.useful_counts[static_cast<std::size_t>(StepKind::UsefulExp)];
    };
    if (format == "csv") {
        std::cout << "n,beta_steps,um,ue,final_size,unfold_size\n";
        for (const auto& p : pts) {
            std::cout << p.n << "," << p.beta_steps << "," << um(p) << ","
                      << ue(p) << "," << p.final_program_size << ",";
            if (p.unfold_capped)
                std::cout << "capped";
            else
                std::cout << p.unfold_size;
            std::cout << "\n";
        }
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& p : pts) {
            json row = {
                {"n", p.n},
                {"beta_steps", p.beta_steps},
                {"um", um(p)},
                {"ue", ue(p)},
                {"final_size", p.final_program_size},
                {"t_n_size", p.t_n_size},
                {"u_n_size", p.u_n_size},
                {"beta_matches", p.beta_matches},
                {"unfold_matches", p.unfold_matches},
            };
            if (p.unfold_capped)
                row["unfold_size"] = "capped";
            else
                row["unfold_size"] = p.unfold_size;
            arr.push_back(row);
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& p : pts) {
            std::cout << "n=" << p.n << " beta_steps=" << p.beta_steps
                      << " um=" << um(p) << " ue=" << ue(p)
                      << " final_size=" << p.final_program_size << " unfold_size=";
            if (p.unfold_capped)
                std::cout << "capped";
            else
                std::cout << p.unfold_size;
            std::cout << (p.beta_matches && p.unfold_matches ? "" : " MISMATCH")
                      << "\n";
        }
    }
    bool ok = true;
    for (const auto& p : pts)
        ok = ok && p.beta_matches && (p.unfold_matches || p.unfold_capped);
    return ok ? kExitNormal : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Workbench for call-by-need calculi with sharing"};
    app.require_subcommand(1);

    std::size_t fuel = env_or("CBNEED_FUEL", kDefaultFuel);
    std::size_t oracle_fuel = env_or("CBNEED_ORACLE_FUEL", 200);

    // run
    auto* run_cmd = app.add_subcommand("run", "Evaluate a program");
    std::string run_prog, run_strategy, run_trace, run_format = "text";
    run_cmd->add_option("program", run_prog, "program text or @file")->required();
    run_cmd->add_option("--strategy", run_strategy, "closed|open|useful")
        ->required()
        ->check(CLI::IsMember({"closed", "open", "useful"}));
    run_cmd->add_option("--fuel", fuel, "step budget");
    run_cmd->add_option("--trace", run_trace, "write a JSON-lines trace here");
    run_cmd->add_option("--format", run_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // check
    auto* check_cmd = app.add_subcommand("check", "Classify a program");
    std::string check_prog, check_pred;
    check_cmd->add_option("program", check_prog, "program text or @file")->required();
    check_cmd->add_option("--predicate", check_pred, "onorm|ufnorm|varsets")
        ->required()
        ->check(CLI::IsMember({"onorm", "ufnorm", "varsets"}));

    // oracle
    auto* oracle_cmd =
        app.add_subcommand("oracle", "Run the invariant suites on a seeded corpus");
    std::size_t o_count = 500, o_max_size = 40;
    std::uint64_t o_seed = 7;
    std::vector<std::string> o_suites;
    oracle_cmd->add_option("--count", o_count, "corpus size");
    oracle_cmd->add_option("--max-size", o_max_size, "max program node count");
    oracle_cmd->add_option("--seed", o_seed, "corpus seed");
    oracle_cmd->add_option("--suite", o_suites, "restrict to specific suites")
        ->check(CLI::IsMember(kAllSuites));
    oracle_cmd->add_option("--fuel", oracle_fuel, "reduct exploration budget");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Benchmark families");
    auto* se_cmd =
        bench_cmd->add_subcommand("size-explosion", "Shared-vs-unfolded size gap");
    std::size_t b_max_n = kDefaultFamilyMax;
    std::string b_format = "text";
    se_cmd->add_option("--max-n", b_max_n, "largest family index");
    se_cmd->add_option("--format", b_format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    bench_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) return cmd_run(run_prog, run_strategy, fuel, run_trace, run_format);
        if (*check_cmd) return cmd_check(check_prog, check_pred);
        if (*oracle_cmd)
            return cmd_oracle(o_count, o_max_size, o_seed, o_suites, oracle_fuel);
        if (*bench_cmd) return cmd_bench(b_max_n, b_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitNormal;
}
