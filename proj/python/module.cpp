#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbneed/bench.hpp"
#include "cbneed/engine.hpp"
#include "cbneed/gen.hpp"
#include "cbneed/normalform.hpp"
#include "cbneed/suites.hpp"
#include "cbneed/syntax.hpp"
#include "cbneed/varsets.hpp"

namespace py = pybind11;
using namespace cbneed;

namespace {

Strategy strategy_of(const std::string& name) {
    auto s = parse_strategy(name);
    if (!s) throw py::value_error("unknown strategy: " + name);
    return *s;
}

std::vector<std::string> to_list(const VarSet& s) {
    return {s.begin(), s.end()};
}

py::dict run_py(const std::string& text, const std::string& strategy,
                std::size_t fuel, bool trace) {
    Program p = parse_program(text).program;
    RunReport rep = run(p, strategy_of(strategy), fuel, trace);
    py::dict counts;
    for (int k = 0; k < 6; ++k) {
        StepKind kind = static_cast<StepKind>(k);
        counts[step_kind_tag(kind)] = rep.counts[k];
    }
    py::dict out;
    out["initial"] = print_program(rep.initial);
    out["final"] = print_program(rep.final_program);
    out["steps"] = rep.steps_total;
    out["counts"] = counts;
    out["fuel_exhausted"] = rep.fuel_exhausted;
    out["stuck"] = rep.stuck;
    if (rep.stuck) out["stuck_var"] = rep.stuck_var;
    out["initial_size"] = rep.initial_size;
    out["final_size"] = rep.final_size;
    if (trace) {
        py::list steps;
        for (const auto& st : rep.trace) {
            py::dict d;
            d["kind"] = step_kind_tag(st.kind);
            d["position"] = st.position;
            d["program"] = print_program(st.after);
            steps.append(std::move(d));
        }
        out["trace"] = std::move(steps);
    }
    return out;
}

py::dict check_py(const std::string& text) {
    Program p = parse_program(text).program;
    py::dict out;
    out["onorm"] = open_normal_class_name(onorm(p));
    UsefulNormalForm uf = ufnorm(p);
    out["ufnorm"] = useful_normal_class_name(uf.cls);
    if (uf.cls == UsefulNormalClass::GenVar) out["gen_var"] = uf.gen_var;
    out["nv"] = to_list(nv(p));
    out["anv"] = to_list(anv(p));
    out["unv"] = to_list(unv(p));
    out["useless"] = to_list(useless(p));
    return out;
}

std::string unfold_py(const std::string& text) {
    Program p = parse_program(text).program;
    auto u = unfold(p);
    if (!u) throw py::value_error("unfolding exceeds the node cap");
    return print_term(*u);
}

py::dict family_point_py(std::size_t n) {
    FamilyPoint p = run_family_point(n);
    py::dict out;
    out["n"] = p.n;
    out["beta_steps"] = p.beta_steps;
    out["beta_matches"] = p.beta_matches;
    out["unfold_matches"] = p.unfold_matches;
    out["um"] = p.useful_counts[static_cast<std::size_t>(StepKind::UsefulMult)];
    out["ue"] = p.useful_counts[static_cast<std::size_t>(StepKind::UsefulExp)];
    out["final_size"] = p.final_program_size;
    out["unfold_size"] = p.unfold_size;
    out["unfold_capped"] = p.unfold_capped;
    return out;
}

py::list oracle_py(std::size_t count, std::size_t max_size, std::uint64_t seed,
                   const std::vector<std::string>& suites) {
    CorpusConfig cfg;
    cfg.count = count;
    cfg.max_size = max_size;
    cfg.seed = seed;
    auto corpus = generate_corpus(cfg);
    py::list out;
    for (const auto& r : run_suites(corpus, suites)) {
        py::dict d;
        d["name"] = r.name;
        d["checked"] = r.checked;
        d["failures"] = r.failures;
        d["passed"] = r.passed();
        if (!r.passed()) d["counterexample"] = r.first_counterexample;
        out.append(std::move(d));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_cbneed, m) {
    m.doc() = "Call-by-need evaluation workbench: closed, open, and useful "
              "open strategies over programs with explicit substitutions";

    py::register_exception<ParseError>(m, "ProgramParseError");

    m.def("parse", [](const std::string& text) {
        return print_program(parse_program(text).program);
    }, py::arg("text"), "Parse a program and return its canonical printing");

    m.def("run", &run_py, py::arg("text"), py::arg("strategy") = "useful",
          py::arg("fuel") = kDefaultFuel, py::arg("trace") = false,
          "Evaluate a program under the chosen strategy");

    m.def("check", &check_py, py::arg("text"),
          "Normal-form classes and variable sets of a program");

    m.def("unfold", &unfold_py, py::arg("text"),
          "Substitute the environment back into the head");

    m.def("size_explosion_point", &family_point_py, py::arg("n"),
          "Run one member of the size-explosion family");

    m.def("oracle", &oracle_py, py::arg("count") = 100, py::arg("max_size") = 40,
          py::arg("seed") = 7, py::arg("suites") = std::vector<std::string>{},
          "Run the property suites over a random corpus");
}
