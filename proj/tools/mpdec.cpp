// mpdec: multiple-prior decision criteria over exact rationals.
// Subcommands evaluate acts, compare and order them under a named
// preference spec, complete a hope-and-prepare spec, aggregate expert
// panels, audit mechanisms, and run the axiom harness. All output is
// deterministic for fixed inputs and seeds.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "multiprior/aggregation.hpp"
#include "multiprior/axioms.hpp"
#include "multiprior/completion.hpp"
#include "multiprior/mechanism.hpp"
#include "multiprior/problem.hpp"

namespace {

using nlohmann::json;
using namespace multiprior;

constexpr int kExitError = 1;
constexpr int kExitViolated = 10;
constexpr int kExitInconclusive = 11;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("MPDEC_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

json profile_json(const AffineUtility& u, const Act& act) {
    json out = json::array();
    for (const auto& v : apply_utility(u, act)) out.push_back(to_string(v));
    return out;
}

json generators_json(const CredalSet& k) {
    json out = json::array();
    for (const auto& g : k.generators) {
        json row = json::array();
        for (const auto& m : g.mass) row.push_back(to_string(m));
        out.push_back(std::move(row));
    }
    return out;
}

json comparison_details(const PreferenceSpec& spec, const Act& a, const Act& b) {
    json details;
    const AffineUtility& u = utility_of(spec);
    const UtilityProfile pa = apply_utility(u, a);
    const UtilityProfile pb = apply_utility(u, b);
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HopeAndPrepare> || std::is_same_v<T, Twofold>) {
                details["worst_case"] = {{"first", to_string(min_expected(s.worst_case, pa))},
                                         {"second", to_string(min_expected(s.worst_case, pb))}};
                details["best_case"] = {{"first", to_string(max_expected(s.best_case, pa))},
                                        {"second", to_string(max_expected(s.best_case, pb))}};
            } else if constexpr (std::is_same_v<T, Bewley>) {
                details["range"] = {
                    {"first",
                     {to_string(min_expected(s.scenarios, pa)),
                      to_string(max_expected(s.scenarios, pa))}},
                    {"second",
                     {to_string(min_expected(s.scenarios, pb)),
                      to_string(max_expected(s.scenarios, pb))}}};
            } else if constexpr (std::is_same_v<T, Nr>) {
                json first = json::array(), second = json::array();
                for (const auto& k : s.scenario_class) {
                    first.push_back(to_string(min_expected(k, pa)));
                    second.push_back(to_string(min_expected(k, pb)));
                }
                details["worst_cases"] = {{"first", std::move(first)},
                                          {"second", std::move(second)}};
            } else {
                details["value"] = {{"first", to_string(alpha_meu_value(s, a))},
                                    {"second", to_string(alpha_meu_value(s, b))}};
            }
        },
        spec);
    return details;
}

json axiom_report_json(const AffineUtility& u, const AxiomReport& report) {
    json out{{"axiom", report.axiom},
             {"verdict", to_string(report.verdict)},
             {"trials", report.trials},
             {"seed", report.seed}};
    if (report.witness) {
        json w;
        w["note"] = report.witness->note;
        json acts = json::array();
        for (const auto& act : report.witness->acts) acts.push_back(profile_json(u, act));
        w["act_profiles"] = std::move(acts);
        json constants = json::array();
        for (const auto& c : report.witness->constants) constants.push_back(to_string(c));
        w["constants"] = std::move(constants);
        json weights = json::array();
        for (const auto& a : report.witness->weights) weights.push_back(to_string(a));
        w["weights"] = std::move(weights);
        out["witness"] = std::move(w);
    }
    return out;
}

void emit(const json& out) { std::cout << out.dump(2) << "\n"; }

struct Args {
    std::string problem, spec, panel, mech, values_file, dot_file, mode;
    std::vector<std::string> acts;
    std::vector<int> axioms;
    std::string alpha = "1/2";
    std::uint64_t trials = 1000;
    std::uint64_t budget = 1000;
    std::uint64_t seed = default_seed();
    bool as_json = false;
};

int run_eval(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const PreferenceSpec spec = file.spec(args.spec);
    const Act& act = file.act(args.acts.at(0));
    const ConstantFence fence = constant_fence(spec, act);
    emit(json{{"spec", args.spec},
              {"act", args.acts.at(0)},
              {"min", to_string(fence.lo)},
              {"max", to_string(fence.hi)}});
    return 0;
}

int run_compare(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const PreferenceSpec spec = file.spec(args.spec);
    const Act& a = file.act(args.acts.at(0));
    const Act& b = file.act(args.acts.at(1));
    emit(json{{"spec", args.spec},
              {"first", args.acts.at(0)},
              {"second", args.acts.at(1)},
              {"verdict", to_string(compare(spec, a, b))},
              {"details", comparison_details(spec, a, b)}});
    return 0;
}

int run_order(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const PreferenceSpec spec = file.spec(args.spec);
    std::vector<Act> acts;
    for (const auto& name : args.acts) acts.push_back(file.act(name));
    const ActOrder full = partial_order(spec, acts);
    const ActOrder reduced = transitive_reduction(full);
    const auto edges_json = [&](const ActOrder& order) {
        json out = json::array();
        auto edges = order.edges;
        std::sort(edges.begin(), edges.end());
        for (const auto& [i, j] : edges)
            out.push_back(json{{"above", args.acts[i]}, {"below", args.acts[j]}});
        return out;
    };
    const std::string dot = emit_dot(reduced, args.acts);
    json out{{"spec", args.spec},
             {"acts", args.acts},
             {"edges", edges_json(full)},
             {"reduced_edges", edges_json(reduced)}};
    if (args.dot_file.empty()) {
        out["dot"] = dot;
    } else {
        std::ofstream f(args.dot_file);
        if (!f.good()) throw std::invalid_argument("cannot write '" + args.dot_file + "'");
        f << dot;
    }
    emit(out);
    return 0;
}

int run_complete(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const auto it = file.spec_decls.find(args.spec);
    if (it == file.spec_decls.end())
        throw std::invalid_argument("unknown spec '" + args.spec + "'");
    if (it->second.type != "hope_and_prepare")
        throw std::invalid_argument("complete requires a hope_and_prepare spec");
    const auto hp = std::get<HopeAndPrepare>(file.spec(args.spec));
    const AlphaMeu ext = complete_with_alpha(hp, parse_rational(args.alpha));
    const auto gaps = verify_extension(ext, hp, args.trials, args.seed);
    emit(json{{"spec", args.spec},
              {"completion",
               {{"type", "alpha_meu"},
                {"utility", it->second.utility},
                {"worst_case", it->second.worst_case},
                {"best_case", it->second.best_case},
                {"alpha", to_string(ext.alpha)}}},
              {"extension_witnesses", gaps.size()}});
    return 0;
}

int run_recover(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const auto it = file.spec_decls.find(args.spec);
    if (it == file.spec_decls.end())
        throw std::invalid_argument("unknown spec '" + args.spec + "'");
    if (it->second.type != "hope_and_prepare")
        throw std::invalid_argument("recover requires a hope_and_prepare spec");
    const auto hp = std::get<HopeAndPrepare>(file.spec(args.spec));
    json values;
    try {
        values = json::parse(read_file(args.values_file));
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("values file: ") + e.what());
    }
    if (!values.is_object())
        throw std::invalid_argument("values file must map act names to rationals");
    std::vector<std::pair<Act, Rational>> probes;
    for (const auto& [name, value] : values.items()) {
        if (!value.is_string())
            throw std::invalid_argument("values." + name + ": rationals must be strings");
        probes.emplace_back(file.act(name), parse_rational(value.get<std::string>()));
    }
    const AlphaRecovery recovery = recover_alpha(hp, probes);
    json out{{"spec", args.spec}, {"unique", recovery.unique}};
    out["alpha"] = recovery.unique ? json(to_string(recovery.alpha)) : json(nullptr);
    emit(out);
    return 0;
}

int run_aggregate(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const ExpertPanel panel = file.panel(args.panel);
    if (args.mode != "hp" && args.mode != "bewley")
        throw std::invalid_argument("mode must be 'bewley' or 'hp'");
    const PlannerMode mode =
        args.mode == "hp" ? PlannerMode::ConcordantHp : PlannerMode::Bewley;
    const PreferenceSpec planner = aggregate(panel, mode);
    const auto pareto = audit_pareto(panel, planner, args.trials, args.seed);
    const auto caution = audit_caution(panel, planner, args.trials, args.seed);

    json planner_json;
    if (mode == PlannerMode::Bewley) {
        const auto& bw = std::get<Bewley>(planner);
        planner_json = {{"type", "bewley"}, {"scenarios", generators_json(bw.scenarios)}};
    } else {
        const auto& hp = std::get<HopeAndPrepare>(planner);
        planner_json = {{"type", "hope_and_prepare"},
                        {"scenarios", generators_json(hp.worst_case)}};
    }
    json audits;
    audits["pareto"] = {{"certified", pareto.certified},
                        {"outcome", to_string(pareto.outcome)},
                        {"witnesses", pareto.witnesses.size()}};
    audits["caution"] = {{"certified", caution.certified},
                         {"outcome", to_string(caution.outcome)},
                         {"witnesses", caution.witnesses.size()}};
    emit(json{{"panel", args.panel}, {"planner", planner_json}, {"audits", audits}});
    return 0;
}

int run_audit_mechanism(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const DirectMechanism& mech = file.mechanism(args.mech);
    const ManipulationAudit audit = audit_obvious_manipulability(mech);
    if (args.as_json) {
        json entries = json::array();
        for (const auto& e : audit.entries)
            entries.push_back(json{{"agent", mech.agents[e.agent]},
                                   {"true_type", mech.type_spaces[e.agent][e.true_type]},
                                   {"misreport", mech.type_spaces[e.agent][e.misreport]},
                                   {"min_truth", to_string(e.min_truth)},
                                   {"max_truth", to_string(e.max_truth)},
                                   {"min_misreport", to_string(e.min_misreport)},
                                   {"max_misreport", to_string(e.max_misreport)},
                                   {"worst_case_improves", e.worst_case_improves},
                                   {"best_case_improves", e.best_case_improves}});
        emit(json{{"mechanism", args.mech},
                  {"obviously_manipulable", audit.obviously_manipulable},
                  {"state_orders", audit.state_orders},
                  {"entries", entries}});
        return 0;
    }
    for (std::size_t i = 0; i < mech.agents.size(); ++i)
        std::cout << "# states(" << mech.agents[i] << ") = " << audit.state_orders[i] << "\n";
    std::cout << "agent,true_type,misreport,min_truth,max_truth,min_misreport,max_misreport,"
                 "worst_case_improves,best_case_improves\n";
    for (const auto& e : audit.entries)
        std::cout << mech.agents[e.agent] << "," << mech.type_spaces[e.agent][e.true_type] << ","
                  << mech.type_spaces[e.agent][e.misreport] << "," << to_string(e.min_truth)
                  << "," << to_string(e.max_truth) << "," << to_string(e.min_misreport) << ","
                  << to_string(e.max_misreport) << "," << (e.worst_case_improves ? "yes" : "no")
                  << "," << (e.best_case_improves ? "yes" : "no") << "\n";
    return 0;
}

int run_check_axioms(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const PreferenceSpec spec = file.spec(args.spec);
    std::vector<int> axioms = args.axioms;
    if (axioms.empty())
        for (int a = 1; a <= 9; ++a) axioms.push_back(a);
    json reports = json::array();
    bool violated = false, inconclusive = false;
    for (const int axiom : axioms) {
        const AxiomReport report = check_axiom(spec, axiom, args.budget, args.seed);
        violated |= report.verdict == AxiomVerdict::Violated;
        inconclusive |= report.verdict == AxiomVerdict::Inconclusive;
        reports.push_back(axiom_report_json(utility_of(spec), report));
    }
    emit(json{{"spec", args.spec}, {"reports", reports}});
    if (violated) return kExitViolated;
    if (inconclusive) return kExitInconclusive;
    return 0;
}

int run_alpha_set(const Args& args) {
    const ProblemFile file = parse_problem(read_file(args.problem));
    const PreferenceSpec spec = file.spec(args.spec);
    const AlphaIntervalSet set =
        mixture_preference_alpha_set(spec, file.act(args.acts.at(0)), file.act(args.acts.at(1)),
                                     file.act(args.acts.at(2)));
    json intervals = json::array();
    for (const auto& iv : set)
        intervals.push_back(json{{"lo", to_string(iv.lo)},
                                 {"hi", to_string(iv.hi)},
                                 {"lo_closed", iv.lo_closed},
                                 {"hi_closed", iv.hi_closed}});
    emit(json{{"spec", args.spec},
              {"mix_first", args.acts.at(0)},
              {"mix_second", args.acts.at(1)},
              {"benchmark", args.acts.at(2)},
              {"intervals", intervals}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple-prior decision criteria over exact rationals"};
    app.require_subcommand(1);
    Args args;

    const auto add_problem = [&](CLI::App* cmd) {
        cmd->add_option("problem", args.problem, "problem file (JSON)")->required();
    };
    const auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("spec", args.spec, "spec name in the problem file")->required();
    };

    auto* eval = app.add_subcommand("eval", "worst/best expected utility of an act");
    add_problem(eval);
    add_spec(eval);
    eval->add_option("act", args.acts, "act name")->expected(1);

    auto* cmp = app.add_subcommand("compare", "compare two acts under a spec");
    add_problem(cmp);
    add_spec(cmp);
    cmp->add_option("acts", args.acts, "two act names")->expected(2);

    auto* order = app.add_subcommand("order", "materialize the strict relation over acts");
    add_problem(order);
    add_spec(order);
    order->add_option("acts", args.acts, "act names")->expected(-2);
    order->add_option("--dot", args.dot_file, "write the transitive reduction to this DOT file");

    auto* complete = app.add_subcommand("complete", "alpha-weighted completion of a spec");
    add_problem(complete);
    add_spec(complete);
    complete->add_option("--alpha", args.alpha, "weight on the worst case")->required();
    complete->add_option("--trials", args.trials, "extension cross-check trials");
    complete->add_option("--seed", args.seed, "search seed");

    auto* recover = app.add_subcommand("recover", "recover alpha from extension values");
    add_problem(recover);
    add_spec(recover);
    recover->add_option("values", args.values_file, "JSON file: act name -> value")->required();

    auto* agg = app.add_subcommand("aggregate", "pool an expert panel and audit the planner");
    add_problem(agg);
    agg->add_option("panel", args.panel, "panel name")->required();
    agg->add_option("--mode", args.mode, "bewley | hp")->required();
    agg->add_option("--trials", args.trials, "audit trials");
    agg->add_option("--seed", args.seed, "audit seed");

    auto* mech = app.add_subcommand("audit-mechanism", "obvious-manipulability flag table");
    add_problem(mech);
    mech->add_option("mechanism", args.mech, "mechanism name")->required();
    mech->add_flag("--json", args.as_json, "JSON instead of CSV");

    auto* axioms = app.add_subcommand("check-axioms", "run the axiom harness");
    add_problem(axioms);
    add_spec(axioms);
    axioms->add_option("--axioms", args.axioms, "axiom ids (default 1..9)");
    axioms->add_option("--budget", args.budget, "trials per axiom");
    axioms->add_option("--seed", args.seed, "harness seed");

    auto* aset = app.add_subcommand("alpha-set", "exact mixture-weight preference set");
    add_problem(aset);
    add_spec(aset);
    aset->add_option("acts", args.acts, "mix-first mix-second benchmark")->expected(3);

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(args);
        if (cmp->parsed()) return run_compare(args);
        if (order->parsed()) return run_order(args);
        if (complete->parsed()) return run_complete(args);
        if (recover->parsed()) return run_recover(args);
        if (agg->parsed()) return run_aggregate(args);
        if (mech->parsed()) return run_audit_mechanism(args);
        if (axioms->parsed()) return run_check_axioms(args);
        if (aset->parsed()) return run_alpha_set(args);
    } catch (const std::invalid_argument& e) {
        std::cerr << json{{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitError;
    } catch (const std::logic_error& e) {
        std::cerr << json{{"error", {{"type", "logic_error"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"type", "exception"}, {"message", e.what()}}}}.dump()
                  << "\n";
        return kExitError;
    }
    return 0;
}
