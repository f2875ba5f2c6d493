// Acceptance suite: one criterion per function, one PASS/FAIL line each,
// every expected value exact (rational arithmetic, zero tolerance).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "multiprior/aggregation.hpp"
#include "multiprior/axioms.hpp"
#include "multiprior/comparative.hpp"
#include "multiprior/completion.hpp"
#include "multiprior/mechanism.hpp"
#include "multiprior/problem.hpp"
#include "multiprior/sampling.hpp"

using namespace multiprior;

namespace {

struct Failure {
    std::string detail;
};

#define EXPECT(cond)                                                       \
    do {                                                                   \
        if (!(cond)) throw Failure{std::string("line ") +                  \
                                   std::to_string(__LINE__) + ": " #cond}; \
    } while (0)

std::string data_path(const std::string& name) {
    const char* dir = std::getenv("MPDEC_DATA");
    const std::string base = dir ? dir : "data";
    return base + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw Failure{"cannot open " + path};
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const AffineUtility identity({rat(1)}, rat(0));

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- criterion 1: the betting example, exact ------------------------------

void criterion1() {
    const auto start = std::chrono::steady_clock::now();
    const ProblemFile file = parse_problem(read_file(data_path("betting.json")));
    const Act& f = file.act("bet_on_A");
    const Act& g = file.act("bet_against_A");
    const auto concordant = std::get<HopeAndPrepare>(file.spec("concordant"));
    const auto shifted = std::get<HopeAndPrepare>(file.spec("distorted_hope"));
    const auto pooled = std::get<HopeAndPrepare>(file.spec("pooled_hull"));

    EXPECT(min_eu(concordant.u, concordant.worst_case, f) == rat(-5, 3));
    EXPECT(max_eu(concordant.u, concordant.best_case, f) == rat(5));
    EXPECT(min_eu(concordant.u, concordant.worst_case, g) == rat(1));
    EXPECT(max_eu(concordant.u, concordant.best_case, g) == rat(19, 3));
    EXPECT(hp_compare(concordant, g, f) == Comparison::FirstStrict);

    EXPECT(max_eu(shifted.u, shifted.best_case, f) == rat(29, 5));
    EXPECT(max_eu(shifted.u, shifted.best_case, g) ==
           rat(17) * rat(97, 150) - rat(15) * rat(53, 150));
    EXPECT(max_eu(shifted.u, shifted.best_case, g) == rat(427, 75));
    EXPECT(hp_compare(shifted, f, g) == Comparison::Incomparable);

    EXPECT(min_eu(pooled.u, pooled.worst_case, g) == rat(9, 25));
    EXPECT(min_eu(pooled.u, pooled.worst_case, f) == rat(-5, 3));
    EXPECT(hp_compare(pooled, g, f) == Comparison::FirstStrict);

    EXPECT(seconds_since(start) < 1.0);
}

// ---- criterion 2: the attitude example, exact ------------------------------

void criterion2() {
    const ProblemFile file = parse_problem(read_file(data_path("attitudes.json")));
    const Act& f = file.act("f");
    const Act& g = file.act("g");
    const auto spec1 = std::get<HopeAndPrepare>(file.spec("spec1"));
    const auto spec2 = std::get<HopeAndPrepare>(file.spec("spec2"));

    EXPECT(min_eu(identity, spec1.worst_case, f) == rat(1));
    EXPECT(min_eu(identity, spec1.worst_case, g) == rat(0));
    EXPECT(max_eu(identity, spec1.best_case, f) == rat(1));
    EXPECT(max_eu(identity, spec1.best_case, g) == rat(2, 3));
    EXPECT(hp_compare(spec1, f, g) == Comparison::FirstStrict);

    EXPECT(max_eu(identity, spec2.best_case, f) == rat(2, 5));
    EXPECT(max_eu(identity, spec2.best_case, g) == rat(2, 3));
    EXPECT(hp_compare(spec2, f, g) != Comparison::FirstStrict);

    EXPECT(more_ambiguity_averse(spec1, spec2).certified);
    EXPECT(more_ambiguity_loving(spec1, spec2).certified);

    // the semantic conservatism check must surface exactly this pair
    const auto gap = extension_gap_search(PreferenceSpec{spec1}, PreferenceSpec{spec2}, 256, 2);
    EXPECT(gap.size() == 1);
    EXPECT(gap.front().first == f);
    EXPECT(gap.front().second == g);
}

// ---- criterion 3: factorization through the one-sided relations ------------

void criterion3() {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t checked = 0;
    for (std::uint64_t trial = 0; trial < 10000; ++trial) {
        auto rng = trial_rng(30000, trial);
        std::uniform_int_distribution<std::size_t> n_dist(1, 4);
        const std::size_t n = n_dist(rng);
        const HopeAndPrepare spec = sample_hp_spec(rng, identity, n, 5, 12);
        const Act f = sample_act(rng, identity, n, 10, 12);
        const Act g = sample_act(rng, identity, n, 10, 12);
        const bool hp_first = hp_compare(spec, f, g) == Comparison::FirstStrict;
        const bool joint = pessimistic_compare(spec, f, g) == Comparison::FirstStrict &&
                           optimistic_compare(spec, f, g) == Comparison::FirstStrict;
        EXPECT(hp_first == joint);
        const bool hp_second = hp_compare(spec, f, g) == Comparison::SecondStrict;
        const bool joint_second = pessimistic_compare(spec, g, f) == Comparison::FirstStrict &&
                                  optimistic_compare(spec, g, f) == Comparison::FirstStrict;
        EXPECT(hp_second == joint_second);
        ++checked;
    }
    EXPECT(checked == 10000);
    EXPECT(seconds_since(start) < 60.0);
}

// ---- criterion 4: axiom suite ----------------------------------------------

void criterion4() {
    const ProblemFile betting = parse_problem(read_file(data_path("betting.json")));
    const PreferenceSpec hp = betting.spec("concordant");
    for (int axiom = 1; axiom <= 7; ++axiom) {
        const AxiomReport report = check_axiom(hp, axiom, 1000, 40 + axiom);
        EXPECT(report.verdict == AxiomVerdict::Pass);
    }
    EXPECT(check_axiom(betting.spec("unanimity_bewley"), 6, 1000, 48).verdict ==
           AxiomVerdict::Pass);

    const PreferenceSpec twofold = betting.spec("cautious_twofold");
    const AxiomReport mono = check_axiom(twofold, 5, 10000, 49);
    EXPECT(mono.verdict == AxiomVerdict::Violated);
    EXPECT(mono.witness.has_value());
    const AxiomReport evidence = check_axiom(twofold, 7, 10000, 50);
    EXPECT(evidence.verdict == AxiomVerdict::Violated);

    // hedge-axiom verdicts vs containment certificates on 100 constructions,
    // non-containment forced on a third of them
    std::size_t constructions = 0, forced_violations = 0;
    for (std::uint64_t trial = 0; constructions < 100; ++trial) {
        auto rng = trial_rng(51, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4);
        const std::size_t n = n_dist(rng);
        HopeAndPrepare spec = sample_hp_spec(rng, identity, n);
        if (trial % 3 == 0) spec = HopeAndPrepare(identity, spec.worst_case, spec.worst_case);
        if (trial % 3 == 2) {
            // widen the best case so containment in the worst case fails
            auto gens = spec.best_case.generators;
            gens.push_back(sample_probability_vector(rng, n));
            const CredalSet widened{gens};
            if (!is_subset(widened, spec.worst_case)) {
                spec = HopeAndPrepare(identity, spec.worst_case, widened);
                ++forced_violations;
            }
        }
        const ConcordanceCheck check = check_concordance_axioms(spec, 300, trial);
        EXPECT((check.hedge_pessimistic.verdict == AxiomVerdict::Violated) ==
               !check.best_within_worst);
        EXPECT((check.hedge_optimistic.verdict == AxiomVerdict::Violated) ==
               !check.worst_within_best);
        ++constructions;
    }
    EXPECT(forced_violations >= 10);
}

// ---- criterion 5: completion round trip -------------------------------------

void criterion5() {
    std::size_t specs_done = 0;
    for (std::uint64_t trial = 0; specs_done < 100; ++trial) {
        auto rng = trial_rng(52, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4);
        const std::size_t n = n_dist(rng);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, n);
        // keep only incomplete specs (some probe separates min and max)
        const auto probes = default_recovery_probes(hp, 20, trial);
        bool incomplete = false;
        for (const auto& probe : probes)
            if (min_eu(identity, hp.worst_case, probe) < max_eu(identity, hp.best_case, probe))
                incomplete = true;
        if (!incomplete) continue;

        const Rational alpha = sample_rational_in_01(rng);
        const AlphaMeu ext = complete_with_alpha(hp, alpha);
        std::vector<std::pair<Act, Rational>> values;
        for (const auto& probe : probes) values.emplace_back(probe, alpha_meu_value(ext, probe));
        const AlphaRecovery recovery = recover_alpha(hp, values);
        EXPECT(recovery.unique);
        EXPECT(recovery.alpha == alpha);
        EXPECT(verify_extension(ext, hp, 1000, trial).empty());
        EXPECT(find_monotonicity_violation(identity, hp.worst_case, hp.best_case, rat(-1, 10),
                                           1000, trial)
                   .has_value());
        ++specs_done;
    }
    EXPECT(specs_done == 100);
}

// ---- criterion 6: conservatism/attitude characterizations -------------------

void criterion6() {
    std::size_t sound_checks = 0, refuted = 0;
    for (std::uint64_t trial = 0; refuted < 100; ++trial) {
        auto rng = trial_rng(53, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4);
        const std::size_t n = n_dist(rng);
        const HopeAndPrepare hp = sample_hp_spec(rng, identity, n);
        ConservatismVerdict verdict;
        switch (trial % 4) {
            case 0:
                verdict = bewley_more_conservative_than_hp(
                    Bewley{identity, sample_credal_set(rng, n)}, hp, 1000, trial);
                break;
            case 1: {
                const HopeAndPrepare other = sample_hp_spec(rng, identity, n);
                verdict = twofold_more_conservative_than_hp(
                    Twofold(identity, other.worst_case, other.best_case), hp, 1000, trial);
                break;
            }
            case 2:
                verdict =
                    more_ambiguity_averse(hp, sample_hp_spec(rng, identity, n), 1000, trial);
                break;
            default:
                verdict =
                    more_ambiguity_loving(hp, sample_hp_spec(rng, identity, n), 1000, trial);
        }
        if (verdict.certified) {
            EXPECT(verdict.semantic == SearchOutcome::Pass);
            EXPECT(verdict.witnesses.empty());
        } else {
            EXPECT(verdict.semantic == SearchOutcome::Violated);
            EXPECT(!verdict.witnesses.empty());
            ++refuted;
        }
        ++sound_checks;
    }
    EXPECT(sound_checks >= 100);
}

// ---- criterion 7: aggregation audits ----------------------------------------

void criterion7() {
    std::size_t panels_done = 0;
    for (std::uint64_t trial = 0; panels_done < 50; ++trial) {
        auto rng = trial_rng(54, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4), e_dist(2, 4);
        const std::size_t n = n_dist(rng);
        std::vector<CredalSet> sets;
        const std::size_t experts = e_dist(rng);
        for (std::size_t i = 0; i < experts; ++i) sets.push_back(sample_credal_set(rng, n));
        const ExpertPanel panel(identity, sets);
        for (const auto mode : {PlannerMode::Bewley, PlannerMode::ConcordantHp}) {
            const PreferenceSpec planner = aggregate(panel, mode);
            EXPECT(audit_pareto(panel, planner, 1000, trial).outcome == SearchOutcome::Pass);
            EXPECT(audit_caution(panel, planner, 1000, trial).outcome == SearchOutcome::Pass);
        }
        ++panels_done;
    }
    EXPECT(panels_done == 50);

    // shrink the planner set below the union hull: the constructive probe
    // must produce a caution witness every time
    std::size_t shrunk_done = 0;
    for (std::uint64_t trial = 0; shrunk_done < 50; ++trial) {
        auto rng = trial_rng(55, trial);
        std::uniform_int_distribution<std::size_t> n_dist(2, 4);
        const std::size_t n = n_dist(rng);
        std::vector<CredalSet> sets{sample_credal_set(rng, n), sample_credal_set(rng, n)};
        const ExpertPanel panel(identity, sets);
        const PreferenceSpec shrunk{Bewley{identity, sets[0]}};
        if (is_subset(hull_union(sets), sets[0])) continue;  // nothing was shrunk away
        const auto caution = audit_caution(panel, shrunk, 0, trial);  // constructive only
        EXPECT(caution.outcome == SearchOutcome::Violated);
        EXPECT(!caution.witnesses.empty());
        const auto& w = caution.witnesses.front();
        EXPECT(bewley_compare(panel.expert_spec(w.expert), w.act, w.constant) ==
               Comparison::Incomparable);
        EXPECT(compare(shrunk, w.act, w.constant) != Comparison::Incomparable);
        ++shrunk_done;
    }
    EXPECT(shrunk_done == 50);
}

// ---- criterion 8: mechanism audit vs brute force -----------------------------

void criterion8() {
    std::size_t mechanisms_done = 0;
    for (std::uint64_t trial = 0; mechanisms_done < 20; ++trial) {
        auto rng = trial_rng(56, trial);
        std::uniform_int_distribution<std::size_t> t_dist(1, 3);
        const std::size_t ta = t_dist(rng), tb = t_dist(rng);
        std::vector<std::string> types_a, types_b;
        for (std::size_t i = 0; i < ta; ++i) types_a.push_back("a" + std::to_string(i));
        for (std::size_t i = 0; i < tb; ++i) types_b.push_back("b" + std::to_string(i));
        std::vector<Outcome> outs;
        for (std::size_t i = 0; i < ta * tb; ++i)
            outs.push_back(Outcome({sample_rational(rng, 8)}));
        const DirectMechanism m({"alice", "bob"}, {types_a, types_b}, outs,
                                {std::vector<AffineUtility>(ta, identity),
                                 std::vector<AffineUtility>(tb, identity)});
        const ManipulationAudit audit = audit_obvious_manipulability(m);

        bool oracle_flagged = false;
        for (std::size_t agent = 0; agent < 2; ++agent) {
            const std::size_t mine = m.type_spaces[agent].size();
            const std::size_t theirs = m.type_spaces[1 - agent].size();
            for (std::size_t truth = 0; truth < mine; ++truth)
                for (std::size_t lie = 0; lie < mine; ++lie) {
                    if (lie == truth) continue;
                    Rational min_t, max_t, min_l, max_l;
                    for (std::size_t other = 0; other < theirs; ++other) {
                        std::vector<std::size_t> profile(2);
                        profile[agent] = truth;
                        profile[1 - agent] = other;
                        const Rational vt = identity(m.outcome_at(profile));
                        profile[agent] = lie;
                        const Rational vl = identity(m.outcome_at(profile));
                        if (other == 0) {
                            min_t = max_t = vt;
                            min_l = max_l = vl;
                        } else {
                            if (vt < min_t) min_t = vt;
                            if (vt > max_t) max_t = vt;
                            if (vl < min_l) min_l = vl;
                            if (vl > max_l) max_l = vl;
                        }
                    }
                    const bool flagged = min_l > min_t || max_l > max_t;
                    if (flagged) oracle_flagged = true;
                    bool matched = false;
                    for (const auto& e : audit.entries)
                        if (e.agent == agent && e.true_type == truth && e.misreport == lie) {
                            matched = true;
                            EXPECT(e.min_truth == min_t);
                            EXPECT(e.max_truth == max_t);
                            EXPECT(e.min_misreport == min_l);
                            EXPECT(e.max_misreport == max_l);
                            EXPECT((e.worst_case_improves || e.best_case_improves) == flagged);
                        }
                    EXPECT(matched);

                    // the full-simplex comparison must agree with the
                    // two statewise inequalities (throws on divergence)
                    const bool dominates = hp_dominates_report(m, agent, truth, lie, truth);
                    EXPECT(dominates == (min_l > min_t && max_l > max_t));
                }
        }
        EXPECT(audit.obviously_manipulable == oracle_flagged);
        ++mechanisms_done;
    }
    EXPECT(mechanisms_done == 20);
}

}  // namespace

int main() {
    const auto suite_start = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"betting example exact values and verdicts", criterion1},
        {"attitude example exact values, certificates and witness", criterion2},
        {"strict comparison factors through the one-sided relations (10^4 instances)",
         criterion3},
        {"axiom suite: passes, forced violations, hedge/containment agreement", criterion4},
        {"completion round trip, extension check, negative-alpha violation", criterion5},
        {"conservatism/attitude certificates sound and constructively refutable", criterion6},
        {"aggregation audits pass for pooled planners, refute shrunken ones", criterion7},
        {"mechanism audit agrees with the brute-force oracle", criterion8}};

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            criteria[i].second();
            std::cout << "criterion " << i + 1 << ": PASS - " << criteria[i].first << "\n";
        } catch (const Failure& f) {
            ++failures;
            std::cout << "criterion " << i + 1 << ": FAIL - " << criteria[i].first << " ["
                      << f.detail << "]\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "criterion " << i + 1 << ": FAIL - " << criteria[i].first << " ["
                      << e.what() << "]\n";
        }
    }
    std::cout << "total: " << criteria.size() - failures << "/" << criteria.size()
              << " criteria passed in " << seconds_since(suite_start) << "s\n";
    return failures == 0 ? 0 : 1;
}
