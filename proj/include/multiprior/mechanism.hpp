#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/criteria.hpp"

namespace multiprior {

// Direct mechanism over finite type spaces: a full table from type profiles
// to outcomes, plus each agent's type-indexed utility on outcomes. Profiles
// are flattened row-major in (agent index, type index) order.
struct DirectMechanism {
    std::vector<std::string> agents;
    std::vector<std::vector<std::string>> type_spaces;       // [agent] -> type labels
    std::vector<Outcome> outcome_table;                      // flat over profiles
    std::vector<std::vector<AffineUtility>> utilities;       // [agent][true type]

    DirectMechanism(std::vector<std::string> agent_names,
                    std::vector<std::vector<std::string>> types, std::vector<Outcome> outcomes,
                    std::vector<std::vector<AffineUtility>> utils)
        : agents(std::move(agent_names)),
          type_spaces(std::move(types)),
          outcome_table(std::move(outcomes)),
          utilities(std::move(utils)) {
        if (agents.empty()) throw std::invalid_argument("mechanism needs at least one agent");
        if (type_spaces.size() != agents.size() || utilities.size() != agents.size())
            throw std::invalid_argument("mechanism: per-agent tables must match the agent list");
        std::size_t profiles = 1;
        for (std::size_t i = 0; i < agents.size(); ++i) {
            if (type_spaces[i].empty())
                throw std::invalid_argument("mechanism: empty type space for agent " + agents[i]);
            if (utilities[i].size() != type_spaces[i].size())
                throw std::invalid_argument("mechanism: one utility per type required");
            profiles *= type_spaces[i].size();
        }
        if (outcome_table.size() != profiles)
            throw std::invalid_argument("mechanism: outcome table must cover every type profile");
        const std::size_t d = outcome_table.front().dimension();
        for (const auto& o : outcome_table)
            if (o.dimension() != d)
                throw std::invalid_argument("mechanism: outcomes must share a dimension");
        for (const auto& per_agent : utilities)
            for (const auto& u : per_agent)
                if (u.dimension() != d)
                    throw std::invalid_argument("mechanism: utility/outcome dimension mismatch");
    }

    std::size_t agent_count() const { return agents.size(); }

    std::size_t profile_index(const std::vector<std::size_t>& profile) const {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < agents.size(); ++i) idx = idx * type_spaces[i].size() + profile[i];
        return idx;
    }

    const Outcome& outcome_at(const std::vector<std::size_t>& profile) const {
        return outcome_table[profile_index(profile)];
    }
};

// Enumerates the opponents' type profiles lexicographically in (agent
// index, type index) order; a lone agent gets the single dummy state "-".
inline StateSpace opponent_states(const DirectMechanism& m, std::size_t agent) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < m.agent_count(); ++i)
        if (i != agent) others.push_back(i);
    if (others.empty()) return StateSpace({"-"});
    std::vector<std::string> labels;
    std::vector<std::size_t> counter(others.size(), 0);
    while (true) {
        std::string label;
        for (std::size_t k = 0; k < others.size(); ++k) {
            if (k > 0) label += "|";
            label += m.agents[others[k]] + "=" + m.type_spaces[others[k]][counter[k]];
        }
        labels.push_back(std::move(label));
        std::size_t k = others.size();
        while (k > 0) {
            --k;
            if (++counter[k] < m.type_spaces[others[k]].size()) break;
            counter[k] = 0;
            if (k == 0) return StateSpace(std::move(labels));
        }
    }
}

// The act a report induces for an agent: states are the opponents' type
// profiles, outcomes read off the mechanism table.
inline Act induced_act(const DirectMechanism& m, std::size_t agent, std::size_t report) {
    if (agent >= m.agent_count()) throw std::invalid_argument("induced_act: unknown agent");
    if (report >= m.type_spaces[agent].size())
        throw std::invalid_argument("induced_act: unknown report");
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < m.agent_count(); ++i)
        if (i != agent) others.push_back(i);
    std::vector<Outcome> outs;
    std::vector<std::size_t> profile(m.agent_count(), 0);
    profile[agent] = report;
    if (others.empty()) return Act({m.outcome_at(profile)});
    std::vector<std::size_t> counter(others.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < others.size(); ++k) profile[others[k]] = counter[k];
        outs.push_back(m.outcome_at(profile));
        std::size_t k = others.size();
        bool done = true;
        while (k > 0) {
            --k;
            if (++counter[k] < m.type_spaces[others[k]].size()) {
                done = false;
                break;
            }
            counter[k] = 0;
        }
        if (done) return Act(std::move(outs));
    }
}

// Report a dominates report b (for the given true type) when the induced
// act wins both the worst and the best case over all beliefs about the
// opponents, i.e. a hope-and-prepare comparison over the full simplex.
// Computed both through hp_compare and as the direct pair of strict
// min/max inequalities over states; the two must agree.
inline bool hp_dominates_report(const DirectMechanism& m, std::size_t agent,
                                std::size_t true_type, std::size_t report_a,
                                std::size_t report_b) {
    const AffineUtility& u = m.utilities.at(agent).at(true_type);
    const Act fa = induced_act(m, agent, report_a);
    const Act fb = induced_act(m, agent, report_b);
    const CredalSet simplex = full_simplex(fa.states());
    const HopeAndPrepare spec(u, simplex, simplex);
    const bool via_hp = hp_compare(spec, fa, fb) == Comparison::FirstStrict;

    const UtilityProfile pa = apply_utility(u, fa);
    const UtilityProfile pb = apply_utility(u, fb);
    const auto min_of = [](const UtilityProfile& p) {
        Rational v = p.front();
        for (const auto& x : p)
            if (x < v) v = x;
        return v;
    };
    const auto max_of = [](const UtilityProfile& p) {
        Rational v = p.front();
        for (const auto& x : p)
            if (x > v) v = x;
        return v;
    };
    const bool direct = min_of(pa) > min_of(pb) && max_of(pa) > max_of(pb);
    if (via_hp != direct)
        throw std::logic_error("full-simplex comparison disagrees with statewise extremes");
    return via_hp;
}

// One row per (agent, true type, misreport): the four extreme payoffs and
// the two one-sided flags. A misreport that improves the best case or the
// worst case over truth-telling is an obvious manipulation.
struct ManipulationFlag {
    std::size_t agent = 0;
    std::size_t true_type = 0;
    std::size_t misreport = 0;
    Rational min_truth, max_truth, min_misreport, max_misreport;
    bool worst_case_improves = false;
    bool best_case_improves = false;
};

struct ManipulationAudit {
    std::vector<ManipulationFlag> entries;          // every (agent, type, misreport)
    std::vector<std::string> state_orders;          // per agent, documented enumeration
    bool obviously_manipulable = false;
};

inline ManipulationAudit audit_obvious_manipulability(const DirectMechanism& m) {
    ManipulationAudit audit;
    for (std::size_t i = 0; i < m.agent_count(); ++i) {
        const StateSpace states = opponent_states(m, i);
        std::string order;
        for (std::size_t s = 0; s < states.size(); ++s) {
            if (s > 0) order += ",";
            order += states.labels[s];
        }
        audit.state_orders.push_back(std::move(order));
        for (std::size_t truth = 0; truth < m.type_spaces[i].size(); ++truth) {
            const AffineUtility& u = m.utilities[i][truth];
            const UtilityProfile pt = apply_utility(u, induced_act(m, i, truth));
            Rational min_t = pt.front(), max_t = pt.front();
            for (const auto& v : pt) {
                if (v < min_t) min_t = v;
                if (v > max_t) max_t = v;
            }
            for (std::size_t lie = 0; lie < m.type_spaces[i].size(); ++lie) {
                if (lie == truth) continue;
                const UtilityProfile pl = apply_utility(u, induced_act(m, i, lie));
                Rational min_l = pl.front(), max_l = pl.front();
                for (const auto& v : pl) {
                    if (v < min_l) min_l = v;
                    if (v > max_l) max_l = v;
                }
                ManipulationFlag flag;
                flag.agent = i;
                flag.true_type = truth;
                flag.misreport = lie;
                flag.min_truth = min_t;
                flag.max_truth = max_t;
                flag.min_misreport = min_l;
                flag.max_misreport = max_l;
                flag.worst_case_improves = min_l > min_t;
                flag.best_case_improves = max_l > max_t;
                if (flag.worst_case_improves || flag.best_case_improves)
                    audit.obviously_manipulable = true;
                audit.entries.push_back(std::move(flag));
            }
        }
    }
    return audit;
}

}  // namespace multiprior
