#pragma once

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multiprior/aggregation.hpp"
#include "multiprior/core.hpp"
#include "multiprior/credal.hpp"
#include "multiprior/criteria.hpp"
#include "multiprior/mechanism.hpp"
#include "multiprior/rational.hpp"

namespace multiprior {

// Declarations keep the reference form of the file (names, not resolved
// objects) so serialization reproduces the input structure byte-stably.
struct SpecDecl {
    std::string type;  // hope_and_prepare | bewley | twofold | nr | alpha_meu
    std::string utility;
    std::string worst_case;
    std::string best_case;
    std::string scenarios;
    std::vector<std::string> scenario_class;
    Rational alpha = Rational(0);
    bool allow_disjoint = false;
};

struct PanelDecl {
    std::string utility;
    std::vector<std::string> experts;
};

// A parsed problem file: the shared state space and dimension, named
// objects, and the declarations tying them together. Every declared spec
// and panel is constructed once during parsing, so a file that loads has
// already passed all constructor invariants.
struct ProblemFile {
    std::size_t dimension = 1;
    StateSpace states{std::vector<std::string>{"s"}};
    std::map<std::string, AffineUtility> utilities;
    std::map<std::string, Act> acts;
    std::map<std::string, CredalSet> credal_sets;
    std::map<std::string, SpecDecl> spec_decls;
    std::map<std::string, PanelDecl> panel_decls;
    std::map<std::string, DirectMechanism> mechanisms;

    const Act& act(const std::string& name) const {
        const auto it = acts.find(name);
        if (it == acts.end()) throw std::invalid_argument("unknown act '" + name + "'");
        return it->second;
    }

    const AffineUtility& utility(const std::string& name) const {
        const auto it = utilities.find(name);
        if (it == utilities.end()) throw std::invalid_argument("unknown utility '" + name + "'");
        return it->second;
    }

    const CredalSet& credal_set(const std::string& name) const {
        const auto it = credal_sets.find(name);
        if (it == credal_sets.end())
            throw std::invalid_argument("unknown credal set '" + name + "'");
        return it->second;
    }

    PreferenceSpec spec(const std::string& name) const {
        const auto it = spec_decls.find(name);
        if (it == spec_decls.end()) throw std::invalid_argument("unknown spec '" + name + "'");
        const SpecDecl& d = it->second;
        if (d.type == "hope_and_prepare") {
            if (d.allow_disjoint)
                return HopeAndPrepare::unchecked(utility(d.utility), credal_set(d.worst_case),
                                                 credal_set(d.best_case));
            return HopeAndPrepare(utility(d.utility), credal_set(d.worst_case),
                                  credal_set(d.best_case));
        }
        if (d.type == "bewley") return Bewley{utility(d.utility), credal_set(d.scenarios)};
        if (d.type == "twofold")
            return Twofold(utility(d.utility), credal_set(d.worst_case),
                           credal_set(d.best_case));
        if (d.type == "nr") {
            std::vector<CredalSet> sets;
            for (const auto& s : d.scenario_class) sets.push_back(credal_set(s));
            return Nr(utility(d.utility), std::move(sets));
        }
        if (d.type == "alpha_meu")
            return AlphaMeu(utility(d.utility), credal_set(d.worst_case),
                            credal_set(d.best_case), d.alpha);
        throw std::invalid_argument("unknown spec type '" + d.type + "'");
    }

    ExpertPanel panel(const std::string& name) const {
        const auto it = panel_decls.find(name);
        if (it == panel_decls.end()) throw std::invalid_argument("unknown panel '" + name + "'");
        std::vector<CredalSet> sets;
        for (const auto& s : it->second.experts) sets.push_back(credal_set(s));
        return ExpertPanel(utility(it->second.utility), std::move(sets));
    }

    const DirectMechanism& mechanism(const std::string& name) const {
        const auto it = mechanisms.find(name);
        if (it == mechanisms.end())
            throw std::invalid_argument("unknown mechanism '" + name + "'");
        return it->second;
    }
};

namespace detail {

using Json = nlohmann::json;

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& message) {
    throw std::invalid_argument(path + ": " + message);
}

inline const Json& member(const Json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) parse_fail(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) parse_fail(path, std::string("missing field '") + key + "'");
    return *it;
}

// Rationals travel as strings only; bare JSON numbers are rejected so no
// binary float ever sneaks into the exact pipeline.
inline Rational rational_at(const Json& v, const std::string& path) {
    if (!v.is_string()) parse_fail(path, "rationals must be strings like \"2/3\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        parse_fail(path, e.what());
    }
}

inline RatVec rational_vector(const Json& v, const std::string& path) {
    if (!v.is_array() || v.empty()) parse_fail(path, "expected a non-empty array of rationals");
    RatVec out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(rational_at(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::string string_at(const Json& v, const std::string& path) {
    if (!v.is_string()) parse_fail(path, "expected a string");
    return v.get<std::string>();
}

inline const Json& section_at(const Json& root, const char* key) {
    const Json& v = root[key];
    if (!v.is_object()) parse_fail(std::string("$.") + key, "expected an object of named entries");
    return v;
}

inline AffineUtility utility_at(const Json& v, const std::string& path) {
    const RatVec weights = rational_vector(member(v, "weights", path), path + ".weights");
    const Rational offset = rational_at(member(v, "offset", path), path + ".offset");
    try {
        return AffineUtility(weights, offset);
    } catch (const std::invalid_argument& e) {
        parse_fail(path, e.what());
    }
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
    detail::Json root;
    try {
        root = detail::Json::parse(text);
    } catch (const detail::Json::parse_error& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    if (!root.is_object()) detail::parse_fail("$", "expected a top-level object");

    ProblemFile file;
    {
        const auto& dim = detail::member(root, "dimension", "$");
        if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
            detail::parse_fail("$.dimension", "expected a positive integer");
        file.dimension = dim.get<std::size_t>();
        const auto& states = detail::member(root, "states", "$");
        if (!states.is_array() || states.empty())
            detail::parse_fail("$.states", "expected a non-empty array of labels");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < states.size(); ++i)
            labels.push_back(detail::string_at(states[i], "$.states[" + std::to_string(i) + "]"));
        try {
            file.states = StateSpace(std::move(labels));
        } catch (const std::invalid_argument& e) {
            detail::parse_fail("$.states", e.what());
        }
    }

    if (root.contains("utilities"))
        for (const auto& [name, body] : detail::section_at(root, "utilities").items()) {
            const std::string path = "$.utilities." + name;
            const AffineUtility u = detail::utility_at(body, path);
            if (u.dimension() != file.dimension)
                detail::parse_fail(path, "weights dimension disagrees with $.dimension");
            file.utilities.emplace(name, u);
        }

    if (root.contains("acts"))
        for (const auto& [name, body] : detail::section_at(root, "acts").items()) {
            const std::string path = "$.acts." + name;
            if (!body.is_object()) detail::parse_fail(path, "expected {state: coords}");
            std::vector<Outcome> outs;
            for (const auto& label : file.states.labels) {
                if (!body.contains(label))
                    detail::parse_fail(path, "missing state '" + label + "'");
                const RatVec coords =
                    detail::rational_vector(body[label], path + "." + label);
                if (coords.size() != file.dimension)
                    detail::parse_fail(path + "." + label,
                                       "outcome dimension disagrees with $.dimension");
                outs.push_back(Outcome(coords));
            }
            if (body.size() != file.states.size())
                detail::parse_fail(path, "contains a label outside the state space");
            file.acts.emplace(name, Act(std::move(outs)));
        }

    if (root.contains("credal_sets"))
        for (const auto& [name, body] : detail::section_at(root, "credal_sets").items()) {
            const std::string path = "$.credal_sets." + name;
            if (!body.is_array() || body.empty())
                detail::parse_fail(path, "expected a non-empty array of generators");
            std::vector<ProbabilityVector> gens;
            for (std::size_t i = 0; i < body.size(); ++i) {
                const std::string gpath = path + "[" + std::to_string(i) + "]";
                const RatVec mass = detail::rational_vector(body[i], gpath);
                if (mass.size() != file.states.size())
                    detail::parse_fail(gpath, "generator length disagrees with $.states");
                try {
                    gens.push_back(ProbabilityVector(mass));
                } catch (const std::invalid_argument& e) {
                    detail::parse_fail(gpath, e.what());
                }
            }
            file.credal_sets.emplace(name, CredalSet(std::move(gens)));
        }

    if (root.contains("specs"))
        for (const auto& [name, body] : detail::section_at(root, "specs").items()) {
            const std::string path = "$.specs." + name;
            SpecDecl d;
            d.type = detail::string_at(detail::member(body, "type", path), path + ".type");
            d.utility =
                detail::string_at(detail::member(body, "utility", path), path + ".utility");
            const auto set_ref = [&](const char* key) {
                return detail::string_at(detail::member(body, key, path),
                                         path + "." + key);
            };
            if (d.type == "hope_and_prepare" || d.type == "twofold" || d.type == "alpha_meu") {
                d.worst_case = set_ref("worst_case");
                d.best_case = set_ref("best_case");
                if (d.type == "alpha_meu")
                    d.alpha = detail::rational_at(detail::member(body, "alpha", path),
                                                  path + ".alpha");
                if (d.type == "hope_and_prepare" && body.contains("allow_disjoint")) {
                    if (!body["allow_disjoint"].is_boolean())
                        detail::parse_fail(path + ".allow_disjoint", "expected a boolean");
                    d.allow_disjoint = body["allow_disjoint"].get<bool>();
                }
            } else if (d.type == "bewley") {
                d.scenarios = set_ref("scenarios");
            } else if (d.type == "nr") {
                const auto& cls = detail::member(body, "scenario_class", path);
                if (!cls.is_array() || cls.empty())
                    detail::parse_fail(path + ".scenario_class", "expected a non-empty array");
                for (std::size_t i = 0; i < cls.size(); ++i)
                    d.scenario_class.push_back(detail::string_at(
                        cls[i], path + ".scenario_class[" + std::to_string(i) + "]"));
            } else {
                detail::parse_fail(path + ".type", "unknown spec type '" + d.type + "'");
            }
            file.spec_decls.emplace(name, std::move(d));
            try {
                (void)file.spec(name);  // constructor invariants checked on load
            } catch (const std::invalid_argument& e) {
                detail::parse_fail(path, e.what());
            }
        }

    if (root.contains("panels"))
        for (const auto& [name, body] : detail::section_at(root, "panels").items()) {
            const std::string path = "$.panels." + name;
            PanelDecl d;
            d.utility =
                detail::string_at(detail::member(body, "utility", path), path + ".utility");
            const auto& experts = detail::member(body, "experts", path);
            if (!experts.is_array() || experts.empty())
                detail::parse_fail(path + ".experts", "expected a non-empty array");
            for (std::size_t i = 0; i < experts.size(); ++i)
                d.experts.push_back(detail::string_at(
                    experts[i], path + ".experts[" + std::to_string(i) + "]"));
            file.panel_decls.emplace(name, std::move(d));
            try {
                (void)file.panel(name);
            } catch (const std::invalid_argument& e) {
                detail::parse_fail(path, e.what());
            }
        }

    if (root.contains("mechanisms"))
        for (const auto& [name, body] : detail::section_at(root, "mechanisms").items()) {
            const std::string path = "$.mechanisms." + name;
            const auto& agents_json = detail::member(body, "agents", path);
            if (!agents_json.is_array() || agents_json.empty())
                detail::parse_fail(path + ".agents", "expected a non-empty array");
            std::vector<std::string> agents;
            for (std::size_t i = 0; i < agents_json.size(); ++i)
                agents.push_back(detail::string_at(
                    agents_json[i], path + ".agents[" + std::to_string(i) + "]"));

            const auto& types_json = detail::member(body, "types", path);
            std::vector<std::vector<std::string>> types;
            for (const auto& agent : agents) {
                const std::string tpath = path + ".types." + agent;
                if (!types_json.contains(agent)) detail::parse_fail(tpath, "missing agent");
                const auto& list = types_json[agent];
                if (!list.is_array() || list.empty())
                    detail::parse_fail(tpath, "expected a non-empty array");
                std::vector<std::string> labels;
                for (std::size_t i = 0; i < list.size(); ++i)
                    labels.push_back(
                        detail::string_at(list[i], tpath + "[" + std::to_string(i) + "]"));
                types.push_back(std::move(labels));
            }

            // outcome keys are the comma-joined type labels in agent order
            const auto& outs_json = detail::member(body, "outcomes", path);
            std::vector<Outcome> table;
            std::vector<std::size_t> counter(agents.size(), 0);
            while (true) {
                std::string key;
                for (std::size_t i = 0; i < agents.size(); ++i) {
                    if (i > 0) key += ",";
                    key += types[i][counter[i]];
                }
                const std::string opath = path + ".outcomes." + key;
                if (!outs_json.contains(key)) detail::parse_fail(opath, "missing profile");
                table.push_back(Outcome(detail::rational_vector(outs_json[key], opath)));
                std::size_t k = agents.size();
                bool done = true;
                while (k > 0) {
                    --k;
                    if (++counter[k] < types[k].size()) {
                        done = false;
                        break;
                    }
                    counter[k] = 0;
                }
                if (done) break;
            }

            const auto& utils_json = detail::member(body, "utilities", path);
            std::vector<std::vector<AffineUtility>> utils;
            for (std::size_t i = 0; i < agents.size(); ++i) {
                const std::string upath = path + ".utilities." + agents[i];
                if (!utils_json.contains(agents[i])) detail::parse_fail(upath, "missing agent");
                std::vector<AffineUtility> per_type;
                for (const auto& t : types[i]) {
                    const std::string tpath = upath + "." + t;
                    if (!utils_json[agents[i]].contains(t))
                        detail::parse_fail(tpath, "missing type");
                    per_type.push_back(detail::utility_at(utils_json[agents[i]][t], tpath));
                }
                utils.push_back(std::move(per_type));
            }
            try {
                file.mechanisms.emplace(name, DirectMechanism(std::move(agents), std::move(types),
                                                              std::move(table),
                                                              std::move(utils)));
            } catch (const std::invalid_argument& e) {
                detail::parse_fail(path, e.what());
            }
        }

    return file;
}

namespace detail {

inline Json utility_json(const AffineUtility& u) {
    Json body;
    body["offset"] = to_string(u.offset);
    Json weights = Json::array();
    for (const auto& w : u.weights) weights.push_back(to_string(w));
    body["weights"] = std::move(weights);
    return body;
}

}  // namespace detail

// Canonical serialization: object keys sorted, rationals in lowest terms,
// two-space indent, trailing newline. parse -> serialize is byte-stable on
// its own output.
inline std::string serialize_problem(const ProblemFile& file) {
    detail::Json root;
    root["dimension"] = file.dimension;
    root["states"] = file.states.labels;

    if (!file.utilities.empty()) {
        detail::Json section;
        for (const auto& [name, u] : file.utilities) section[name] = detail::utility_json(u);
        root["utilities"] = std::move(section);
    }
    if (!file.acts.empty()) {
        detail::Json section;
        for (const auto& [name, act] : file.acts) {
            detail::Json body;
            for (std::size_t s = 0; s < file.states.size(); ++s) {
                detail::Json coords = detail::Json::array();
                for (const auto& c : act.outcomes[s].coords) coords.push_back(to_string(c));
                body[file.states.labels[s]] = std::move(coords);
            }
            section[name] = std::move(body);
        }
        root["acts"] = std::move(section);
    }
    if (!file.credal_sets.empty()) {
        detail::Json section;
        for (const auto& [name, set] : file.credal_sets) {
            detail::Json gens = detail::Json::array();
            for (const auto& g : set.generators) {
                detail::Json row = detail::Json::array();
                for (const auto& m : g.mass) row.push_back(to_string(m));
                gens.push_back(std::move(row));
            }
            section[name] = std::move(gens);
        }
        root["credal_sets"] = std::move(section);
    }
    if (!file.spec_decls.empty()) {
        detail::Json section;
        for (const auto& [name, d] : file.spec_decls) {
            detail::Json body;
            body["type"] = d.type;
            body["utility"] = d.utility;
            if (d.type == "hope_and_prepare" || d.type == "twofold" || d.type == "alpha_meu") {
                body["worst_case"] = d.worst_case;
                body["best_case"] = d.best_case;
            }
            if (d.type == "alpha_meu") body["alpha"] = to_string(d.alpha);
            if (d.type == "hope_and_prepare" && d.allow_disjoint) body["allow_disjoint"] = true;
            if (d.type == "bewley") body["scenarios"] = d.scenarios;
            if (d.type == "nr") body["scenario_class"] = d.scenario_class;
            section[name] = std::move(body);
        }
        root["specs"] = std::move(section);
    }
    if (!file.panel_decls.empty()) {
        detail::Json section;
        for (const auto& [name, d] : file.panel_decls) {
            detail::Json body;
            body["utility"] = d.utility;
            body["experts"] = d.experts;
            section[name] = std::move(body);
        }
        root["panels"] = std::move(section);
    }
    if (!file.mechanisms.empty()) {
        detail::Json section;
        for (const auto& [name, m] : file.mechanisms) {
            detail::Json body;
            body["agents"] = m.agents;
            detail::Json types;
            for (std::size_t i = 0; i < m.agents.size(); ++i)
                types[m.agents[i]] = m.type_spaces[i];
            body["types"] = std::move(types);
            detail::Json outs;
            std::vector<std::size_t> counter(m.agents.size(), 0);
            std::size_t flat = 0;
            while (true) {
                std::string key;
                for (std::size_t i = 0; i < m.agents.size(); ++i) {
                    if (i > 0) key += ",";
                    key += m.type_spaces[i][counter[i]];
                }
                detail::Json coords = detail::Json::array();
                for (const auto& c : m.outcome_table[flat].coords) coords.push_back(to_string(c));
                outs[key] = std::move(coords);
                ++flat;
                std::size_t k = m.agents.size();
                bool done = true;
                while (k > 0) {
                    --k;
                    if (++counter[k] < m.type_spaces[k].size()) {
                        done = false;
                        break;
                    }
                    counter[k] = 0;
                }
                if (done) break;
            }
            body["outcomes"] = std::move(outs);
            detail::Json utils;
            for (std::size_t i = 0; i < m.agents.size(); ++i) {
                detail::Json per_type;
                for (std::size_t t = 0; t < m.type_spaces[i].size(); ++t)
                    per_type[m.type_spaces[i][t]] = detail::utility_json(m.utilities[i][t]);
                utils[m.agents[i]] = std::move(per_type);
            }
            body["utilities"] = std::move(utils);
            section[name] = std::move(body);
        }
        root["mechanisms"] = std::move(section);
    }
    return root.dump(2) + "\n";
}

// Hasse-style output: nodes in input order, edges of the supplied relation
// (callers pass the transitive reduction), sorted for determinism.
inline std::string emit_dot(const ActOrder& order, const std::vector<std::string>& names) {
    if (names.size() != order.node_count)
        throw std::invalid_argument("emit_dot: one name per node required");
    const auto quoted = [](const std::string& s) {
        std::string out = "\"";
        for (const char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::string text = "digraph relation {\n";
    for (const auto& name : names) text += "  " + quoted(name) + ";\n";
    auto edges = order.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [i, j] : edges)
        text += "  " + quoted(names[i]) + " -> " + quoted(names[j]) + ";\n";
    text += "}\n";
    return text;
}

}  // namespace multiprior
