#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "multiprior/axioms.hpp"
#include "multiprior/comparative.hpp"
#include "multiprior/problem.hpp"

using namespace multiprior;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string data_path(const std::string& name) {
    const char* dir = std::getenv("MPDEC_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("minimal one-state one-act file parses") {
    const ProblemFile file = parse_problem(R"({
        "dimension": 1,
        "states": ["only"],
        "acts": { "f": { "only": ["3/2"] } }
    })");
    CHECK(file.states.size() == 1);
    CHECK(file.act("f").outcomes[0].coords[0] == rat(3, 2));
}

TEST_CASE("malformed probabilities are rejected with the generator's path") {
    const std::string text = R"({
        "dimension": 1,
        "states": ["a", "b"],
        "credal_sets": { "bad": [["1", "1"]] }
    })";
    try {
        parse_problem(text);
        FAIL("expected a parse failure");
    } catch (const std::invalid_argument& e) {
        const std::string message = e.what();
        CHECK(message.find("$.credal_sets.bad[0]") != std::string::npos);
        CHECK(message.find("sum") != std::string::npos);
    }
}

TEST_CASE("floats and bare numbers are rejected") {
    CHECK_THROWS_WITH_AS(parse_problem(R"({
        "dimension": 1,
        "states": ["a"],
        "acts": { "f": { "a": [0.5] } }
    })"),
                         doctest::Contains("rationals must be strings"), std::invalid_argument);
}

TEST_CASE("spec invariants are enforced on load") {
    const std::string disjoint = R"({
        "dimension": 1,
        "states": ["a", "b"],
        "utilities": { "u": { "offset": "0", "weights": ["1"] } },
        "credal_sets": { "L": [["1", "0"]], "R": [["0", "1"]] },
        "specs": { "s": { "type": "hope_and_prepare", "utility": "u",
                           "worst_case": "L", "best_case": "R" } }
    })";
    CHECK_THROWS_WITH_AS(parse_problem(disjoint), doctest::Contains("$.specs.s"),
                         std::invalid_argument);
    // the explicit flag admits the improper representation
    std::string allowed = disjoint;
    allowed.replace(allowed.find("\"best_case\": \"R\""), 16,
                    "\"best_case\": \"R\", \"allow_disjoint\": true");
    CHECK_NOTHROW(parse_problem(allowed));
}

TEST_CASE("unresolved references carry their path") {
    CHECK_THROWS_WITH_AS(parse_problem(R"({
        "dimension": 1,
        "states": ["a"],
        "utilities": { "u": { "offset": "0", "weights": ["1"] } },
        "specs": { "s": { "type": "bewley", "utility": "u", "scenarios": "nope" } }
    })"),
                         doctest::Contains("unknown credal set"), std::invalid_argument);
}

TEST_CASE("round trip is byte-stable on canonical output") {
    for (const auto& name : {"betting.json", "attitudes.json", "mechanism_2x2.json"}) {
        const std::string raw = read_file(data_path(name));
        const std::string canonical = serialize_problem(parse_problem(raw));
        CHECK(serialize_problem(parse_problem(canonical)) == canonical);
    }
}

TEST_CASE("bundled betting instance reproduces its verdicts") {
    const ProblemFile file = parse_problem(read_file(data_path("betting.json")));
    const Act& f = file.act("bet_on_A");
    const Act& g = file.act("bet_against_A");
    CHECK(compare(file.spec("concordant"), g, f) == Comparison::FirstStrict);
    CHECK(compare(file.spec("distorted_hope"), f, g) == Comparison::Incomparable);
    CHECK(compare(file.spec("pooled_hull"), g, f) == Comparison::FirstStrict);
    // richer reward flips the distorted comparison back
    CHECK(compare(file.spec("distorted_hope"), file.act("bet_against_A_sweetened"), f) ==
          Comparison::FirstStrict);
}

TEST_CASE("bundled attitude instance reproduces its verdicts") {
    const ProblemFile file = parse_problem(read_file(data_path("attitudes.json")));
    const auto spec1 = std::get<HopeAndPrepare>(file.spec("spec1"));
    const auto spec2 = std::get<HopeAndPrepare>(file.spec("spec2"));
    CHECK(compare(file.spec("spec1"), file.act("f"), file.act("g")) == Comparison::FirstStrict);
    CHECK(compare(file.spec("spec2"), file.act("f"), file.act("g")) != Comparison::FirstStrict);
    CHECK(more_ambiguity_averse(spec1, spec2).certified);
    CHECK(more_ambiguity_loving(spec1, spec2).certified);

    // spec1's worst case sits strictly inside its best case, so only the
    // optimistic hedge axiom survives
    const ConcordanceCheck hedges = check_concordance_axioms(spec1, 300, 17);
    CHECK(hedges.hedge_pessimistic.verdict == AxiomVerdict::Violated);
    CHECK(hedges.hedge_optimistic.verdict == AxiomVerdict::Pass);
    CHECK_FALSE(hedges.best_within_worst);
    CHECK(hedges.worst_within_best);
}

TEST_CASE("bundled mechanism instance parses into the audit") {
    const ProblemFile file = parse_problem(read_file(data_path("mechanism_2x2.json")));
    const auto audit = audit_obvious_manipulability(file.mechanism("allocation_toy"));
    CHECK(audit.obviously_manipulable);
    CHECK(audit.entries.size() == 4);
}

TEST_CASE("emit_dot lists nodes in order and reduced edges only") {
    ActOrder order;
    order.node_count = 3;
    order.edges = {{0, 1}, {1, 2}, {0, 2}};
    const ActOrder reduced = transitive_reduction(order);
    const std::string dot = emit_dot(reduced, {"top", "middle", "bottom"});
    CHECK(dot == "digraph relation {\n"
                 "  \"top\";\n"
                 "  \"middle\";\n"
                 "  \"bottom\";\n"
                 "  \"top\" -> \"middle\";\n"
                 "  \"middle\" -> \"bottom\";\n"
                 "}\n");
    CHECK_THROWS_AS(emit_dot(reduced, {"a"}), std::invalid_argument);
}

TEST_CASE("missing act states are reported") {
    CHECK_THROWS_WITH_AS(parse_problem(R"({
        "dimension": 1,
        "states": ["a", "b"],
        "acts": { "f": { "a": ["1"] } }
    })"),
                         doctest::Contains("missing state 'b'"), std::invalid_argument);
}

TEST_CASE("mechanism tables must cover every profile") {
    CHECK_THROWS_WITH_AS(parse_problem(R"({
        "dimension": 1,
        "states": ["s"],
        "mechanisms": { "m": {
            "agents": ["a", "b"],
            "types": { "a": ["x"], "b": ["p", "q"] },
            "outcomes": { "x,p": ["1"] },
            "utilities": { "a": { "x": { "offset": "0", "weights": ["1"] } },
                            "b": { "p": { "offset": "0", "weights": ["1"] },
                                   "q": { "offset": "0", "weights": ["1"] } } }
        } }
    })"),
                         doctest::Contains("x,q"), std::invalid_argument);
}
