#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "epicure/lattice.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace epicure;
using testutil::entry;
using testutil::pat;
using testutil::seq;

namespace {

PredictionSet worked_example() {
    return PredictionSet({entry({"a", "b", "c"}, 0.3), entry({"a", "d", "c"}, 0.3),
                          entry({"a", "b"}, 0.2)});
}

std::vector<Pattern> child_patterns(const Lattice& lattice, const Pattern& parent) {
    std::vector<Pattern> out;
    for (Lattice::NodeId id : lattice.children_of(*lattice.find(parent)))
        out.push_back(lattice.pattern_of(id));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("Probability enforces (0,1] with a hair of headroom") {
    CHECK_THROWS_AS(Probability(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Probability(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(Probability(1.0 + 1e-6), std::invalid_argument);
    CHECK(Probability(1.0).value() == 1.0);
    CHECK(Probability(1.0 + 5e-10).value() <= 1.0);
    CHECK(Probability(0.3).value() == 0.3);
}

TEST_CASE("PredictionSet validates distinctness and total mass") {
    CHECK_THROWS_AS(PredictionSet({}), std::invalid_argument);
    CHECK_THROWS_AS(PredictionSet({entry({"a"}, 0.2), entry({"a"}, 0.3)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(PredictionSet({entry({"a"}, 0.8), entry({"b"}, 0.4)}),
                    std::invalid_argument);
    CHECK(PredictionSet({entry({"a"}, 0.6), entry({"b"}, 0.4)}).total_probability() ==
          doctest::Approx(1.0));
}

TEST_CASE("merge_duplicates sums probabilities keeping first-appearance order") {
    std::vector<PredictionSet::Entry> raw = {entry({"get", "x"}, 0.2), entry({"b"}, 0.05),
                                             entry({"get", "x"}, 0.1)};
    auto merged = PredictionSet::merge_duplicates(raw);
    REQUIRE(merged.size() == 2);
    CHECK(merged[0].first == seq({"get", "x"}));
    CHECK(merged[0].second.value() == doctest::Approx(0.3));
    CHECK(merged[1].first == seq({"b"}));
}

TEST_CASE("pattern_probability sums the matching entries") {
    PredictionSet t = worked_example();
    CHECK(pattern_probability(pat("*"), t) == doctest::Approx(0.8));
    CHECK(pattern_probability(pat("a|b|c"), t) == doctest::Approx(0.3));
    CHECK(pattern_probability(pat("a|*|c"), t) == doctest::Approx(0.6));
    CHECK(pattern_probability(pat("z|*"), t) == doctest::Approx(0.0));
}

TEST_CASE("build_lattice reproduces the worked three-beam example") {
    Lattice lattice = build_lattice(worked_example());
    CHECK(lattice.node_count() == 6);

    REQUIRE(lattice.find(pat("a|*|c")).has_value());
    REQUIRE(lattice.find(pat("a|b|*")).has_value());
    REQUIRE(lattice.find(pat("a|*")).has_value());
    CHECK(lattice.probability_of(*lattice.find(pat("a|*|c"))) == doctest::Approx(0.6));
    CHECK(lattice.probability_of(*lattice.find(pat("a|b|*"))) == doctest::Approx(0.5));
    CHECK(lattice.probability_of(*lattice.find(pat("a|*"))) == doctest::Approx(0.8));

    CHECK(lattice.pattern_of(lattice.top()) == pat("a|*"));
    CHECK(lattice.leaves().size() == 3);

    CHECK(child_patterns(lattice, pat("a|*")) ==
          std::vector<Pattern>{pat("a|b|*"), pat("a|*|c")});
    CHECK(child_patterns(lattice, pat("a|b|*")) ==
          std::vector<Pattern>{pat("a|b"), pat("a|b|c")});
    CHECK(child_patterns(lattice, pat("a|*|c")) ==
          std::vector<Pattern>{pat("a|b|c"), pat("a|d|c")});
}

TEST_CASE("build_lattice on a single prediction has no edges") {
    Lattice lattice = build_lattice(PredictionSet({entry({"load", "all"}, 1.0)}));
    CHECK(lattice.node_count() == 1);
    CHECK(lattice.pattern_of(lattice.top()) == pat("load|all"));
    CHECK(lattice.probability_of(lattice.top()) == doctest::Approx(1.0));
    CHECK(lattice.children_of(lattice.top()).empty());
    CHECK(lattice.leaves().size() == 1);
}

TEST_CASE("build_lattice with disjoint beams collapses straight to the wildcard") {
    Lattice lattice =
        build_lattice(PredictionSet({entry({"a", "b"}, 0.25), entry({"c", "d"}, 0.15)}));
    CHECK(lattice.node_count() == 3);
    CHECK(lattice.pattern_of(lattice.top()) == pat("*"));
    CHECK(lattice.probability_of(lattice.top()) == doctest::Approx(0.4));
    CHECK(child_patterns(lattice, pat("*")) ==
          std::vector<Pattern>{pat("a|b"), pat("c|d")});
}

TEST_CASE("build_lattice reports a too-small round cap") {
    LatticeOptions opts;
    opts.max_rounds = 1;
    CHECK_THROWS_AS(build_lattice(worked_example(), opts), round_limit_error);
    opts.max_rounds = 2;
    CHECK_NOTHROW(build_lattice(worked_example(), opts));
}

TEST_CASE("lattice invariants hold on random prediction sets") {
    std::mt19937 rng(314159);
    for (int i = 0; i < 200; ++i) {
        PredictionSet t = oracle::random_prediction_set(rng, 4, 5, 8);
        Lattice lattice = build_lattice(t);

        // leaves are exactly the concrete predictions
        REQUIRE(lattice.leaves().size() == t.size());
        for (Lattice::NodeId leaf : lattice.leaves())
            CHECK(lattice.pattern_of(leaf).is_concrete());

        for (Lattice::NodeId id = 0; id < static_cast<int>(lattice.node_count()); ++id) {
            const Pattern& parent = lattice.pattern_of(id);
            CHECK(lattice.probability_of(id) ==
                  doctest::Approx(oracle::brute_probability(parent, t)));
            for (Lattice::NodeId child : lattice.children_of(id)) {
                CHECK(child != id);
                CHECK(subsumes(parent, lattice.pattern_of(child)));
                CHECK(lattice.probability_of(id) >=
                      lattice.probability_of(child) - 1e-12);
            }
        }
    }
}

TEST_CASE("build_lattice is deterministic") {
    std::mt19937 rng(161803);
    for (int i = 0; i < 50; ++i) {
        PredictionSet t = oracle::random_prediction_set(rng, 4, 5, 10);
        Lattice first = build_lattice(t);
        Lattice second = build_lattice(t);
        REQUIRE(first.node_count() == second.node_count());
        for (Lattice::NodeId id = 0; id < static_cast<int>(first.node_count()); ++id) {
            CHECK(first.pattern_of(id) == second.pattern_of(id));
            CHECK(first.probability_of(id) == second.probability_of(id));
            CHECK(first.children_of(id) == second.children_of(id));
        }
    }
}

TEST_CASE("select_patterns returns least-general qualifying nodes") {
    Lattice lattice = build_lattice(worked_example());

    SelectionResult at55 = select_patterns(lattice, 0.55);
    CHECK(at55.patterns == std::vector<Pattern>{pat("a|*|c")});

    SelectionResult at65 = select_patterns(lattice, 0.65);
    CHECK(at65.patterns == std::vector<Pattern>{pat("a|*")});

    SelectionResult at45 = select_patterns(lattice, 0.45);
    CHECK(at45.patterns == std::vector<Pattern>{pat("a|b|*"), pat("a|*|c")});

    CHECK(select_patterns(lattice, 0.85).empty());
}

TEST_CASE("select_patterns falls back to the top when only it qualifies") {
    Lattice lattice =
        build_lattice(PredictionSet({entry({"a", "b"}, 0.25), entry({"c", "d"}, 0.15)}));
    SelectionResult sel = select_patterns(lattice, 0.35);
    CHECK(sel.patterns == std::vector<Pattern>{pat("*")});
    CHECK(sel.is_trivial());
}

TEST_CASE("select_patterns validates theta") {
    Lattice lattice = build_lattice(worked_example());
    CHECK_THROWS_AS(select_patterns(lattice, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(select_patterns(lattice, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(select_patterns(lattice, 1.2), std::invalid_argument);
    CHECK(select_patterns(lattice, 1.0).empty());
}

TEST_CASE("is_anomalous alarms only on nontrivial violated selections") {
    SelectionResult sel;
    sel.theta = 0.6;
    sel.patterns = {pat("load|*")};
    CHECK(is_anomalous(seq({"save", "all"}), sel));
    CHECK_FALSE(is_anomalous(seq({"load", "all", "msgpack", "l", "gz"}), sel));

    SelectionResult trivial;
    trivial.theta = 0.6;
    trivial.patterns = {pat("*")};
    CHECK_FALSE(trivial.patterns.empty());
    CHECK(trivial.is_trivial());
    CHECK_FALSE(is_anomalous(seq({"anything"}), trivial));

    SelectionResult empty;
    empty.theta = 0.6;
    CHECK(empty.is_trivial());
    CHECK_FALSE(is_anomalous(seq({"anything"}), empty));
}

TEST_CASE("the message-loading beam selects its two summary patterns at 20%") {
    PredictionSet t({entry({"load", "all", "messages"}, 0.11),
                     entry({"load", "all", "msgs"}, 0.10),
                     entry({"load", "messages", "from", "file"}, 0.07),
                     entry({"load", "cached", "messages"}, 0.06),
                     entry({"read", "data"}, 0.05)});
    Lattice lattice = build_lattice(t);
    SelectionResult sel = select_patterns(lattice, 0.20);
    CHECK(sel.patterns ==
          std::vector<Pattern>{pat("load|all|*"), pat("load|*|messages|*")});
}
