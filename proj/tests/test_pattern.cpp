#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "epicure/pattern.hpp"
#include "oracles.hpp"
#include "util.hpp"

using epicure::Pattern;
using epicure::PatternElement;
using epicure::matches;
using epicure::subsumes;
using testutil::pat;
using testutil::seq;

TEST_CASE("matches: wildcard gaps absorb zero or more subtokens") {
    CHECK(matches(pat("load|*|msgpack|*"), seq({"load", "all", "msgpack", "l", "gz"})));
    CHECK_FALSE(matches(pat("load|*|messages|*"), seq({"load", "all", "msgpack", "l", "gz"})));
    CHECK(matches(pat("*"), seq({"anything"})));
    CHECK(matches(pat("*"), seq({"a", "b", "c", "d"})));
    CHECK(matches(pat("a|b"), seq({"a", "b"})));
    CHECK_FALSE(matches(pat("a|b"), seq({"a", "c"})));
}

TEST_CASE("matches: zero-width wildcards at every position") {
    CHECK(matches(pat("*|a"), seq({"a"})));
    CHECK(matches(pat("a|*"), seq({"a"})));
    CHECK(matches(pat("a|*|b"), seq({"a", "b"})));
    CHECK_FALSE(matches(pat("a|*|b"), seq({"a"})));
    CHECK_FALSE(matches(pat("a|b|*"), seq({"a"})));
}

TEST_CASE("matches agrees with the backtracking oracle on random pairs") {
    std::mt19937 rng(7031);
    int hits = 0;
    for (int i = 0; i < 4000; ++i) {
        Pattern p = oracle::random_pattern(rng, 3, 5);
        epicure::TokenSequence t = oracle::random_sequence(rng, 3, 6);
        bool got = matches(p, t);
        CHECK(got == oracle::brute_matches(p, t));
        hits += got ? 1 : 0;
    }
    // The sample must exercise both outcomes or the check proves nothing.
    CHECK(hits > 200);
    CHECK(hits < 3800);
}

TEST_CASE("matches is invariant under canonicalization") {
    using epicure::match_elements;
    std::vector<PatternElement> raw = {
        PatternElement::literal(epicure::Subtoken("a")), PatternElement::wildcard(),
        PatternElement::wildcard(), PatternElement::wildcard(),
        PatternElement::literal(epicure::Subtoken("b"))};
    Pattern canonical = Pattern::from_elements(raw);
    CHECK(canonical.elements().size() == 3);
    for (const auto& t :
         {seq({"a", "b"}), seq({"a", "x", "y", "b"}), seq({"a"}), seq({"b", "a"})}) {
        CHECK(match_elements(raw, t) == matches(canonical, t));
    }
}

TEST_CASE("wildcard-free matching is element-wise equality") {
    std::mt19937 rng(40960);
    for (int i = 0; i < 500; ++i) {
        epicure::TokenSequence s = oracle::random_sequence(rng, 3, 4);
        epicure::TokenSequence t = oracle::random_sequence(rng, 3, 4);
        CHECK(matches(Pattern::concrete(s), t) == (s == t));
    }
}

TEST_CASE("subsumes: worked examples") {
    CHECK(subsumes(pat("a|*|c"), pat("a|b|c")));
    CHECK(subsumes(pat("a|*"), pat("a|*|b|*")));
    CHECK_FALSE(subsumes(pat("a|b|c"), pat("a|*|c")));
    CHECK_FALSE(subsumes(pat("a|*|b|*"), pat("a|*")));
    CHECK(subsumes(pat("*"), pat("x|y|z")));
    CHECK_FALSE(subsumes(pat("x"), pat("*")));
}

TEST_CASE("subsumes is reflexive and transitive") {
    std::mt19937 rng(99101);
    std::vector<Pattern> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(oracle::random_pattern(rng, 3, 4));
    for (const Pattern& p : pool) CHECK(subsumes(p, p));
    for (const Pattern& a : pool)
        for (const Pattern& b : pool)
            for (const Pattern& c : pool)
                if (subsumes(a, b) && subsumes(b, c)) CHECK(subsumes(a, c));
}

TEST_CASE("pattern textual form round-trips") {
    for (const char* text : {"load|*|messages|*", "*", "a", "a|b|c", "*|x|*"}) {
        CHECK(Pattern::parse(text).str() == text);
    }
}

TEST_CASE("pattern parsing rejects malformed text") {
    CHECK_THROWS_AS(Pattern::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("a||b"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("A|b"), std::invalid_argument);
    CHECK_THROWS_AS(Pattern::parse("|a"), std::invalid_argument);
}

TEST_CASE("patterns canonicalize and classify themselves") {
    CHECK(pat("*").is_trivial());
    CHECK_FALSE(pat("a|*").is_trivial());
    CHECK(pat("a|b").is_concrete());
    CHECK_FALSE(pat("a|*").is_concrete());
    CHECK_THROWS_AS(Pattern::from_elements({}), std::invalid_argument);
    // parse never produces adjacent wildcards, so build one directly
    std::vector<PatternElement> raw = {PatternElement::wildcard(), PatternElement::wildcard()};
    CHECK(Pattern::from_elements(raw) == pat("*"));
}

TEST_CASE("element order puts literals before the wildcard") {
    CHECK(PatternElement::literal(epicure::Subtoken("z")) < PatternElement::wildcard());
    CHECK(pat("a|z") < pat("a|*"));
    CHECK(pat("a") < pat("b"));
}
