// Shorthand builders shared by the test files.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "epicure/lattice.hpp"
#include "epicure/pattern.hpp"
#include "epicure/subtoken.hpp"

namespace testutil {

inline epicure::TokenSequence seq(std::initializer_list<std::string> tokens) {
    std::vector<epicure::Subtoken> out;
    for (const auto& t : tokens) out.emplace_back(t);
    return epicure::TokenSequence(out);
}

/// Builds a pattern from its textual form, e.g. pat("load|*|messages").
inline epicure::Pattern pat(const std::string& text) { return epicure::Pattern::parse(text); }

inline epicure::PredictionSet::Entry entry(std::initializer_list<std::string> tokens,
                                           double prob) {
    return {seq(tokens), epicure::Probability(prob)};
}

}  // namespace testutil
