#pragma once

#include <cstddef>
#include <vector>

#include "epicure/pattern.hpp"

namespace epicure {

/// A run of equal consecutive elements shared by two patterns.
struct MatchingBlock {
    std::size_t start_a = 0;
    std::size_t start_b = 0;
    std::size_t length = 0;

    friend bool operator==(const MatchingBlock&, const MatchingBlock&) = default;
};

/// Longest non-overlapping common blocks of the two element sequences,
/// computed by recursive gestalt matching: take the longest common
/// contiguous block (ties broken by smallest start_a, then smallest
/// start_b), then recurse on the prefixes and the suffixes. Elements
/// compare for exact equality, so a wildcard only matches a wildcard.
/// Blocks come back ordered, strictly increasing in both sequences.
std::vector<MatchingBlock> matching_blocks(const Pattern& a, const Pattern& b);

/// The join of two patterns: matching blocks are kept, every non-matching
/// gap becomes a wildcard, and adjacent wildcards collapse. Arguments are
/// ordered canonically first, making the operation symmetric. The result
/// subsumes both inputs.
Pattern join(const Pattern& a, const Pattern& b);

}  // namespace epicure
