#include "epicure/anti_unify.hpp"

#include <algorithm>

namespace epicure {

namespace {

struct Range {
    std::size_t a_lo, a_hi, b_lo, b_hi;
};

// Longest common contiguous block of a[a_lo..a_hi) and b[b_lo..b_hi).
// Scanning i ascending and extending runs with j ascending, combined with
// the strict size comparison, yields the smallest start_a / start_b block
// among equally long ones. No junk heuristics.
MatchingBlock longest_block(const std::vector<PatternElement>& a,
                            const std::vector<PatternElement>& b, const Range& r) {
    MatchingBlock best{r.a_lo, r.b_lo, 0};
    // run_len[j]: length of the common run ending at a[i-1], b[j-1].
    std::vector<std::size_t> run_len(b.size() + 1, 0), next_run(b.size() + 1, 0);
    for (std::size_t i = r.a_lo; i < r.a_hi; ++i) {
        std::fill(next_run.begin() + r.b_lo, next_run.begin() + r.b_hi + 1, 0);
        for (std::size_t j = r.b_lo; j < r.b_hi; ++j) {
            if (a[i] == b[j]) {
                std::size_t k = (j > r.b_lo ? run_len[j] : 0) + 1;
                next_run[j + 1] = k;
                if (k > best.length)
                    best = MatchingBlock{i - k + 1, j - k + 1, k};
            }
        }
        std::swap(run_len, next_run);
    }
    return best;
}

}  // namespace

std::vector<MatchingBlock> matching_blocks(const Pattern& a, const Pattern& b) {
    const auto& ea = a.elements();
    const auto& eb = b.elements();

    std::vector<MatchingBlock> blocks;
    std::vector<Range> queue{{0, ea.size(), 0, eb.size()}};
    while (!queue.empty()) {
        Range r = queue.back();
        queue.pop_back();
        if (r.a_lo >= r.a_hi || r.b_lo >= r.b_hi)
            continue;
        MatchingBlock blk = longest_block(ea, eb, r);
        if (blk.length == 0)
            continue;
        blocks.push_back(blk);
        queue.push_back({r.a_lo, blk.start_a, r.b_lo, blk.start_b});
        queue.push_back({blk.start_a + blk.length, r.a_hi, blk.start_b + blk.length, r.b_hi});
    }
    std::sort(blocks.begin(), blocks.end(), [](const MatchingBlock& x, const MatchingBlock& y) {
        return x.start_a < y.start_a;
    });

    // Merge blocks that abut in both sequences.
    std::vector<MatchingBlock> merged;
    for (const MatchingBlock& blk : blocks) {
        if (!merged.empty() && merged.back().start_a + merged.back().length == blk.start_a &&
            merged.back().start_b + merged.back().length == blk.start_b) {
            merged.back().length += blk.length;
        } else {
            merged.push_back(blk);
        }
    }
    return merged;
}

Pattern join(const Pattern& a, const Pattern& b) {
    // Fixed argument order makes the operation commutative.
    const Pattern& first = a <= b ? a : b;
    const Pattern& second = a <= b ? b : a;

    const auto& ea = first.elements();
    const auto& eb = second.elements();
    std::vector<MatchingBlock> blocks = matching_blocks(first, second);

    std::vector<PatternElement> out;
    std::size_t pa = 0, pb = 0;
    for (const MatchingBlock& blk : blocks) {
        if (blk.start_a > pa || blk.start_b > pb)
            out.push_back(PatternElement::wildcard());
        for (std::size_t k = 0; k < blk.length; ++k)
            out.push_back(ea[blk.start_a + k]);
        pa = blk.start_a + blk.length;
        pb = blk.start_b + blk.length;
    }
    if (pa < ea.size() || pb < eb.size())
        out.push_back(PatternElement::wildcard());

    return Pattern::from_elements(std::move(out));
}

}  // namespace epicure
