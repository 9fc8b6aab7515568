#pragma once

#include <iosfwd>
#include <set>
#include <vector>

#include "epicure/lattice.hpp"
#include "epicure/pattern.hpp"
#include "epicure/subtoken.hpp"

namespace epicure {

/// Distinct literal subtokens of a pattern set, wildcards dropped.
std::set<Subtoken> pattern_subtokens(const std::vector<Pattern>& patterns);

/// Fraction of the ground truth's distinct subtokens recalled by the
/// pattern set; zero if any pattern fails to match the truth. Always in
/// [0,1]: a matching pattern's literals all occur in the truth.
double regex_acc(const std::vector<Pattern>& selection, const TokenSequence& truth);

/// 1 iff the pattern set contains at least one literal somewhere and every
/// pattern matches the truth; 0 otherwise. A bare [*] selection counts 0.
int complete_match(const std::vector<Pattern>& selection, const TokenSequence& truth);

/// Precision filter baseline: the single most probable prediction as a
/// concrete pattern, or {[*]} when its probability is below the threshold.
/// Ties on the maximum probability go to the lexicographically smallest
/// token sequence.
std::vector<Pattern> baseline_top1(const PredictionSet& predictions, double threshold);

/// One evaluation sample: the model's predictions plus the ground truth.
struct EvalSample {
    PredictionSet predictions;
    TokenSequence truth;
};

enum class SweepMethod { epicure, baseline };

/// One point of a false-alarm-rate curve. All rates use the full corpus as
/// denominator; false alarms, match successes, and abstentions partition
/// the samples.
struct SweepPoint {
    double threshold = 0.0;
    double far = 0.0;
    double regex_acc_mean = 0.0;
    double cm_rate = 0.0;
    double abstain_rate = 0.0;
};

/// Evaluates the chosen method at each threshold. A sample is a false
/// alarm when its emitted pattern set is nontrivial and fails to match the
/// truth; trivial emissions (empty or bare [*]) are abstentions. Lattices
/// are built once per sample and reused across thresholds.
std::vector<SweepPoint> sweep(const std::vector<EvalSample>& corpus, SweepMethod method,
                              const std::vector<double>& thresholds,
                              const LatticeOptions& opts = {});

/// CSV rows "threshold,far,regex_acc,cm,abstain" with six fractional
/// digits, one line per point, header included.
void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points);

}  // namespace epicure
