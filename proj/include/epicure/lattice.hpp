#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "epicure/pattern.hpp"
#include "epicure/subtoken.hpp"

namespace epicure {

/// Probability in (0,1]. Tolerates floating-point overshoot up to 1e-9
/// above 1 and clamps it away.
class Probability {
public:
    static constexpr double kTolerance = 1e-9;

    explicit Probability(double value);
    double value() const { return value_; }

    friend bool operator==(const Probability& a, const Probability& b) {
        return a.value_ == b.value_;
    }

private:
    double value_;
};

/// The concrete predictions of an upstream sequence model together with
/// their probabilities. Sequences are distinct and probabilities sum to
/// at most 1 (within tolerance).
class PredictionSet {
public:
    using Entry = std::pair<TokenSequence, Probability>;

    explicit PredictionSet(std::vector<Entry> entries);

    /// Sums the probabilities of duplicate sequences, preserving first
    /// appearance order. Use before construction when the input may repeat
    /// sequences (beams that collapse under subtokenization).
    static std::vector<Entry> merge_duplicates(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    double total_probability() const;

private:
    std::vector<Entry> entries_;
};

/// Probability a pattern inherits from the predictions it matches: the sum
/// of P(t) over the concrete entries t the pattern matches. A lower bound
/// on the probability the model assigns to all sequences matching it.
double pattern_probability(const Pattern& pattern, const PredictionSet& predictions);

struct LatticeOptions {
    /// Generalization rounds allowed before construction is aborted.
    int max_rounds = 64;
};

/// Raised when lattice construction exceeds the round limit.
class round_limit_error : public std::runtime_error {
public:
    explicit round_limit_error(int rounds)
        : std::runtime_error("lattice construction exceeded " + std::to_string(rounds) +
                             " rounds") {}
};

/// Generalization lattice over a prediction set: leaves are the concrete
/// predictions, inner nodes are joins, edges run from a pattern to its
/// nearest less-general descendants. Immutable once built.
class Lattice {
public:
    using NodeId = int;

    std::size_t node_count() const { return patterns_.size(); }
    const Pattern& pattern_of(NodeId id) const { return patterns_[id]; }
    double probability_of(NodeId id) const { return probs_[id]; }
    const std::vector<NodeId>& children_of(NodeId id) const { return children_[id]; }
    const std::vector<NodeId>& leaves() const { return leaves_; }
    NodeId top() const { return top_; }

    std::optional<NodeId> find(const Pattern& pattern) const;
    /// All node ids, most general first (top-down breadth order is not
    /// guaranteed; ordering is by descending probability, then pattern).
    std::vector<NodeId> nodes_by_generality() const;

private:
    friend Lattice build_lattice(const PredictionSet&, const LatticeOptions&);

    std::vector<Pattern> patterns_;
    std::vector<double> probs_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<NodeId> leaves_;
    NodeId top_ = 0;
    std::unordered_map<Pattern, NodeId> index_;
};

/// Builds the lattice by repeated pairwise joins: starting from the
/// concrete predictions, each round joins every pair of surviving patterns
/// and re-parents children so edges go to nearest descendants, until a
/// single pattern remains. Probabilities are then computed against the
/// original predictions, never propagated through edges. Throws
/// round_limit_error if the round cap is exceeded.
Lattice build_lattice(const PredictionSet& predictions, const LatticeOptions& opts = {});

/// The least general patterns whose probability exceeds theta.
struct SelectionResult {
    std::vector<Pattern> patterns;  // sorted, pairwise incomparable
    double theta = 0.0;

    bool empty() const { return patterns.empty(); }
    /// True when the selection abstains: empty or just the trivial [*].
    bool is_trivial() const;
};

/// Selects every lattice node with probability strictly above theta such
/// that no strictly-less-general node also exceeds theta. Theta must lie
/// in (0,1]. May return an empty selection when even the top node fails
/// the threshold. Pairwise compatibility of the result is only guaranteed
/// for theta > 0.5.
SelectionResult select_patterns(const Lattice& lattice, double theta);

/// A name is anomalous when it fails to match at least one selected
/// pattern. A trivial selection never raises an alarm.
bool is_anomalous(const TokenSequence& name, const SelectionResult& selection);

}  // namespace epicure
