#include "epicure/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "epicure/anti_unify.hpp"

namespace epicure {

Probability::Probability(double value) {
    if (!(value > 0.0) || value > 1.0 + kTolerance)
        throw std::invalid_argument("probability " + std::to_string(value) +
                                    " outside (0, 1]");
    value_ = std::min(value, 1.0);
}

PredictionSet::PredictionSet(std::vector<Entry> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::invalid_argument("prediction set must have at least one entry");
    std::set<TokenSequence> seen;
    double total = 0.0;
    for (const Entry& e : entries_) {
        if (!seen.insert(e.first).second)
            throw std::invalid_argument("duplicate prediction '" + e.first.str() +
                                        "'; merge duplicates first");
        total += e.second.value();
    }
    if (total > 1.0 + Probability::kTolerance)
        throw std::invalid_argument("prediction probabilities sum to " +
                                    std::to_string(total) + " > 1");
}

std::vector<PredictionSet::Entry> PredictionSet::merge_duplicates(std::vector<Entry> entries) {
    std::vector<Entry> out;
    std::unordered_map<std::string, std::size_t> index;
    for (Entry& e : entries) {
        auto [it, inserted] = index.emplace(e.first.str(), out.size());
        if (inserted) {
            out.push_back(std::move(e));
        } else {
            Entry& kept = out[it->second];
            kept.second = Probability(kept.second.value() + e.second.value());
        }
    }
    return out;
}

double PredictionSet::total_probability() const {
    double total = 0.0;
    for (const Entry& e : entries_)
        total += e.second.value();
    return total;
}

double pattern_probability(const Pattern& pattern, const PredictionSet& predictions) {
    double sum = 0.0;
    for (const auto& [tokens, prob] : predictions.entries())
        if (matches(pattern, tokens))
            sum += prob.value();
    return sum;
}

std::optional<Lattice::NodeId> Lattice::find(const Pattern& pattern) const {
    auto it = index_.find(pattern);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<Lattice::NodeId> Lattice::nodes_by_generality() const {
    std::vector<NodeId> ids(patterns_.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        ids[i] = static_cast<NodeId>(i);
    std::sort(ids.begin(), ids.end(), [this](NodeId x, NodeId y) {
        if (probs_[x] != probs_[y])
            return probs_[x] > probs_[y];
        return patterns_[x] < patterns_[y];
    });
    return ids;
}

namespace {

// Interns patterns, memoizes joins, and runs the round loop.
class LatticeBuilder {
public:
    explicit LatticeBuilder(const PredictionSet& predictions, const LatticeOptions& opts)
        : predictions_(predictions), opts_(opts) {}

    /// Runs the round loop and returns the id of the final (top) pattern.
    int run() {
        std::vector<int> round;
        for (const auto& [tokens, prob] : predictions_.entries()) {
            int id = intern(Pattern::concrete(tokens));
            leaves_.push_back(id);
            round.push_back(id);
        }
        sort_by_pattern(round);

        int rounds_used = 0;
        while (round.size() > 1) {
            if (++rounds_used > opts_.max_rounds)
                throw round_limit_error(opts_.max_rounds);
            std::set<int> next;
            for (std::size_t i = 0; i < round.size(); ++i) {
                for (std::size_t j = i + 1; j < round.size(); ++j) {
                    int a = round[i], b = round[j];
                    int m = joined(a, b);
                    next.insert(m);
                    if (a != m)
                        adopt(m, a);
                    if (b != m)
                        adopt(m, b);
                }
            }
            round.assign(next.begin(), next.end());
            sort_by_pattern(round);
        }

        return round.front();
    }

    std::vector<std::vector<int>> sorted_children() const {
        std::vector<std::vector<int>> out;
        out.reserve(children_.size());
        for (const auto& kids_set : children_) {
            std::vector<int> kids(kids_set.begin(), kids_set.end());
            sort_by_pattern(kids);
            out.push_back(std::move(kids));
        }
        return out;
    }

    std::vector<Pattern> patterns_;
    std::unordered_map<Pattern, int> index_;
    std::vector<int> leaves_;

private:
    int intern(Pattern p) {
        auto it = index_.find(p);
        if (it != index_.end())
            return it->second;
        int id = static_cast<int>(patterns_.size());
        index_.emplace(p, id);
        patterns_.push_back(std::move(p));
        children_.emplace_back();
        return id;
    }

    int joined(int a, int b) {
        uint64_t key = (static_cast<uint64_t>(std::min(a, b)) << 32) |
                       static_cast<uint64_t>(std::max(a, b));
        auto it = join_memo_.find(key);
        if (it != join_memo_.end())
            return it->second;
        int id = intern(join(patterns_[a], patterns_[b]));
        join_memo_.emplace(key, id);
        return id;
    }

    // c[parent] <- (c[parent] u {child}) \ c[child]: the child joins the
    // parent's edge set and any of the child's own children stop being
    // direct children of the parent.
    void adopt(int parent, int child) {
        children_[parent].insert(child);
        for (int grandchild : children_[child])
            children_[parent].erase(grandchild);
    }

    void sort_by_pattern(std::vector<int>& ids) const {
        std::sort(ids.begin(), ids.end(),
                  [this](int x, int y) { return patterns_[x] < patterns_[y]; });
    }

    const PredictionSet& predictions_;
    const LatticeOptions& opts_;
    std::vector<std::set<int>> children_;
    std::unordered_map<uint64_t, int> join_memo_;
};

}  // namespace

Lattice build_lattice(const PredictionSet& predictions, const LatticeOptions& opts) {
    LatticeBuilder builder(predictions, opts);
    int top = builder.run();

    Lattice lat;
    lat.children_ = builder.sorted_children();
    lat.patterns_ = std::move(builder.patterns_);
    lat.index_ = std::move(builder.index_);
    lat.leaves_ = std::move(builder.leaves_);
    lat.top_ = top;
    lat.probs_.reserve(lat.patterns_.size());
    for (const Pattern& p : lat.patterns_)
        lat.probs_.push_back(pattern_probability(p, predictions));
    return lat;
}

bool SelectionResult::is_trivial() const {
    for (const Pattern& p : patterns)
        if (!p.is_trivial())
            return false;
    return true;
}

SelectionResult select_patterns(const Lattice& lattice, double theta) {
    if (!(theta > 0.0) || theta > 1.0)
        throw std::invalid_argument("theta must lie in (0, 1]");

    std::vector<Lattice::NodeId> qualifying;
    for (std::size_t id = 0; id < lattice.node_count(); ++id)
        if (lattice.probability_of(static_cast<int>(id)) > theta)
            qualifying.push_back(static_cast<int>(id));

    SelectionResult result;
    result.theta = theta;
    for (int candidate : qualifying) {
        const Pattern& cp = lattice.pattern_of(candidate);
        bool minimal = true;
        for (int other : qualifying) {
            if (other == candidate)
                continue;
            const Pattern& op = lattice.pattern_of(other);
            // `other` strictly less general than `candidate`.
            if (subsumes(cp, op) && !subsumes(op, cp)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            result.patterns.push_back(cp);
    }
    std::sort(result.patterns.begin(), result.patterns.end());
    return result;
}

bool is_anomalous(const TokenSequence& name, const SelectionResult& selection) {
    for (const Pattern& p : selection.patterns)
        if (!matches(p, name))
            return true;
    return false;
}

}  // namespace epicure
