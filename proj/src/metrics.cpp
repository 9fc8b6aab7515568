#include "epicure/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace epicure {

std::set<Subtoken> pattern_subtokens(const std::vector<Pattern>& patterns) {
    std::set<Subtoken> out;
    for (const Pattern& p : patterns)
        for (const PatternElement& e : p.elements())
            if (e.is_literal())
                out.insert(e.token());
    return out;
}

namespace {

bool all_match(const std::vector<Pattern>& selection, const TokenSequence& truth) {
    for (const Pattern& p : selection)
        if (!matches(p, truth))
            return false;
    return true;
}

}  // namespace

double regex_acc(const std::vector<Pattern>& selection, const TokenSequence& truth) {
    if (selection.empty())
        throw std::invalid_argument("regex_acc requires a non-empty selection");
    if (!all_match(selection, truth))
        return 0.0;
    std::set<Subtoken> truth_subtokens(truth.begin(), truth.end());
    std::set<Subtoken> recalled = pattern_subtokens(selection);
    return static_cast<double>(recalled.size()) / static_cast<double>(truth_subtokens.size());
}

int complete_match(const std::vector<Pattern>& selection, const TokenSequence& truth) {
    if (selection.empty())
        throw std::invalid_argument("complete_match requires a non-empty selection");
    if (pattern_subtokens(selection).empty())
        return 0;
    return all_match(selection, truth) ? 1 : 0;
}

std::vector<Pattern> baseline_top1(const PredictionSet& predictions, double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw std::invalid_argument("baseline threshold must lie in [0, 1]");
    const PredictionSet::Entry* top = &predictions.entries().front();
    for (const PredictionSet::Entry& e : predictions.entries()) {
        if (e.second.value() > top->second.value() ||
            (e.second.value() == top->second.value() && e.first < top->first))
            top = &e;
    }
    if (top->second.value() < threshold)
        return {Pattern::wildcard()};
    return {Pattern::concrete(top->first)};
}

std::vector<SweepPoint> sweep(const std::vector<EvalSample>& corpus, SweepMethod method,
                              const std::vector<double>& thresholds,
                              const LatticeOptions& opts) {
    if (corpus.empty())
        throw std::invalid_argument("sweep requires a non-empty corpus");
    if (thresholds.empty())
        throw std::invalid_argument("sweep requires at least one threshold");

    std::vector<Lattice> lattices;
    if (method == SweepMethod::epicure) {
        lattices.reserve(corpus.size());
        for (const EvalSample& sample : corpus)
            lattices.push_back(build_lattice(sample.predictions, opts));
    }

    std::vector<SweepPoint> points;
    points.reserve(thresholds.size());
    for (double threshold : thresholds) {
        std::size_t alarms = 0, abstentions = 0;
        double acc_sum = 0.0;
        std::size_t cm_sum = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const EvalSample& sample = corpus[i];
            std::vector<Pattern> emitted;
            if (method == SweepMethod::epicure)
                emitted = select_patterns(lattices[i], threshold).patterns;
            else
                emitted = baseline_top1(sample.predictions, threshold);

            if (emitted.empty() || pattern_subtokens(emitted).empty()) {
                ++abstentions;  // contributes 0 to both metrics
                continue;
            }
            double acc = regex_acc(emitted, sample.truth);
            int cm = complete_match(emitted, sample.truth);
            acc_sum += acc;
            cm_sum += static_cast<std::size_t>(cm);
            if (cm == 0)
                ++alarms;  // nontrivial emission that failed to match
        }
        const double n = static_cast<double>(corpus.size());
        SweepPoint point;
        point.threshold = threshold;
        point.far = static_cast<double>(alarms) / n;
        point.regex_acc_mean = acc_sum / n;
        point.cm_rate = static_cast<double>(cm_sum) / n;
        point.abstain_rate = static_cast<double>(abstentions) / n;
        points.push_back(point);
    }
    return points;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepPoint>& points) {
    out << "threshold,far,regex_acc,cm,abstain\n";
    char row[160];
    for (const SweepPoint& p : points) {
        std::snprintf(row, sizeof(row), "%.6f,%.6f,%.6f,%.6f,%.6f\n", p.threshold, p.far,
                      p.regex_acc_mean, p.cm_rate, p.abstain_rate);
        out << row;
    }
}

}  // namespace epicure
