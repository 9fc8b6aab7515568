#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "epicure/lattice.hpp"
#include "epicure/metrics.hpp"
#include "epicure/prediction_io.hpp"

namespace epicure::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kFatal = 1, kPartial = 2 };

enum class EvalMethod { epicure, baseline, both };

/// Distills each record's predictions into the selected patterns at the
/// given theta, one JSON object per record in input order:
///   {"id": "...", "patterns": [{"pattern": "load|all|*", "prob": 0.21}]}
/// Records whose lattice exceeds the round limit are reported inline with
/// an "error" field and the run continues (exit code 2). An empty
/// selection is flagged "no_pattern".
int run_distill(const std::vector<PredictionRecord>& records, double theta,
                const LatticeOptions& opts, std::ostream& out, std::ostream& err);

/// Audits each record's ground-truth name against the patterns selected at
/// theta (anomaly mode; requires theta > 0.5). Per record emits the
/// anomalous flag plus the violated and matched pattern lists; a summary
/// line goes to the diagnostic stream.
int run_check(const std::vector<PredictionRecord>& records, double theta,
              const LatticeOptions& opts, std::ostream& out, std::ostream& err);

/// Sweeps the chosen method(s) over the thresholds and writes CSV. Single
/// method: columns threshold,far,regex_acc,cm,abstain. Both methods: a
/// leading method column tags each row. Records that fail to build a
/// lattice are dropped with a warning (exit code 2).
int run_eval(const std::vector<PredictionRecord>& records, EvalMethod method,
             const std::vector<double>& thresholds, const LatticeOptions& opts,
             std::ostream& out, std::ostream& err);

/// Renders one record's lattice as Graphviz DOT, nodes above min_prob
/// only, nodes above theta shaded.
int run_dot(const std::vector<PredictionRecord>& records, const std::string& record_id,
            double min_prob, double theta, const LatticeOptions& opts, std::ostream& out,
            std::ostream& err);

}  // namespace epicure::cli
