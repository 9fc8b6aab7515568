#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epicure/lattice.hpp"
#include "epicure/subtoken.hpp"

namespace epicure {

/// Fatal input-file problem; the message carries line number and record id
/// where known.
class load_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One input sample: a set of concrete predictions for an identifier,
/// optionally paired with the ground-truth name being predicted or audited.
struct PredictionRecord {
    std::string id;
    std::optional<std::string> ground_truth_raw;
    std::optional<TokenSequence> ground_truth;
    PredictionSet predictions;
};

struct LoadOptions {
    /// Input probabilities are natural-log probabilities; exponentiate.
    bool logprob = false;
    /// Rescale each record's probabilities to sum to 1.
    bool normalize = false;
    SubtokenizeOptions subtokenize;
};

/// Reads one JSON object per line:
///   {"id": "...", "ground_truth": "...",
///    "predictions": [{"name": "loadAll", "prob": 0.5}, ...]}
/// Predictions may carry pre-split "tokens" instead of "name". Names are
/// subtokenized and duplicate sequences merged by summing probabilities.
/// Throws load_error on the first malformed line or invalid field.
std::vector<PredictionRecord> load_jsonl(const std::string& path, const LoadOptions& opts = {});
std::vector<PredictionRecord> load_jsonl(std::istream& in, const LoadOptions& opts = {});

/// One JSON line in the input schema (tokens form), without trailing
/// newline. Loading the serialized record yields the record back.
std::string serialize_record(const PredictionRecord& record);

}  // namespace epicure
