#include "epicure/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "epicure/dot.hpp"
#include "json.hpp"

namespace epicure::cli {

namespace {

using nlohmann::json;

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

bool valid_theta(double theta) { return theta > 0.0 && theta <= 1.0; }

void warn_failed(std::ostream& err, const std::vector<std::string>& failed,
                 const char* verb) {
    if (failed.empty()) return;
    err << failed.size() << " record(s) " << verb << ":";
    for (const auto& id : failed) err << " " << id;
    err << "\n";
}

}  // namespace

int run_distill(const std::vector<PredictionRecord>& records, double theta,
                const LatticeOptions& opts, std::ostream& out, std::ostream& err) {
    if (!valid_theta(theta)) {
        err << "error: theta must lie in (0, 1], got " << theta << "\n";
        return kFatal;
    }
    std::vector<std::string> failed;
    for (const auto& rec : records) {
        json line;
        line["id"] = rec.id;
        try {
            Lattice lattice = build_lattice(rec.predictions, opts);
            SelectionResult selection = select_patterns(lattice, theta);
            json patterns = json::array();
            for (const auto& p : selection.patterns) {
                patterns.push_back({{"pattern", p.str()},
                                    {"prob", lattice.probability_of(*lattice.find(p))}});
            }
            line["patterns"] = std::move(patterns);
            if (selection.empty()) line["no_pattern"] = true;
        } catch (const round_limit_error& e) {
            line["error"] = e.what();
            err << "record " << rec.id << ": " << e.what() << "\n";
            failed.push_back(rec.id);
        }
        out << line.dump() << "\n";
    }
    warn_failed(err, failed, "failed");
    return failed.empty() ? kOk : kPartial;
}

int run_check(const std::vector<PredictionRecord>& records, double theta,
              const LatticeOptions& opts, std::ostream& out, std::ostream& err) {
    if (!(theta > 0.5 && theta <= 1.0)) {
        err << "error: check requires theta in (0.5, 1]; above 0.5 the selected patterns "
               "share a witness prediction, so violating one is meaningful evidence\n";
        return kFatal;
    }
    for (const auto& rec : records) {
        if (!rec.ground_truth) {
            err << "error: record " << rec.id << " has no ground_truth to audit\n";
            return kFatal;
        }
    }
    std::vector<std::string> failed;
    int anomalous_count = 0;
    int abstained_count = 0;
    for (const auto& rec : records) {
        json line;
        line["id"] = rec.id;
        try {
            Lattice lattice = build_lattice(rec.predictions, opts);
            SelectionResult selection = select_patterns(lattice, theta);
            json matched = json::array();
            json violated = json::array();
            for (const auto& p : selection.patterns) {
                (matches(p, *rec.ground_truth) ? matched : violated).push_back(p.str());
            }
            bool abstained = selection.is_trivial();
            bool anomalous = is_anomalous(*rec.ground_truth, selection);
            line["anomalous"] = anomalous;
            line["abstained"] = abstained;
            line["matched"] = std::move(matched);
            line["violated"] = std::move(violated);
            anomalous_count += anomalous ? 1 : 0;
            abstained_count += abstained ? 1 : 0;
        } catch (const round_limit_error& e) {
            line["error"] = e.what();
            err << "record " << rec.id << ": " << e.what() << "\n";
            failed.push_back(rec.id);
        }
        out << line.dump() << "\n";
    }
    json summary;
    summary["summary"] = {{"records", records.size()},
                          {"anomalous", anomalous_count},
                          {"abstained", abstained_count},
                          {"errors", failed.size()}};
    out << summary.dump() << "\n";
    warn_failed(err, failed, "failed");
    return failed.empty() ? kOk : kPartial;
}

int run_eval(const std::vector<PredictionRecord>& records, EvalMethod method,
             const std::vector<double>& thresholds, const LatticeOptions& opts,
             std::ostream& out, std::ostream& err) {
    if (thresholds.empty()) {
        err << "error: eval requires at least one threshold\n";
        return kFatal;
    }
    bool wants_epicure = method != EvalMethod::baseline;
    if (wants_epicure) {
        for (double t : thresholds) {
            if (!valid_theta(t)) {
                err << "error: epicure thresholds must lie in (0, 1], got " << t << "\n";
                return kFatal;
            }
        }
    }
    std::vector<EvalSample> samples;
    std::vector<std::string> dropped;
    for (const auto& rec : records) {
        if (!rec.ground_truth) {
            err << "error: record " << rec.id << " has no ground_truth to evaluate against\n";
            return kFatal;
        }
        if (wants_epicure) {
            // Probe the lattice so one pathological record cannot sink the
            // sweep; dropping it from both curves keeps denominators equal.
            try {
                build_lattice(rec.predictions, opts);
            } catch (const round_limit_error& e) {
                err << "record " << rec.id << " dropped: " << e.what() << "\n";
                dropped.push_back(rec.id);
                continue;
            }
        }
        samples.push_back(EvalSample{rec.predictions, *rec.ground_truth});
    }
    if (samples.empty()) {
        err << "error: no evaluable records\n";
        return kFatal;
    }
    if (method == EvalMethod::both) {
        out << "method,threshold,far,regex_acc,cm,abstain\n";
        for (SweepMethod m : {SweepMethod::epicure, SweepMethod::baseline}) {
            const char* name = m == SweepMethod::epicure ? "epicure" : "baseline";
            for (const auto& pt : sweep(samples, m, thresholds, opts)) {
                out << name << "," << fixed6(pt.threshold) << "," << fixed6(pt.far) << ","
                    << fixed6(pt.regex_acc_mean) << "," << fixed6(pt.cm_rate) << ","
                    << fixed6(pt.abstain_rate) << "\n";
            }
        }
    } else {
        SweepMethod m =
            method == EvalMethod::epicure ? SweepMethod::epicure : SweepMethod::baseline;
        write_sweep_csv(out, sweep(samples, m, thresholds, opts));
    }
    warn_failed(err, dropped, "dropped");
    return dropped.empty() ? kOk : kPartial;
}

int run_dot(const std::vector<PredictionRecord>& records, const std::string& record_id,
            double min_prob, double theta, const LatticeOptions& opts, std::ostream& out,
            std::ostream& err) {
    auto it = std::find_if(records.begin(), records.end(),
                           [&](const PredictionRecord& r) { return r.id == record_id; });
    if (it == records.end()) {
        err << "error: unknown record id '" << record_id << "'\n";
        return kFatal;
    }
    try {
        Lattice lattice = build_lattice(it->predictions, opts);
        DotOptions dopts;
        dopts.min_prob = min_prob;
        dopts.theta = theta;
        out << render_dot(lattice, dopts);
    } catch (const round_limit_error& e) {
        err << "record " << record_id << ": " << e.what() << "\n";
        return kFatal;
    }
    return kOk;
}

}  // namespace epicure::cli
