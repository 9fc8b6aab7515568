#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "epicure/commands.hpp"
#include "epicure/prediction_io.hpp"

namespace {

using namespace epicure;
using namespace epicure::cli;

struct CommonArgs {
    std::string input;
    std::string output;
    LoadOptions load;
    LatticeOptions lattice;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-i,--input", args.input, "JSONL prediction file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("-o,--output", args.output, "output file (default: stdout)");
    cmd->add_flag("--logprob", args.load.logprob,
                  "input probabilities are natural-log probabilities");
    cmd->add_flag("--normalize", args.load.normalize,
                  "rescale each record's probabilities to sum to 1");
    cmd->add_flag_callback(
        "--no-digit-split",
        [&args] { args.load.subtokenize.split_digits = false; },
        "keep digit runs attached to neighboring letters when subtokenizing");
    cmd->add_option("--max-rounds", args.lattice.max_rounds,
                    "generalization rounds allowed per lattice")
        ->check(CLI::PositiveNumber);
}

std::vector<double> default_thresholds(EvalMethod method) {
    std::vector<double> grid;
    int lo = method == EvalMethod::epicure ? 11 : 1;
    for (int i = lo; i <= 19; ++i) grid.push_back(i * 0.05);
    return grid;
}

// Runs one subcommand: load the records, open the sink, dispatch.
template <typename Fn>
int with_records(const CommonArgs& args, Fn&& fn) {
    std::vector<PredictionRecord> records;
    try {
        records = load_jsonl(args.input, args.load);
    } catch (const load_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFatal;
    }
    if (args.output.empty()) return fn(records, std::cout);
    std::ofstream out(args.output);
    if (!out) {
        std::cerr << "error: cannot open " << args.output << " for writing\n";
        return kFatal;
    }
    return fn(records, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distill beam-search name predictions into wildcard pattern lattices"};
    app.require_subcommand(1);

    CommonArgs distill_args;
    double distill_theta = 0.55;
    CLI::App* distill = app.add_subcommand(
        "distill", "select high-probability least-general patterns per record");
    add_common(distill, distill_args);
    distill->add_option("--theta", distill_theta, "selection probability threshold in (0,1]");

    CommonArgs check_args;
    double check_theta = 0.55;
    CLI::App* check = app.add_subcommand(
        "check", "audit each record's ground-truth name against its selected patterns");
    add_common(check, check_args);
    check->add_option("--theta", check_theta,
                      "selection probability threshold in (0.5, 1]");

    CommonArgs eval_args;
    EvalMethod eval_method = EvalMethod::epicure;
    std::vector<double> eval_thresholds;
    CLI::App* eval = app.add_subcommand(
        "eval", "sweep thresholds and report false-alarm-rate curves as CSV");
    add_common(eval, eval_args);
    eval->add_option("--method", eval_method, "method(s) to evaluate")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, EvalMethod>{{"epicure", EvalMethod::epicure},
                                              {"baseline", EvalMethod::baseline},
                                              {"both", EvalMethod::both}},
            CLI::ignore_case));
    eval->add_option("--thresholds", eval_thresholds,
                     "thresholds to sweep (default: a 0.05-step grid)");

    CommonArgs dot_args;
    std::string dot_record;
    double dot_min_prob = 0.0;
    double dot_theta = 0.55;
    CLI::App* dot =
        app.add_subcommand("dot", "render one record's lattice as Graphviz DOT");
    add_common(dot, dot_args);
    dot->add_option("--record", dot_record, "id of the record to render")->required();
    dot->add_option("--min-prob", dot_min_prob, "hide nodes at or below this probability");
    dot->add_option("--theta", dot_theta, "shade nodes above this probability");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kFatal;
    }

    if (distill->parsed()) {
        return with_records(distill_args, [&](const auto& records, std::ostream& out) {
            return run_distill(records, distill_theta, distill_args.lattice, out, std::cerr);
        });
    }
    if (check->parsed()) {
        return with_records(check_args, [&](const auto& records, std::ostream& out) {
            return run_check(records, check_theta, check_args.lattice, out, std::cerr);
        });
    }
    if (eval->parsed()) {
        if (eval_thresholds.empty()) eval_thresholds = default_thresholds(eval_method);
        return with_records(eval_args, [&](const auto& records, std::ostream& out) {
            return run_eval(records, eval_method, eval_thresholds, eval_args.lattice, out,
                            std::cerr);
        });
    }
    return with_records(dot_args, [&](const auto& records, std::ostream& out) {
        return run_dot(records, dot_record, dot_min_prob, dot_theta, dot_args.lattice, out,
                       std::cerr);
    });
}
