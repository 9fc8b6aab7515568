#include "epicure/prediction_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace epicure {

namespace {

using nlohmann::json;

std::string where(std::size_t line, const std::string& id) {
    std::string out = "line " + std::to_string(line);
    if (!id.empty())
        out += " (record '" + id + "')";
    return out;
}

TokenSequence parse_tokens(const json& arr, std::size_t line, const std::string& id) {
    if (!arr.is_array() || arr.empty())
        throw load_error(where(line, id) + ": \"tokens\" must be a non-empty array");
    std::vector<Subtoken> tokens;
    for (const json& t : arr) {
        if (!t.is_string())
            throw load_error(where(line, id) + ": token entries must be strings");
        try {
            tokens.emplace_back(t.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw load_error(where(line, id) + ": " + e.what());
        }
    }
    return TokenSequence(std::move(tokens));
}

PredictionRecord parse_record(const json& obj, std::size_t line, const LoadOptions& opts) {
    if (!obj.is_object())
        throw load_error(where(line, "") + ": expected a JSON object");
    if (!obj.contains("id") || !obj.at("id").is_string())
        throw load_error(where(line, "") + ": missing string field \"id\"");
    const std::string id = obj.at("id").get<std::string>();

    if (!obj.contains("predictions") || !obj.at("predictions").is_array() ||
        obj.at("predictions").empty())
        throw load_error(where(line, id) + ": \"predictions\" must be a non-empty array");

    std::vector<PredictionSet::Entry> entries;
    for (const json& p : obj.at("predictions")) {
        if (!p.is_object() || !p.contains("prob") || !p.at("prob").is_number())
            throw load_error(where(line, id) + ": each prediction needs a numeric \"prob\"");
        double prob = p.at("prob").get<double>();
        if (opts.logprob)
            prob = std::exp(prob);

        const bool has_name = p.contains("name");
        const bool has_tokens = p.contains("tokens");
        if (has_name == has_tokens)
            throw load_error(where(line, id) +
                             ": each prediction needs exactly one of \"name\" or \"tokens\"");
        try {
            TokenSequence tokens = has_name
                                       ? subtokenize(p.at("name").get<std::string>(),
                                                     opts.subtokenize)
                                       : parse_tokens(p.at("tokens"), line, id);
            entries.emplace_back(std::move(tokens), Probability(prob));
        } catch (const load_error&) {
            throw;
        } catch (const std::invalid_argument& e) {
            throw load_error(where(line, id) + ": " + e.what());
        }
    }

    try {
        entries = PredictionSet::merge_duplicates(std::move(entries));
        if (opts.normalize) {
            double total = 0.0;
            for (const auto& e : entries)
                total += e.second.value();
            for (auto& e : entries)
                e.second = Probability(e.second.value() / total);
        }
    } catch (const std::invalid_argument& e) {
        throw load_error(where(line, id) + ": " + e.what());
    }

    std::optional<std::string> truth_raw;
    std::optional<TokenSequence> truth;
    if (obj.contains("ground_truth") && !obj.at("ground_truth").is_null()) {
        if (!obj.at("ground_truth").is_string())
            throw load_error(where(line, id) + ": \"ground_truth\" must be a string");
        truth_raw = obj.at("ground_truth").get<std::string>();
        try {
            truth = subtokenize(*truth_raw, opts.subtokenize);
        } catch (const std::invalid_argument& e) {
            throw load_error(where(line, id) + ": " + e.what());
        }
    }

    try {
        return PredictionRecord{id, std::move(truth_raw), std::move(truth),
                                PredictionSet(std::move(entries))};
    } catch (const std::invalid_argument& e) {
        throw load_error(where(line, id) + ": " + e.what());
    }
}

}  // namespace

std::vector<PredictionRecord> load_jsonl(std::istream& in, const LoadOptions& opts) {
    std::vector<PredictionRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.size() >= 3 && line.compare(0, 3, "\xef\xbb\xbf") == 0)
            line.erase(0, 3);  // UTF-8 BOM
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw load_error("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
        }
        records.push_back(parse_record(obj, line_no, opts));
    }
    return records;
}

std::vector<PredictionRecord> load_jsonl(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in)
        throw load_error("cannot open input file '" + path + "'");
    return load_jsonl(in, opts);
}

std::string serialize_record(const PredictionRecord& record) {
    json obj;
    obj["id"] = record.id;
    if (record.ground_truth_raw)
        obj["ground_truth"] = *record.ground_truth_raw;
    json preds = json::array();
    for (const auto& [tokens, prob] : record.predictions.entries()) {
        json p;
        json toks = json::array();
        for (const Subtoken& t : tokens)
            toks.push_back(t.text());
        p["tokens"] = std::move(toks);
        p["prob"] = prob.value();
        preds.push_back(std::move(p));
    }
    obj["predictions"] = std::move(preds);
    return obj.dump();
}

}  // namespace epicure
