#include "guibl/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "guibl/error.hpp"

namespace guibl {

namespace fs = std::filesystem;

std::vector<std::string> ranked_paths(const RankedList& ranked) {
    std::vector<std::string> out;
    out.reserve(ranked.entries.size());
    for (const auto& e : ranked.entries) out.push_back(e.path);
    return out;
}

std::optional<int> first_relevant_rank(std::span<const std::string> ranking, const std::set<std::string>& truth) {
    for (std::size_t i = 0; i < ranking.size(); ++i)
        if (truth.count(ranking[i])) return static_cast<int>(i) + 1;
    return std::nullopt;
}

int hits_at_k(std::span<const std::string> ranking, const std::set<std::string>& truth, int k) {
    if (truth.empty()) throw InputError("hits_at_k: empty ground truth");
    if (k < 1) throw ConfigError("hits_at_k: k must be >= 1");
    auto rank = first_relevant_rank(ranking, truth);
    return rank && *rank <= k ? 1 : 0;
}

double reciprocal_rank(std::span<const std::string> ranking, const std::set<std::string>& truth) {
    auto rank = first_relevant_rank(ranking, truth);
    return rank ? 1.0 / *rank : 0.0;
}

double average_precision(std::span<const std::string> ranking, const std::set<std::string>& truth) {
    if (truth.empty()) return 0.0;
    double sum = 0.0;
    int hits = 0;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (truth.count(ranking[i])) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(truth.size());
}

Dataset make_dataset(std::vector<BugReport> reports, std::vector<ReproTrace> traces) {
    std::map<std::string, ReproTrace> by_id;
    for (auto& t : traces) {
        auto id = t.trace_id;
        if (!by_id.emplace(id, std::move(t)).second) throw InputError("duplicate trace_id: " + id);
    }
    std::sort(reports.begin(), reports.end(),
              [](const BugReport& a, const BugReport& b) { return a.report_id < b.report_id; });
    Dataset ds;
    std::set<std::string> seen;
    for (auto& r : reports) {
        if (!seen.insert(r.report_id).second) throw InputError("duplicate report_id: " + r.report_id);
        if (!r.ground_truth || r.ground_truth->empty()) {
            ++ds.excluded_without_truth;
            continue;
        }
        auto it = by_id.find(r.report_id);
        if (it == by_id.end()) throw InputError("no trace for report " + r.report_id);
        ds.cases.push_back({std::move(r), it->second});
    }
    return ds;
}

Dataset load_dataset(const fs::path& reports_dir, const fs::path& traces_dir) {
    auto json_files = [](const fs::path& dir) {
        std::error_code ec;
        if (!fs::is_directory(dir, ec)) throw InputError("not a directory: " + dir.string());
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        return files;
    };
    std::vector<BugReport> reports;
    for (const auto& p : json_files(reports_dir)) reports.push_back(load_report(p));
    std::vector<ReproTrace> traces;
    for (const auto& p : json_files(traces_dir)) traces.push_back(load_trace(p));
    return make_dataset(std::move(reports), std::move(traces));
}

EvalResult evaluate_config(const Dataset& dataset, const CorpusIndex& index, const PipelineConfig& config) {
    config.validate();
    auto full = config;
    full.top_k = std::numeric_limits<int>::max();

    EvalResult result;
    result.config = config;
    for (int k : kHitsCutoffs) result.hits_at[k] = 0.0;
    for (const auto& c : dataset.cases) {
        const auto& truth = *c.report.ground_truth;
        auto paths = ranked_paths(localize(c.report, c.trace, index, full).ranking);
        ReportEval r;
        r.report_id = c.report.report_id;
        r.first_relevant_rank = first_relevant_rank(paths, truth);
        r.reciprocal_rank = reciprocal_rank(paths, truth);
        r.average_precision = average_precision(paths, truth);
        for (int k : kHitsCutoffs) result.hits_at[k] += hits_at_k(paths, truth, k);
        result.mrr += r.reciprocal_rank;
        result.map_score += r.average_precision;
        result.per_report.push_back(std::move(r));
    }
    result.report_count = static_cast<int>(dataset.cases.size());
    if (result.report_count > 0) {
        const double n = result.report_count;
        for (auto& [k, v] : result.hits_at) v /= n;
        result.mrr /= n;
        result.map_score /= n;
    }
    return result;
}

double mean_first_relevant_rank(const EvalResult& result, int miss_rank) {
    if (result.per_report.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& r : result.per_report) sum += r.first_relevant_rank.value_or(miss_rank);
    return sum / static_cast<double>(result.per_report.size());
}

Json to_json(const EvalResult& r) {
    Json j;
    j["config"] = to_json(r.config);
    j["reports"] = r.report_count;
    j["hits_at"] = Json::object();
    for (const auto& [k, v] : r.hits_at) j["hits_at"][std::to_string(k)] = v;
    j["mrr"] = r.mrr;
    j["map"] = r.map_score;
    j["per_report"] = Json::array();
    for (const auto& p : r.per_report) {
        j["per_report"].push_back({{"report_id", p.report_id},
                                   {"first_relevant_rank", p.first_relevant_rank ? Json(*p.first_relevant_rank) : Json(nullptr)},
                                   {"reciprocal_rank", p.reciprocal_rank},
                                   {"average_precision", p.average_precision}});
    }
    return j;
}

// ---------------------------------------------------------------------------
// Sweeps

namespace {

template <typename T>
void check_dimension(const std::vector<T>& values, const char* name) {
    if (values.empty()) throw ConfigError(std::string("sweep dimension '") + name + "' is empty");
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t k = i + 1; k < values.size(); ++k)
            if (values[i] == values[k]) throw ConfigError(std::string("sweep dimension '") + name + "' repeats a value");
}

std::string format_number(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

template <typename T, typename Parse>
std::vector<T> parse_list(const Json& j, const char* key, Parse parse, std::vector<T> fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_array()) throw ConfigError(std::string("grid field '") + key + "' must be a list");
    std::vector<T> out;
    for (const auto& v : *it) out.push_back(parse(v));
    return out;
}

}  // namespace

std::size_t SweepGrid::size() const {
    return scorers.size() * query_strategies.size() * rerank_strategies.size() * windows.size() *
           term_sources.size() * expansion_weights.size();
}

std::vector<PipelineConfig> SweepGrid::expand() const {
    check_dimension(scorers, "scorers");
    check_dimension(query_strategies, "query_strategies");
    check_dimension(rerank_strategies, "rerank_strategies");
    check_dimension(windows, "windows");
    check_dimension(term_sources, "term_sources");
    check_dimension(expansion_weights, "expansion_weights");
    std::vector<PipelineConfig> out;
    out.reserve(size());
    for (auto s : scorers)
        for (auto q : query_strategies)
            for (auto r : rerank_strategies)
                for (auto w : windows)
                    for (const auto& t : term_sources)
                        for (auto e : expansion_weights) {
                            auto c = base;
                            c.scorer = s;
                            c.query_strategy = q;
                            c.rerank_strategy = r;
                            c.window = w;
                            c.term_sources = t;
                            c.expansion_weight = e;
                            out.push_back(std::move(c));
                        }
    return out;
}

SweepGrid grid_from_json(const Json& j) {
    if (!j.is_object()) throw ConfigError("sweep grid must be a JSON object");
    static const std::set<std::string> kKeys{"scorers", "query_strategies", "rerank_strategies", "windows",
                                             "term_sources", "expansion_weights", "base"};
    for (const auto& [key, v] : j.items())
        if (!kKeys.count(key)) throw ConfigError("unknown sweep grid key '" + key + "'");
    SweepGrid g;
    try {
        if (auto it = j.find("base"); it != j.end()) g.base = config_from_json(*it);
        g.scorers = parse_list<Scorer>(j, "scorers", [](const Json& v) { return parse_scorer(v.get<std::string>()); },
                                       {g.base.scorer});
        g.query_strategies = parse_list<QueryStrategy>(
            j, "query_strategies", [](const Json& v) { return parse_query_strategy(v.get<std::string>()); },
            {g.base.query_strategy});
        g.rerank_strategies = parse_list<RerankStrategy>(
            j, "rerank_strategies", [](const Json& v) { return parse_rerank_strategy(v.get<std::string>()); },
            {g.base.rerank_strategy});
        g.windows = parse_list<int>(j, "windows", [](const Json& v) { return v.get<int>(); }, {g.base.window});
        g.term_sources = parse_list<TermSources>(
            j, "term_sources", [](const Json& v) { return parse_term_sources(v.get<std::string>()); },
            {g.base.term_sources});
        g.expansion_weights = parse_list<double>(j, "expansion_weights", [](const Json& v) { return v.get<double>(); },
                                                 {g.base.expansion_weight});
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("invalid sweep grid: ") + e.what());
    }
    return g;
}

std::string sweep_row_key(const PipelineConfig& c) {
    std::string key;
    key += to_string(c.scorer);
    key += ',';
    key += to_string(c.query_strategy);
    key += ',';
    key += to_string(c.rerank_strategy);
    key += ',' + std::to_string(c.window);
    key += ',' + format_term_sources(c.term_sources);
    key += ',' + format_number("%g", c.expansion_weight);
    return key;
}

std::string sweep_csv_row(const EvalResult& r) {
    std::string row = sweep_row_key(r.config);
    for (int k : kHitsCutoffs) row += ',' + format_number("%.6f", r.hits_at.at(k));
    row += ',' + format_number("%.6f", r.mrr);
    row += ',' + format_number("%.6f", r.map_score);
    row += ',' + std::to_string(r.report_count);
    return row;
}

SweepOutcome sweep(const SweepGrid& grid, const Dataset& dataset, const CorpusIndex& index,
                   const SweepOptions& options, const std::map<std::string, std::string>* existing) {
    auto configs = grid.expand();
    auto log = [&options](std::string_view msg) {
        if (options.log) options.log(msg);
    };

    SweepOutcome outcome;
    std::vector<std::optional<std::string>> rows(configs.size());
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        auto key = sweep_row_key(configs[i]);
        try {
            configs[i].validate();
        } catch (const ConfigError& e) {
            outcome.skipped.push_back(key + ": " + e.what());
            log("skipping " + key + ": " + e.what());
            continue;
        }
        if (existing) {
            if (auto it = existing->find(key); it != existing->end()) {
                rows[i] = it->second;
                ++outcome.reused;
                continue;
            }
        }
        pending.push_back(i);
    }

    std::atomic<std::size_t> next{0};
    std::atomic<int> done{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        for (auto n = next++; n < pending.size(); n = next++) {
            auto i = pending[n];
            try {
                rows[i] = sweep_csv_row(evaluate_config(dataset, index, configs[i]));
                ++done;
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = pending.size();
            }
        }
    };
    const auto jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    if (jobs == 1 || pending.size() < 2) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (std::size_t t = 0; t < std::min(jobs, pending.size()); ++t) threads.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    outcome.evaluated = done.load();
    log("evaluated " + std::to_string(outcome.evaluated) + " configurations, reused " +
        std::to_string(outcome.reused) + ", skipped " + std::to_string(outcome.skipped.size()));

    for (auto& r : rows)
        if (r) outcome.rows.push_back(std::move(*r));
    return outcome;
}

std::map<std::string, std::string> read_sweep_csv(const fs::path& path) {
    std::map<std::string, std::string> rows;
    std::ifstream in(path);
    if (!in) return rows;
    std::string line;
    if (!std::getline(in, line)) return rows;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSweepCsvHeader) throw InputError("existing sweep file has an unexpected header: " + path.string());
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        // Key = first six comma-separated fields.
        std::size_t pos = std::string::npos;
        std::size_t from = 0;
        for (int i = 0; i < 6; ++i) {
            pos = line.find(',', from);
            if (pos == std::string::npos) break;
            from = pos + 1;
        }
        if (pos == std::string::npos) throw InputError("malformed sweep row in " + path.string() + ": " + line);
        rows[line.substr(0, pos)] = line;
    }
    return rows;
}

std::string render_sweep_csv(const SweepOutcome& outcome) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const auto& row : outcome.rows) out += row + '\n';
    return out;
}

}  // namespace guibl
