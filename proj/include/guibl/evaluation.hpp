#pragma once

#include <array>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/gui_model.hpp"
#include "guibl/index.hpp"
#include "guibl/pipeline.hpp"
#include "guibl/report.hpp"

namespace guibl {

std::vector<std::string> ranked_paths(const RankedList& ranked);

// Rank (1-based) of the first relevant path; nullopt when none is ranked.
std::optional<int> first_relevant_rank(std::span<const std::string> ranking, const std::set<std::string>& truth);

// 1 iff a truth path is in the top k. Throws InputError for empty truth and
// ConfigError for k < 1.
int hits_at_k(std::span<const std::string> ranking, const std::set<std::string>& truth, int k);
double reciprocal_rank(std::span<const std::string> ranking, const std::set<std::string>& truth);
// Mean over truth items of precision at each hit; unranked items count 0.
double average_precision(std::span<const std::string> ranking, const std::set<std::string>& truth);

struct ReportCase {
    BugReport report;
    ReproTrace trace;
};

struct Dataset {
    std::vector<ReportCase> cases;  // sorted by report_id
    int excluded_without_truth = 0;
};

// Pairs reports with traces by report_id == trace_id. Reports without ground
// truth are dropped and counted; a report without a trace is an InputError
// naming the report.
Dataset make_dataset(std::vector<BugReport> reports, std::vector<ReproTrace> traces);
// Reads every *.json under each directory.
Dataset load_dataset(const std::filesystem::path& reports_dir, const std::filesystem::path& traces_dir);

inline constexpr std::array<int, 3> kHitsCutoffs{1, 5, 10};

struct ReportEval {
    std::string report_id;
    std::optional<int> first_relevant_rank;
    double reciprocal_rank = 0.0;
    double average_precision = 0.0;
};

struct EvalResult {
    PipelineConfig config;
    std::vector<ReportEval> per_report;
    std::map<int, double> hits_at;
    double mrr = 0.0;
    double map_score = 0.0;
    int report_count = 0;
};

// Runs localize() on every case with the full ranking kept.
EvalResult evaluate_config(const Dataset& dataset, const CorpusIndex& index, const PipelineConfig& config);

// Mean first-relevant rank with misses counted as `miss_rank`.
double mean_first_relevant_rank(const EvalResult& result, int miss_rank);

Json to_json(const EvalResult& result);

// Cartesian grid over the PipelineConfig fields. Fields not swept come from `base`.
struct SweepGrid {
    std::vector<Scorer> scorers{Scorer::bm25};
    std::vector<QueryStrategy> query_strategies{QueryStrategy::base};
    std::vector<RerankStrategy> rerank_strategies{RerankStrategy::none};
    std::vector<int> windows{kDefaultWindow};
    std::vector<TermSources> term_sources{all_term_sources()};
    std::vector<double> expansion_weights{1.0};
    PipelineConfig base;

    std::size_t size() const;
    // Combinations in row order: lexicographic over value indices, fields in
    // declaration order. Throws ConfigError on empty or repeated dimensions.
    std::vector<PipelineConfig> expand() const;
};

// Keys: scorers, query_strategies, rerank_strategies, windows, term_sources,
// expansion_weights; each a list. Missing keys keep the defaults.
SweepGrid grid_from_json(const Json& j);

inline constexpr int kSweepCsvVersion = 1;
inline constexpr std::string_view kSweepCsvHeader =
    "scorer,query_strategy,rerank_strategy,window,term_sources,expansion_weight,hits1,hits5,hits10,mrr,map,reports";

// First six CSV columns; identifies a row for resume.
std::string sweep_row_key(const PipelineConfig& config);
std::string sweep_csv_row(const EvalResult& result);

struct SweepOptions {
    int jobs = 1;
    std::function<void(std::string_view)> log;  // progress and skip reasons
};

struct SweepOutcome {
    std::vector<std::string> rows;  // CSV lines in grid order, without header
    std::vector<std::string> skipped;
    int evaluated = 0;
    int reused = 0;
};

// Evaluates every valid combination. Rows whose key appears in `existing`
// (key -> CSV line) are reused instead of re-evaluated.
SweepOutcome sweep(const SweepGrid& grid, const Dataset& dataset, const CorpusIndex& index,
                   const SweepOptions& options = {}, const std::map<std::string, std::string>* existing = nullptr);

// Key -> line map of an existing sweep CSV; empty when the file is absent.
// Throws InputError when the header does not match.
std::map<std::string, std::string> read_sweep_csv(const std::filesystem::path& path);
std::string render_sweep_csv(const SweepOutcome& outcome);

}  // namespace guibl
