#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/gui_mapping.hpp"
#include "guibl/index.hpp"
#include "guibl/json_io.hpp"
#include "guibl/report.hpp"

namespace guibl {

enum class QueryStrategy { base, expand, replace };
enum class RerankStrategy { none, filter, boost, filter_boost };

QueryStrategy parse_query_strategy(std::string_view name);    // throws ConfigError
RerankStrategy parse_rerank_strategy(std::string_view name);  // accepts "filter-boost" too
std::string_view to_string(QueryStrategy strategy);
std::string_view to_string(RerankStrategy strategy);

struct PipelineConfig {
    Scorer scorer = Scorer::bm25;
    QueryStrategy query_strategy = QueryStrategy::base;
    RerankStrategy rerank_strategy = RerankStrategy::none;
    int window = kDefaultWindow;
    TermSources term_sources = all_term_sources();
    double expansion_weight = 1.0;
    int top_k = 10;
    double component_threshold = kDefaultComponentThreshold;

    // Throws ConfigError describing the first invalid field.
    void validate() const;
    bool operator==(const PipelineConfig&) const = default;
};

Json to_json(const PipelineConfig& config);
// Overlays the fields present in `j` onto `base`. Unknown keys are rejected.
PipelineConfig config_from_json(const Json& j, PipelineConfig base = {});

inline constexpr std::string_view kFallbackReplaceEmpty = "replace_empty_gui_terms";
inline constexpr std::string_view kFallbackExpandEmpty = "expand_empty_gui_terms";
inline constexpr std::string_view kFallbackFilterEmpty = "filter_empty_gui_related";
inline constexpr std::string_view kFallbackBoostEmpty = "boost_empty_boosted";

struct Query {
    std::vector<std::string> terms;
    std::vector<std::string> flags;
};

// Title and body terms, in text order.
std::vector<std::string> report_terms(const BugReport& report, const text::Analyzer& analyzer);

Query build_query(std::span<const std::string> report_terms, const GuiContext& context, QueryStrategy strategy,
                  double expansion_weight = 1.0);

// Reorders or filters without touching scores. Flags fallbacks on the result.
RankedList apply_rerank(RankedList ranked, const GuiContext& context, RerankStrategy strategy);

struct Localization {
    RankedList ranking;  // flags carry every fallback marker
    GuiContext context;
};

Localization localize(const BugReport& report, const ReproTrace& trace, const CorpusIndex& index,
                      const PipelineConfig& config);

Json to_json(const GuiContext& context);
// {"report_id", "config", "fallbacks", "ranking": [{"rank", "path", "score", "gui_flags"}]}
Json localization_output(const BugReport& report, const PipelineConfig& config, const RankedList& ranking);

}  // namespace guibl
