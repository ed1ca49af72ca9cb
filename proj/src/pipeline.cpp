#include "guibl/pipeline.hpp"

#include <cmath>

#include "guibl/error.hpp"

namespace guibl {

QueryStrategy parse_query_strategy(std::string_view name) {
    if (name == "base") return QueryStrategy::base;
    if (name == "expand") return QueryStrategy::expand;
    if (name == "replace") return QueryStrategy::replace;
    throw ConfigError("unknown query strategy '" + std::string(name) + "' (valid: base, expand, replace)");
}

RerankStrategy parse_rerank_strategy(std::string_view name) {
    if (name == "none") return RerankStrategy::none;
    if (name == "filter") return RerankStrategy::filter;
    if (name == "boost") return RerankStrategy::boost;
    if (name == "filter_boost" || name == "filter-boost") return RerankStrategy::filter_boost;
    throw ConfigError("unknown rerank strategy '" + std::string(name) +
                      "' (valid: none, filter, boost, filter_boost)");
}

std::string_view to_string(QueryStrategy strategy) {
    switch (strategy) {
        case QueryStrategy::base: return "base";
        case QueryStrategy::expand: return "expand";
        case QueryStrategy::replace: return "replace";
    }
    return "base";
}

std::string_view to_string(RerankStrategy strategy) {
    switch (strategy) {
        case RerankStrategy::none: return "none";
        case RerankStrategy::filter: return "filter";
        case RerankStrategy::boost: return "boost";
        case RerankStrategy::filter_boost: return "filter_boost";
    }
    return "none";
}

void PipelineConfig::validate() const {
    if (window < 1) throw ConfigError("window must be >= 1, got " + std::to_string(window));
    if (!(expansion_weight > 0.0) || !std::isfinite(expansion_weight))
        throw ConfigError("expansion_weight must be > 0");
    if (top_k < 1) throw ConfigError("top_k must be >= 1, got " + std::to_string(top_k));
    if (term_sources.empty()) throw ConfigError("GUI term source set is empty");
    if (!(component_threshold > 0.0 && component_threshold <= 1.0))
        throw ConfigError("component_threshold must be in (0, 1]");
}

Json to_json(const PipelineConfig& c) {
    Json j;
    j["scorer"] = to_string(c.scorer);
    j["query_strategy"] = to_string(c.query_strategy);
    j["rerank_strategy"] = to_string(c.rerank_strategy);
    j["window"] = c.window;
    j["term_sources"] = format_term_sources(c.term_sources);
    j["expansion_weight"] = c.expansion_weight;
    j["top_k"] = c.top_k;
    j["component_threshold"] = c.component_threshold;
    return j;
}

PipelineConfig config_from_json(const Json& j, PipelineConfig base) {
    if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "scorer") base.scorer = parse_scorer(value.get<std::string>());
            else if (key == "query_strategy") base.query_strategy = parse_query_strategy(value.get<std::string>());
            else if (key == "rerank_strategy") base.rerank_strategy = parse_rerank_strategy(value.get<std::string>());
            else if (key == "window") base.window = value.get<int>();
            else if (key == "term_sources") base.term_sources = parse_term_sources(value.get<std::string>());
            else if (key == "expansion_weight") base.expansion_weight = value.get<double>();
            else if (key == "top_k") base.top_k = value.get<int>();
            else if (key == "component_threshold") base.component_threshold = value.get<double>();
            else throw ConfigError("unknown configuration key '" + key + "'");
        }
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("invalid configuration value: ") + e.what());
    }
    return base;
}

std::vector<std::string> report_terms(const BugReport& report, const text::Analyzer& analyzer) {
    return analyzer.analyze(report.title + "\n" + report.body);
}

Query build_query(std::span<const std::string> report_terms, const GuiContext& context, QueryStrategy strategy,
                  double expansion_weight) {
    Query q;
    std::vector<std::string> gui;
    const auto repeat = static_cast<int>(std::lround(expansion_weight));
    for (const auto& [term, count] : context.terms)
        for (int i = 0; i < count * (strategy == QueryStrategy::expand ? repeat : 1); ++i) gui.push_back(term);

    q.terms.assign(report_terms.begin(), report_terms.end());
    switch (strategy) {
        case QueryStrategy::base:
            break;
        case QueryStrategy::expand:
            if (context.terms.empty()) q.flags.emplace_back(kFallbackExpandEmpty);
            q.terms.insert(q.terms.end(), gui.begin(), gui.end());
            break;
        case QueryStrategy::replace:
            if (gui.empty()) {
                q.flags.emplace_back(kFallbackReplaceEmpty);
            } else {
                q.terms = std::move(gui);
            }
            break;
    }
    return q;
}

namespace {

void annotate(RankedList& ranked, const GuiContext& context) {
    for (auto& e : ranked.entries) {
        if (context.activity_files.count(e.path)) e.gui_flags.emplace(kFlagActivity);
        if (context.listener_files.count(e.path)) e.gui_flags.emplace(kFlagListener);
        if (context.component_files.count(e.path)) e.gui_flags.emplace(kFlagComponent);
    }
}

void filter(RankedList& ranked, const std::set<std::string>& related) {
    if (related.empty()) {
        ranked.flags.emplace_back(kFallbackFilterEmpty);
        return;
    }
    std::erase_if(ranked.entries, [&](const RankedEntry& e) { return !related.count(e.path); });
}

void boost(RankedList& ranked, const std::set<std::string>& boosted) {
    if (boosted.empty()) {
        ranked.flags.emplace_back(kFallbackBoostEmpty);
        return;
    }
    std::stable_partition(ranked.entries.begin(), ranked.entries.end(),
                          [&](const RankedEntry& e) { return boosted.count(e.path) > 0; });
}

}  // namespace

RankedList apply_rerank(RankedList ranked, const GuiContext& context, RerankStrategy strategy) {
    if (strategy == RerankStrategy::none) return ranked;
    annotate(ranked, context);
    switch (strategy) {
        case RerankStrategy::none:
            break;
        case RerankStrategy::filter:
            filter(ranked, context.gui_related());
            break;
        case RerankStrategy::boost:
            boost(ranked, context.boosted());
            break;
        case RerankStrategy::filter_boost:
            filter(ranked, context.gui_related());
            boost(ranked, context.boosted());
            break;
    }
    return ranked;
}

Localization localize(const BugReport& report, const ReproTrace& trace, const CorpusIndex& index,
                      const PipelineConfig& config) {
    config.validate();
    Localization out;
    out.context = gui_context(trace, config.window, index, config.term_sources, config.component_threshold);
    auto base_terms = report_terms(report, index.analyzer());
    auto query = build_query(base_terms, out.context, config.query_strategy, config.expansion_weight);
    auto ranked = rank(index, query.terms, config.scorer);
    ranked.flags.insert(ranked.flags.begin(), query.flags.begin(), query.flags.end());
    ranked = apply_rerank(std::move(ranked), out.context, config.rerank_strategy);
    if (ranked.entries.size() > static_cast<std::size_t>(config.top_k))
        ranked.entries.resize(static_cast<std::size_t>(config.top_k));
    out.ranking = std::move(ranked);
    return out;
}

Json to_json(const GuiContext& c) {
    Json j;
    j["window_used"] = c.window_used;
    j["terms"] = Json::object();
    for (const auto& [t, n] : c.terms) j["terms"][t] = n;
    j["activity_files"] = c.activity_files;
    j["listener_files"] = c.listener_files;
    j["component_files"] = c.component_files;
    j["gui_related"] = c.gui_related();
    j["boosted"] = c.boosted();
    return j;
}

Json localization_output(const BugReport& report, const PipelineConfig& config, const RankedList& ranking) {
    Json j;
    j["report_id"] = report.report_id;
    j["config"] = to_json(config);
    j["fallbacks"] = ranking.flags;
    j["query_terms_used"] = ranking.query_terms_used;
    j["ranking"] = Json::array();
    int rank = 1;
    for (const auto& e : ranking.entries)
        j["ranking"].push_back({{"rank", rank++}, {"path", e.path}, {"score", e.score}, {"gui_flags", e.gui_flags}});
    return j;
}

}  // namespace guibl
