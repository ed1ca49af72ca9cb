#include "guibl/gui_mapping.hpp"

#include <algorithm>
#include <array>

#include "guibl/error.hpp"

namespace guibl {

namespace {

constexpr std::array<std::pair<TermSource, std::string_view>, 6> kSourceNames{{
    {TermSource::activity, "activity"},
    {TermSource::window_name, "window_name"},
    {TermSource::component_id, "component_id"},
    {TermSource::component_text, "component_text"},
    {TermSource::content_desc, "content_desc"},
    {TermSource::type, "type"},
}};

}  // namespace

const TermSources& all_term_sources() {
    static const TermSources all = [] {
        TermSources s;
        for (const auto& [src, name] : kSourceNames) s.insert(src);
        return s;
    }();
    return all;
}

TermSource parse_term_source(std::string_view name) {
    for (const auto& [src, n] : kSourceNames)
        if (n == name) return src;
    std::string valid;
    for (const auto& [src, n] : kSourceNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw ConfigError("unknown GUI term source '" + std::string(name) + "' (valid: " + valid + ", all)");
}

std::string_view to_string(TermSource source) {
    for (const auto& [src, n] : kSourceNames)
        if (src == source) return n;
    return "?";
}

std::string format_term_sources(const TermSources& sources) {
    if (sources == all_term_sources()) return "all";
    std::string out;
    for (auto s : sources) {
        if (!out.empty()) out += '+';
        out += to_string(s);
    }
    return out;
}

TermSources parse_term_sources(std::string_view spec) {
    if (spec == "all") return all_term_sources();
    TermSources out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        auto end = spec.find_first_of("+,", start);
        auto part = spec.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (!part.empty()) out.insert(parse_term_source(part));
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (out.empty()) throw ConfigError("GUI term source set is empty");
    return out;
}

std::string normalize_resource_id(std::string_view resource_id) {
    auto slash = resource_id.find_last_of('/');
    if (slash != std::string_view::npos) resource_id = resource_id.substr(slash + 1);
    return text::to_lower(resource_id);
}

std::set<std::string> component_terms(std::string_view resource_id, std::string_view text,
                                      std::string_view content_desc, const text::Analyzer& analyzer) {
    std::set<std::string> terms;
    auto id = normalize_resource_id(resource_id);
    for (auto field : {std::string_view(id), text, content_desc})
        for (auto& t : analyzer.analyze(field)) terms.insert(std::move(t));
    return terms;
}

std::string_view simple_name(std::string_view qualified) {
    auto dot = qualified.find_last_of('.');
    return dot == std::string_view::npos ? qualified : qualified.substr(dot + 1);
}

std::set<std::string> GuiContext::gui_related() const {
    auto out = boosted();
    out.insert(component_files.begin(), component_files.end());
    return out;
}

std::set<std::string> GuiContext::boosted() const {
    auto out = activity_files;
    out.insert(listener_files.begin(), listener_files.end());
    return out;
}

bool GuiContext::empty() const {
    return terms.empty() && activity_files.empty() && listener_files.empty() && component_files.empty();
}

text::TermBag extract_gui_terms(const ReproTrace& trace, int window, const TermSources& sources,
                                const text::Analyzer& analyzer) {
    if (sources.empty()) throw ConfigError("GUI term source set is empty");
    text::TermBag bag;
    auto add = [&](std::string_view s) { text::merge_into(bag, analyzer.analyze_bag(s)); };
    for (const auto& screen : last_screens(trace, window)) {
        if (sources.count(TermSource::activity)) add(screen.activity_name);
        if (sources.count(TermSource::window_name)) add(screen.window_name);
        for (const auto& c : screen.components) {
            if (sources.count(TermSource::component_id)) add(normalize_resource_id(c.resource_id));
            if (sources.count(TermSource::component_text)) add(c.text);
            if (sources.count(TermSource::content_desc)) add(c.content_desc);
            if (sources.count(TermSource::type)) add(c.component_type);
        }
    }
    return bag;
}

std::set<std::string> match_activity_files(const ReproTrace& trace, int window, const CorpusIndex& corpus) {
    std::set<std::string> names;
    for (const auto& screen : last_screens(trace, window)) {
        for (auto full : {std::string_view(screen.activity_name), std::string_view(screen.window_name)}) {
            auto name = simple_name(full);
            if (!name.empty()) names.emplace(name);
        }
    }
    std::set<std::string> files;
    for (const auto& doc : corpus.documents())
        if (names.count(doc.class_name)) files.insert(doc.path);
    return files;
}

std::set<std::string> match_listener_files(const ReproTrace& trace, int window, const CorpusIndex& corpus) {
    std::set<std::string> ids;
    for (const auto& screen : last_screens(trace, window)) {
        const auto* c = screen.exercised_component();
        if (c && !c->resource_id.empty()) ids.insert(normalize_resource_id(c->resource_id));
    }
    std::set<std::string> files;
    if (ids.empty()) return files;
    for (const auto& doc : corpus.documents()) {
        for (const auto& ref : doc.resource_id_refs) {
            if (ids.count(ref)) {
                files.insert(doc.path);
                break;
            }
        }
    }
    return files;
}

std::set<std::string> match_component_files(const ReproTrace& trace, int window, const CorpusIndex& corpus,
                                             double threshold) {
    std::vector<std::set<std::string>> components;
    for (const auto& screen : last_screens(trace, window)) {
        const auto* c = screen.exercised_component();
        if (!c) continue;
        auto terms = component_terms(c->resource_id, c->text, c->content_desc, corpus.analyzer());
        if (!terms.empty()) components.push_back(std::move(terms));
    }
    std::set<std::string> files;
    if (components.empty()) return files;
    for (const auto& doc : corpus.documents()) {
        for (const auto& terms : components) {
            auto present = std::count_if(terms.begin(), terms.end(),
                                         [&doc](const std::string& t) { return doc.terms.count(t) > 0; });
            if (static_cast<double>(present) >= threshold * static_cast<double>(terms.size())) {
                files.insert(doc.path);
                break;
            }
        }
    }
    return files;
}

GuiContext gui_context(const ReproTrace& trace, int window, const CorpusIndex& corpus, const TermSources& sources,
                       double component_threshold) {
    GuiContext ctx;
    ctx.window_used = window;
    ctx.terms = extract_gui_terms(trace, window, sources, corpus.analyzer());
    ctx.activity_files = match_activity_files(trace, window, corpus);
    ctx.listener_files = match_listener_files(trace, window, corpus);
    ctx.component_files = match_component_files(trace, window, corpus, component_threshold);
    return ctx;
}

}  // namespace guibl
