#pragma once

#include <set>
#include <string>
#include <string_view>

#include "guibl/gui_model.hpp"
#include "guibl/index.hpp"
#include "guibl/text.hpp"

namespace guibl {

enum class TermSource { activity, window_name, component_id, component_text, content_desc, type };

using TermSources = std::set<TermSource>;

const TermSources& all_term_sources();
TermSource parse_term_source(std::string_view name);  // throws ConfigError
std::string_view to_string(TermSource source);
// "all", or source names joined with '+' in declaration order.
std::string format_term_sources(const TermSources& sources);
// Accepts "all" or names separated by '+' or ','. Throws ConfigError.
TermSources parse_term_sources(std::string_view spec);

// Android resource ids are often qualified ("pkg:id/save_button"); matching
// uses the bare lowercase name.
std::string normalize_resource_id(std::string_view resource_id);

// Normalized term set of a component: resource id (normalized), visible
// text and content description.
std::set<std::string> component_terms(std::string_view resource_id, std::string_view text,
                                      std::string_view content_desc,
                                      const text::Analyzer& analyzer = text::default_analyzer());

// Text after the final '.'.
std::string_view simple_name(std::string_view qualified);

struct GuiContext {
    text::TermBag terms;
    std::set<std::string> activity_files;   // class name matches activity/window
    std::set<std::string> listener_files;   // reference an exercised resource id
    std::set<std::string> component_files;  // contain exercised component terms
    int window_used = kDefaultWindow;

    // activity_files ∪ listener_files ∪ component_files
    std::set<std::string> gui_related() const;
    // activity_files ∪ listener_files
    std::set<std::string> boosted() const;
    bool empty() const;

    bool operator==(const GuiContext&) const = default;
};

inline constexpr double kDefaultComponentThreshold = 0.5;

text::TermBag extract_gui_terms(const ReproTrace& trace, int window, const TermSources& sources,
                                const text::Analyzer& analyzer = text::default_analyzer());

std::set<std::string> match_activity_files(const ReproTrace& trace, int window, const CorpusIndex& corpus);
std::set<std::string> match_listener_files(const ReproTrace& trace, int window, const CorpusIndex& corpus);
// A file matches when its term bag contains at least `threshold` of the term
// set of some exercised component (inclusive).
std::set<std::string> match_component_files(const ReproTrace& trace, int window, const CorpusIndex& corpus,
                                             double threshold = kDefaultComponentThreshold);

GuiContext gui_context(const ReproTrace& trace, int window, const CorpusIndex& corpus, const TermSources& sources,
                       double component_threshold = kDefaultComponentThreshold);

}  // namespace guibl
