#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "guibl/corpus.hpp"
#include "guibl/gui_model.hpp"
#include "guibl/index.hpp"
#include "oracles.hpp"

namespace support {

namespace fs = std::filesystem;

inline fs::path fixture(std::string_view rel) { return fs::path(GUIBL_FIXTURE_DIR) / rel; }

inline fs::path notepad_src() { return fixture("notepad/src"); }

// Documents whose term bags are exactly the given tokens (no analyzer).
inline std::vector<guibl::SourceDocument> documents(const std::vector<oracle::Doc>& docs) {
    std::vector<guibl::SourceDocument> out;
    for (const auto& d : docs) {
        guibl::SourceDocument s;
        s.doc_id = static_cast<int>(out.size());
        s.path = d.path;
        auto slash = d.path.find_last_of('/');
        auto base = slash == std::string::npos ? d.path : d.path.substr(slash + 1);
        s.class_name = base.substr(0, base.find('.'));
        for (const auto& t : d.tokens) ++s.terms[t];
        s.length = static_cast<int>(d.tokens.size());
        out.push_back(std::move(s));
    }
    return out;
}

inline guibl::CorpusIndex index_of(const std::vector<oracle::Doc>& docs) {
    return guibl::CorpusIndex::build(documents(docs));
}

inline guibl::GuiComponent component(std::string id, std::string text = "", std::string desc = "",
                                     std::optional<std::string> action = std::nullopt, std::string type = "Button") {
    guibl::GuiComponent c;
    c.resource_id = std::move(id);
    c.component_type = std::move(type);
    c.text = std::move(text);
    c.content_desc = std::move(desc);
    c.exercised = action.has_value();
    c.action = std::move(action);
    return c;
}

inline guibl::Screen screen(std::string activity, std::vector<guibl::GuiComponent> components,
                            std::string window = "") {
    guibl::Screen s;
    s.window_name = window.empty() ? activity : std::move(window);
    s.activity_name = std::move(activity);
    s.components = std::move(components);
    return s;
}

inline guibl::ReproTrace trace(std::string id, std::vector<guibl::Screen> screens) {
    guibl::ReproTrace t;
    t.trace_id = std::move(id);
    for (std::size_t i = 0; i < screens.size(); ++i) screens[i].index = static_cast<int>(i);
    t.screens = std::move(screens);
    return t;
}

// Scratch directory removed on scope exit.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = fs::temp_directory_path() /
                ("guibl-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const fs::path& path() const { return path_; }
    fs::path operator/(std::string_view rel) const { return path_ / rel; }

private:
    fs::path path_;
};

// Random ranking over a pool of "f<i>" names.
inline std::vector<std::string> random_ranking(std::mt19937& rng, int max_len, int pool) {
    std::vector<std::string> names;
    for (int i = 0; i < pool; ++i) names.push_back("f" + std::to_string(i));
    std::shuffle(names.begin(), names.end(), rng);
    std::uniform_int_distribution<int> len(0, std::min(max_len, pool));
    names.resize(static_cast<std::size_t>(len(rng)));
    return names;
}

}  // namespace support
