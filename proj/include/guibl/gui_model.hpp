#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace guibl {

inline constexpr std::array<std::string_view, 9> kActionVocabulary{
    "click", "type", "long-click", "swipe", "pinch", "open", "press", "select", "back"};

bool is_known_action(std::string_view action);

struct GuiComponent {
    std::string resource_id;  // may be empty
    std::string component_type;
    std::string text;
    std::string content_desc;
    bool exercised = false;
    std::optional<std::string> action;

    bool operator==(const GuiComponent&) const = default;
};

struct Screen {
    int index = 0;
    std::string activity_name;
    std::string window_name;
    std::vector<GuiComponent> components;

    // The component the user acted on to leave this screen, if any.
    const GuiComponent* exercised_component() const;

    bool operator==(const Screen&) const = default;
};

// The last screen is the buggy screen.
struct ReproTrace {
    std::string trace_id;
    std::vector<Screen> screens;

    const Screen& buggy_screen() const { return screens.back(); }
    bool operator==(const ReproTrace&) const = default;
};

// Throws ValidationError naming the offending screen index.
void validate_trace(const ReproTrace& trace);

// Parses the trace JSON format. Malformed JSON raises ParseError with line
// and column; invariant violations raise ValidationError.
ReproTrace parse_trace(std::string_view json_text, std::string_view source_name = "<trace>");
ReproTrace load_trace(const std::filesystem::path& path);

// Hex digest of activity name, window name and the sorted set of nonempty
// resource ids. Visible text is not part of the identity.
std::string screen_fingerprint(const Screen& screen);

// Final min(window, size) screens in trace order. Throws ConfigError when
// window < 1.
std::span<const Screen> last_screens(const ReproTrace& trace, int window);

inline constexpr int kDefaultWindow = 3;

struct ComponentDescriptor {
    std::string resource_id;
    std::string component_type;
    std::string text;
    std::string content_desc;

    bool operator==(const ComponentDescriptor&) const = default;
};

struct ModelEdge {
    std::string src;
    std::string action;
    ComponentDescriptor component;
    std::string dst;

    bool operator==(const ModelEdge&) const = default;
};

// (src, action, resource_id, dst); unique within a model.
using EdgeKey = std::array<std::string, 4>;
EdgeKey edge_key(const ModelEdge& edge);

// Screens as nodes, interactions as edges. Edges keep insertion order.
class ExecutionModel {
public:
    // Returns false if the fingerprint already exists (first screen wins).
    bool add_node(const std::string& fingerprint, const Screen& screen);
    // Throws ValidationError for unknown endpoints; returns false for duplicates.
    bool add_edge(ModelEdge edge);
    // Throws ValidationError for unknown fingerprints.
    void add_entry(const std::string& fingerprint);

    const std::map<std::string, Screen>& nodes() const { return nodes_; }
    const std::vector<ModelEdge>& edges() const { return edges_; }
    const std::set<std::string>& entries() const { return entries_; }

    bool has_node(std::string_view fingerprint) const;
    // Indices into edges(), in insertion order.
    std::vector<std::size_t> outgoing(std::string_view fingerprint) const;

    std::set<std::string> node_keys() const;
    std::set<EdgeKey> edge_keys() const;

private:
    std::map<std::string, Screen> nodes_;
    std::vector<ModelEdge> edges_;
    std::set<EdgeKey> edge_index_;
    std::set<std::string> entries_;
};

// Action recorded on an edge when a component is marked exercised without one.
inline constexpr std::string_view kDefaultEdgeAction = "click";

ExecutionModel build_execution_model(std::span<const ReproTrace> traces);

// True when consecutive screens of the trace are joined by model edges.
bool is_walk(const ExecutionModel& model, const ReproTrace& trace);

}  // namespace guibl
