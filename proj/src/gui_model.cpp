#include "guibl/gui_model.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

#include "guibl/error.hpp"
#include "guibl/json_io.hpp"

namespace guibl {

bool is_known_action(std::string_view action) {
    return std::find(kActionVocabulary.begin(), kActionVocabulary.end(), action) != kActionVocabulary.end();
}

const GuiComponent* Screen::exercised_component() const {
    for (const auto& c : components)
        if (c.exercised) return &c;
    return nullptr;
}

void validate_trace(const ReproTrace& trace) {
    if (trace.screens.empty()) throw ValidationError("trace '" + trace.trace_id + "' has no screens");
    const auto last = trace.screens.size() - 1;
    for (std::size_t i = 0; i < trace.screens.size(); ++i) {
        const auto& screen = trace.screens[i];
        auto where = "trace '" + trace.trace_id + "' screen " + std::to_string(i);
        if (screen.index != static_cast<int>(i)) throw ValidationError(where + ": index out of order");
        if (screen.activity_name.empty()) throw ValidationError(where + ": empty activity_name");
        int exercised = 0;
        for (const auto& c : screen.components) {
            if (c.action) {
                if (!is_known_action(*c.action))
                    throw ValidationError(where + ": unknown action '" + *c.action + "'");
                if (!c.exercised) throw ValidationError(where + ": component with an action must be exercised");
            }
            if (c.exercised) ++exercised;
        }
        if (exercised > 1) throw ValidationError(where + ": more than one exercised component");
        if (i < last && exercised == 0) throw ValidationError(where + ": no exercised component");
    }
}

ReproTrace parse_trace(std::string_view json_text, std::string_view source_name) {
    auto j = parse_json(json_text, source_name);
    ReproTrace trace;
    try {
        trace = trace_from_json(j);
    } catch (const Json::exception& e) {
        throw ParseError(std::string(source_name) + ": unexpected trace structure: " + e.what());
    }
    validate_trace(trace);
    return trace;
}

ReproTrace load_trace(const std::filesystem::path& path) {
    return parse_trace(read_text_file(path), path.string());
}

std::string screen_fingerprint(const Screen& screen) {
    std::set<std::string> ids;
    for (const auto& c : screen.components)
        if (!c.resource_id.empty()) ids.insert(c.resource_id);

    // FNV-1a, 64 bit. Fields are separated by control bytes that cannot
    // appear in names.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](std::string_view s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    feed(screen.activity_name);
    feed("\x1f");
    feed(screen.window_name);
    feed("\x1f");
    for (const auto& id : ids) {
        feed(id);
        feed("\x1e");
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::span<const Screen> last_screens(const ReproTrace& trace, int window) {
    if (window < 1) throw ConfigError("screen window must be >= 1, got " + std::to_string(window));
    std::span<const Screen> all(trace.screens);
    auto n = std::min(static_cast<std::size_t>(window), all.size());
    return all.last(n);
}

EdgeKey edge_key(const ModelEdge& edge) {
    return {edge.src, edge.action, edge.component.resource_id, edge.dst};
}

bool ExecutionModel::add_node(const std::string& fingerprint, const Screen& screen) {
    if (nodes_.contains(fingerprint)) return false;
    // A node is not tied to any trace position.
    auto& node = nodes_[fingerprint] = screen;
    node.index = 0;
    return true;
}

bool ExecutionModel::add_edge(ModelEdge edge) {
    if (!has_node(edge.src) || !has_node(edge.dst))
        throw ValidationError("edge endpoint not in model: " + edge.src + " -> " + edge.dst);
    if (!edge_index_.insert(edge_key(edge)).second) return false;
    edges_.push_back(std::move(edge));
    return true;
}

void ExecutionModel::add_entry(const std::string& fingerprint) {
    if (!has_node(fingerprint)) throw ValidationError("entry fingerprint not in model: " + fingerprint);
    entries_.insert(fingerprint);
}

bool ExecutionModel::has_node(std::string_view fingerprint) const {
    return nodes_.find(std::string(fingerprint)) != nodes_.end();
}

std::vector<std::size_t> ExecutionModel::outgoing(std::string_view fingerprint) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].src == fingerprint) out.push_back(i);
    return out;
}

std::set<std::string> ExecutionModel::node_keys() const {
    std::set<std::string> keys;
    for (const auto& [fp, screen] : nodes_) keys.insert(fp);
    return keys;
}

std::set<EdgeKey> ExecutionModel::edge_keys() const { return edge_index_; }

ExecutionModel build_execution_model(std::span<const ReproTrace> traces) {
    if (traces.empty()) throw InputError("cannot build an execution model without traces");
    ExecutionModel model;
    for (const auto& trace : traces) {
        validate_trace(trace);
        std::vector<std::string> fps;
        fps.reserve(trace.screens.size());
        for (const auto& screen : trace.screens) {
            fps.push_back(screen_fingerprint(screen));
            model.add_node(fps.back(), screen);
        }
        model.add_entry(fps.front());
        for (std::size_t i = 0; i + 1 < trace.screens.size(); ++i) {
            const auto* c = trace.screens[i].exercised_component();
            ModelEdge edge;
            edge.src = fps[i];
            edge.dst = fps[i + 1];
            edge.action = c->action ? *c->action : std::string(kDefaultEdgeAction);
            edge.component = {c->resource_id, c->component_type, c->text, c->content_desc};
            model.add_edge(std::move(edge));
        }
    }
    return model;
}

bool is_walk(const ExecutionModel& model, const ReproTrace& trace) {
    for (std::size_t i = 0; i + 1 < trace.screens.size(); ++i) {
        auto src = screen_fingerprint(trace.screens[i]);
        auto dst = screen_fingerprint(trace.screens[i + 1]);
        bool found = false;
        for (auto e : model.outgoing(src)) found = found || model.edges()[e].dst == dst;
        if (!found) return false;
    }
    return trace.screens.empty() || model.has_node(screen_fingerprint(trace.screens.front()));
}

}  // namespace guibl
