#include "guibl/json_io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "guibl/error.hpp"

namespace guibl {

namespace fs = std::filesystem;

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
    auto tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write file: " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw InputError("failed writing file: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InputError("cannot replace " + path.string() + ": " + ec.message());
    }
}

Json parse_json(std::string_view text, std::string_view source_name) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        // Byte offsets are 1-based and point one past the offending character.
        std::size_t offset = e.byte > 0 ? std::min<std::size_t>(e.byte - 1, text.size()) : 0;
        std::size_t line = 1;
        std::size_t line_start = 0;
        for (std::size_t i = 0; i < offset; ++i) {
            if (text[i] == '\n') {
                ++line;
                line_start = i + 1;
            }
        }
        auto line_end = text.find('\n', line_start);
        auto context = text.substr(line_start, line_end == std::string_view::npos ? std::string_view::npos
                                                                                   : line_end - line_start);
        std::ostringstream msg;
        msg << source_name << ":" << line << ":" << (offset - line_start + 1) << ": malformed JSON ("
            << e.what() << ")\n    " << context;
        throw ParseError(msg.str());
    }
}

// ---------------------------------------------------------------------------
// Traces

namespace {

std::string get_string(const Json& j, const char* key, bool required = false) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) {
        if (required) throw ParseError(std::string("missing field '") + key + "'");
        return {};
    }
    return it->get<std::string>();
}

GuiComponent component_from_json(const Json& j) {
    GuiComponent c;
    c.resource_id = get_string(j, "resource_id");
    c.component_type = get_string(j, "type");
    c.text = get_string(j, "text");
    c.content_desc = get_string(j, "content_desc");
    c.exercised = j.value("exercised", false);
    auto action = get_string(j, "action");
    if (!action.empty()) c.action = action;
    return c;
}

Screen screen_from_json(const Json& j, int index) {
    Screen s;
    s.index = index;
    s.activity_name = get_string(j, "activity_name");
    s.window_name = get_string(j, "window_name");
    if (auto it = j.find("components"); it != j.end())
        for (const auto& c : *it) s.components.push_back(component_from_json(c));
    return s;
}

}  // namespace

Json to_json(const GuiComponent& c) {
    Json j;
    j["resource_id"] = c.resource_id;
    j["type"] = c.component_type;
    j["text"] = c.text;
    j["content_desc"] = c.content_desc;
    j["exercised"] = c.exercised;
    j["action"] = c.action ? Json(*c.action) : Json(nullptr);
    return j;
}

Json to_json(const Screen& s) {
    Json j;
    j["activity_name"] = s.activity_name;
    j["window_name"] = s.window_name;
    j["components"] = Json::array();
    for (const auto& c : s.components) j["components"].push_back(to_json(c));
    return j;
}

Json to_json(const ReproTrace& t) {
    Json j;
    j["trace_id"] = t.trace_id;
    j["screens"] = Json::array();
    for (const auto& s : t.screens) j["screens"].push_back(to_json(s));
    return j;
}

ReproTrace trace_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("trace document must be a JSON object");
    ReproTrace t;
    t.trace_id = get_string(j, "trace_id", true);
    const auto& screens = j.at("screens");
    if (!screens.is_array()) throw ParseError("'screens' must be an array");
    int index = 0;
    for (const auto& s : screens) t.screens.push_back(screen_from_json(s, index++));
    return t;
}

// ---------------------------------------------------------------------------
// Execution model

Json to_json(const ExecutionModel& model) {
    Json j;
    j["nodes"] = Json::object();
    for (const auto& [fp, screen] : model.nodes()) j["nodes"][fp] = to_json(screen);
    j["edges"] = Json::array();
    for (const auto& e : model.edges()) {
        Json je;
        je["src"] = e.src;
        je["action"] = e.action;
        je["resource_id"] = e.component.resource_id;
        je["dst"] = e.dst;
        je["component"] = {{"type", e.component.component_type},
                           {"text", e.component.text},
                           {"content_desc", e.component.content_desc}};
        j["edges"].push_back(std::move(je));
    }
    j["entries"] = Json::array();
    for (const auto& fp : model.entries()) j["entries"].push_back(fp);
    return j;
}

ExecutionModel model_from_json(const Json& j) {
    ExecutionModel model;
    try {
        for (const auto& [fp, screen] : j.at("nodes").items()) model.add_node(fp, screen_from_json(screen, 0));
        for (const auto& je : j.at("edges")) {
            ModelEdge e;
            e.src = get_string(je, "src", true);
            e.action = get_string(je, "action", true);
            e.component.resource_id = get_string(je, "resource_id");
            e.dst = get_string(je, "dst", true);
            if (auto it = je.find("component"); it != je.end()) {
                e.component.component_type = get_string(*it, "type");
                e.component.text = get_string(*it, "text");
                e.component.content_desc = get_string(*it, "content_desc");
            } else if (model.has_node(e.src)) {
                // Bare-schema edges carry no descriptor: recover it from the source screen.
                for (const auto& c : model.nodes().at(e.src).components) {
                    if (!c.resource_id.empty() && c.resource_id == e.component.resource_id) {
                        e.component = {c.resource_id, c.component_type, c.text, c.content_desc};
                        break;
                    }
                }
            }
            if (!model.add_edge(std::move(e))) throw ValidationError("duplicate edge in execution model");
        }
        for (const auto& fp : j.at("entries")) model.add_entry(fp.get<std::string>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed execution model: ") + e.what());
    }
    return model;
}

void save_model(const ExecutionModel& model, const fs::path& path) {
    write_file_atomic(path, to_json(model).dump(2) + "\n");
}

ExecutionModel load_model(const fs::path& path) {
    return model_from_json(parse_json(read_text_file(path), path.string()));
}

// ---------------------------------------------------------------------------
// Index

Json to_json(const CorpusIndex& index) {
    Json j;
    j["format"] = kIndexFormat;
    j["version"] = kIndexVersion;
    j["params"] = {{"bm25_k1", index.params().k1}, {"bm25_b", index.params().b}};
    const auto& analyzer = index.analyzer();
    Json stop = Json::array();
    for (const auto& w : analyzer.stopwords()) stop.push_back(w);
    j["analyzer"] = {{"min_length", analyzer.options().min_length},
                     {"stem", analyzer.options().stem},
                     {"stopwords", std::move(stop)}};
    j["doc_count"] = index.doc_count();
    j["avg_length"] = index.avg_length();
    j["documents"] = Json::array();
    for (const auto& d : index.documents()) {
        Json jd;
        jd["doc_id"] = d.doc_id;
        jd["path"] = d.path;
        jd["class_name"] = d.class_name;
        jd["length"] = d.length;
        jd["terms"] = Json::object();
        for (const auto& [t, c] : d.terms) jd["terms"][t] = c;
        jd["resource_id_refs"] = d.resource_id_refs;
        j["documents"].push_back(std::move(jd));
    }
    return j;
}

CorpusIndex index_from_json(const Json& j) {
    try {
        if (j.at("format").get<std::string>() != kIndexFormat) throw ParseError("not a guibl index file");
        auto version = j.at("version").get<int>();
        if (version != kIndexVersion)
            throw ParseError("unsupported index version " + std::to_string(version) + " (expected " +
                             std::to_string(kIndexVersion) + ")");
        Bm25Params params{j.at("params").at("bm25_k1").get<double>(), j.at("params").at("bm25_b").get<double>()};
        const auto& ja = j.at("analyzer");
        text::AnalyzerOptions opts;
        opts.min_length = ja.at("min_length").get<std::size_t>();
        opts.stem = ja.at("stem").get<bool>();
        text::StopwordSet stop;
        for (const auto& w : ja.at("stopwords")) stop.insert(w.get<std::string>());

        std::vector<SourceDocument> docs;
        for (const auto& jd : j.at("documents")) {
            SourceDocument d;
            d.doc_id = jd.at("doc_id").get<int>();
            d.path = jd.at("path").get<std::string>();
            d.class_name = jd.at("class_name").get<std::string>();
            d.length = jd.at("length").get<int>();
            for (const auto& [t, c] : jd.at("terms").items()) d.terms[t] = c.get<int>();
            for (const auto& r : jd.at("resource_id_refs")) d.resource_id_refs.insert(r.get<std::string>());
            docs.push_back(std::move(d));
        }
        auto index = CorpusIndex::build(std::move(docs), params, text::Analyzer(opts, std::move(stop)));
        if (index.doc_count() != j.at("doc_count").get<int>() || index.avg_length() != j.at("avg_length").get<double>())
            throw ValidationError("index statistics do not match its documents");
        return index;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed index: ") + e.what());
    }
}

void save_index(const CorpusIndex& index, const fs::path& path) {
    auto j = to_json(index);
    if (path.extension() == ".json") {
        write_file_atomic(path, j.dump(2) + "\n");
    } else {
        auto bytes = Json::to_cbor(j);
        write_file_atomic(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    }
}

CorpusIndex load_index(const fs::path& path) {
    auto bytes = read_text_file(path);
    auto first = bytes.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && bytes[first] == '{') return index_from_json(parse_json(bytes, path.string()));
    try {
        return index_from_json(Json::from_cbor(bytes));
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string() + ": malformed index file (" + e.what() + ")");
    }
}

// ---------------------------------------------------------------------------

Json to_json(const RankedList& ranked) {
    Json j;
    j["query_terms_used"] = ranked.query_terms_used;
    j["flags"] = ranked.flags;
    j["ranking"] = Json::array();
    int rank = 1;
    for (const auto& e : ranked.entries) {
        j["ranking"].push_back({{"rank", rank++}, {"path", e.path}, {"score", e.score}, {"gui_flags", e.gui_flags}});
    }
    return j;
}

}  // namespace guibl
