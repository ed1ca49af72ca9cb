#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "guibl/corpus.hpp"
#include "guibl/error.hpp"
#include "guibl/evaluation.hpp"
#include "guibl/gui_mapping.hpp"
#include "guibl/gui_model.hpp"
#include "guibl/index.hpp"
#include "guibl/json_io.hpp"
#include "guibl/pipeline.hpp"
#include "guibl/report.hpp"

namespace py = pybind11;
using namespace guibl;

namespace {

py::dict step_dict(const S2RStep& s) {
    py::dict d;
    d["subject"] = s.subject;
    d["action"] = s.action;
    d["object"] = s.object;
    d["preposition"] = s.preposition ? py::cast(*s.preposition) : py::none();
    d["object2"] = s.object2 ? py::cast(*s.object2) : py::none();
    return d;
}

PipelineConfig make_config(const std::string& scorer, const std::string& query, const std::string& rerank, int window,
                           const std::string& sources, double expansion_weight, int top_k) {
    PipelineConfig c;
    c.scorer = parse_scorer(scorer);
    c.query_strategy = parse_query_strategy(query);
    c.rerank_strategy = parse_rerank_strategy(rerank);
    c.window = window;
    c.term_sources = parse_term_sources(sources);
    c.expansion_weight = expansion_weight;
    c.top_k = top_k;
    c.validate();
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "GUI-augmented bug localization core";

    auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    (void)input_error;

    m.def("preprocess", [](const std::string& s) { return text::preprocess(s); }, py::arg("text"));
    m.def("split_identifiers", [](const std::string& s) { return text::split_identifiers(s); }, py::arg("text"));
    m.def("porter_stem", [](const std::string& s) { return text::porter_stem(s); }, py::arg("word"));
    m.def(
        "extract_code_facets",
        [](const std::string& raw, const std::string& path, const std::set<std::string>& known) {
            auto f = extract_code_facets(raw, path, known);
            return py::make_tuple(f.class_name, f.resource_id_refs);
        },
        py::arg("raw_text"), py::arg("path"), py::arg("known_ids") = std::set<std::string>{});

    py::class_<SourceDocument>(m, "SourceDocument")
        .def_readonly("doc_id", &SourceDocument::doc_id)
        .def_readonly("path", &SourceDocument::path)
        .def_readonly("class_name", &SourceDocument::class_name)
        .def_readonly("terms", &SourceDocument::terms)
        .def_readonly("length", &SourceDocument::length)
        .def_readonly("resource_id_refs", &SourceDocument::resource_id_refs)
        .def("__repr__", [](const SourceDocument& d) { return "<SourceDocument " + d.path + ">"; });

    m.def(
        "scan_corpus",
        [](const std::filesystem::path& root, const std::set<std::string>& extensions) {
            ScanOptions opts;
            opts.extensions = extensions;
            return scan_corpus(root, opts).documents;
        },
        py::arg("root"), py::arg("extensions") = std::set<std::string>{"java"});

    py::class_<RankedEntry>(m, "RankedEntry")
        .def_readonly("path", &RankedEntry::path)
        .def_readonly("score", &RankedEntry::score)
        .def_readonly("gui_flags", &RankedEntry::gui_flags)
        .def("__repr__", [](const RankedEntry& e) { return "<RankedEntry " + e.path + " " + std::to_string(e.score) + ">"; });

    py::class_<RankedList>(m, "RankedList")
        .def_readonly("entries", &RankedList::entries)
        .def_readonly("query_terms_used", &RankedList::query_terms_used)
        .def_readonly("flags", &RankedList::flags)
        .def("paths", [](const RankedList& r) { return ranked_paths(r); })
        .def("__len__", [](const RankedList& r) { return r.entries.size(); });

    py::class_<CorpusIndex>(m, "CorpusIndex")
        .def_static(
            "build",
            [](std::vector<SourceDocument> docs, double k1, double b) {
                return CorpusIndex::build(std::move(docs), Bm25Params{k1, b});
            },
            py::arg("documents"), py::arg("k1") = 1.2, py::arg("b") = 0.75)
        .def_static("load", [](const std::filesystem::path& p) { return load_index(p); }, py::arg("path"))
        .def("save", [](const CorpusIndex& i, const std::filesystem::path& p) { save_index(i, p); }, py::arg("path"))
        .def_property_readonly("doc_count", &CorpusIndex::doc_count)
        .def_property_readonly("avg_length", &CorpusIndex::avg_length)
        .def_property_readonly("documents", &CorpusIndex::documents)
        .def("doc_freq", [](const CorpusIndex& i, const std::string& t) { return i.doc_freq(t); }, py::arg("term"));

    m.def("score_bm25", [](const CorpusIndex& i, const std::vector<std::string>& q) { return score_bm25(i, q); },
          py::arg("index"), py::arg("query"));
    m.def("score_rvsm", [](const CorpusIndex& i, const std::vector<std::string>& q) { return score_rvsm(i, q); },
          py::arg("index"), py::arg("query"));
    m.def(
        "rank",
        [](const CorpusIndex& i, const std::vector<std::string>& q, const std::string& scorer) {
            return rank(i, q, std::string_view(scorer));
        },
        py::arg("index"), py::arg("query"), py::arg("scorer") = "bm25");

    py::class_<ReproTrace>(m, "ReproTrace")
        .def_readonly("trace_id", &ReproTrace::trace_id)
        .def_property_readonly("screen_count", [](const ReproTrace& t) { return t.screens.size(); })
        .def("fingerprints", [](const ReproTrace& t) {
            std::vector<std::string> out;
            for (const auto& s : t.screens) out.push_back(screen_fingerprint(s));
            return out;
        })
        .def("to_json", [](const ReproTrace& t) { return to_json(t).dump(); });
    m.def("parse_trace", [](const std::string& text) { return parse_trace(text); }, py::arg("json_text"));
    m.def("load_trace", [](const std::filesystem::path& p) { return load_trace(p); }, py::arg("path"));

    py::class_<ExecutionModel>(m, "ExecutionModel")
        .def_property_readonly("node_count", [](const ExecutionModel& e) { return e.nodes().size(); })
        .def_property_readonly("edge_count", [](const ExecutionModel& e) { return e.edges().size(); })
        .def_property_readonly("entries", &ExecutionModel::entries)
        .def("nodes", [](const ExecutionModel& e) { return e.node_keys(); })
        .def("to_json", [](const ExecutionModel& e) { return to_json(e).dump(); })
        .def("suggest_next_steps", [](const ExecutionModel& e, const std::string& fp) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& s : suggest_next_steps(e, fp)) out.emplace_back(s.action, s.component.resource_id, s.dst);
            return out;
        }, py::arg("fingerprint"));
    m.def("build_execution_model", [](const std::vector<ReproTrace>& t) { return build_execution_model(t); },
          py::arg("traces"));
    m.def("model_from_json", [](const std::string& s) { return model_from_json(parse_json(s, "<model>")); },
          py::arg("json_text"));

    py::class_<GuiContext>(m, "GuiContext")
        .def_readonly("terms", &GuiContext::terms)
        .def_readonly("activity_files", &GuiContext::activity_files)
        .def_readonly("listener_files", &GuiContext::listener_files)
        .def_readonly("component_files", &GuiContext::component_files)
        .def_readonly("window_used", &GuiContext::window_used)
        .def_property_readonly("gui_related", &GuiContext::gui_related)
        .def_property_readonly("boosted", &GuiContext::boosted);
    m.def(
        "gui_context",
        [](const ReproTrace& t, int window, const CorpusIndex& i, const std::string& sources) {
            return gui_context(t, window, i, parse_term_sources(sources));
        },
        py::arg("trace"), py::arg("window") = kDefaultWindow, py::arg("index"), py::arg("sources") = "all");

    m.def("segment_sentences", [](const std::string& body) {
        std::vector<std::string> out;
        for (const auto& s : segment_sentences(body)) out.push_back(s.text);
        return out;
    }, py::arg("body"));
    m.def("classify_sentences", [](const std::string& body) {
        auto sentences = segment_sentences(body);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& t : classify_sentences(sentences, HeuristicClassifier{}).sentences)
            out.emplace_back(t.text, std::string(to_string(t.tag)));
        return out;
    }, py::arg("body"));
    m.def("parse_s2r", [](const std::string& s) { return step_dict(parse_s2r(s)); }, py::arg("sentence"));

    m.def("hits_at_k", [](const std::vector<std::string>& r, const std::set<std::string>& t, int k) {
        return hits_at_k(r, t, k);
    }, py::arg("ranking"), py::arg("truth"), py::arg("k"));
    m.def("reciprocal_rank", [](const std::vector<std::string>& r, const std::set<std::string>& t) {
        return reciprocal_rank(r, t);
    }, py::arg("ranking"), py::arg("truth"));
    m.def("average_precision", [](const std::vector<std::string>& r, const std::set<std::string>& t) {
        return average_precision(r, t);
    }, py::arg("ranking"), py::arg("truth"));

    m.def(
        "localize",
        [](const std::string& report_json, const ReproTrace& trace, const CorpusIndex& index, const std::string& scorer,
           const std::string& query, const std::string& rerank, int window, const std::string& sources,
           double expansion_weight, int top_k) {
            auto report = parse_report(report_json);
            auto config = make_config(scorer, query, rerank, window, sources, expansion_weight, top_k);
            return localization_output(report, config, localize(report, trace, index, config).ranking).dump();
        },
        py::arg("report_json"), py::arg("trace"), py::arg("index"), py::arg("scorer") = "bm25",
        py::arg("query") = "base", py::arg("rerank") = "none", py::arg("window") = kDefaultWindow,
        py::arg("sources") = "all", py::arg("expansion_weight") = 1.0, py::arg("top_k") = 10);

    m.def(
        "evaluate_config",
        [](const CorpusIndex& index, const std::filesystem::path& reports, const std::filesystem::path& traces,
           const std::string& scorer, const std::string& query, const std::string& rerank, int window,
           const std::string& sources, double expansion_weight) {
            auto dataset = load_dataset(reports, traces);
            auto config = make_config(scorer, query, rerank, window, sources, expansion_weight, 10);
            return to_json(evaluate_config(dataset, index, config)).dump();
        },
        py::arg("index"), py::arg("reports_dir"), py::arg("traces_dir"), py::arg("scorer") = "bm25",
        py::arg("query") = "base", py::arg("rerank") = "none", py::arg("window") = kDefaultWindow,
        py::arg("sources") = "all", py::arg("expansion_weight") = 1.0);

    m.def(
        "sweep_csv",
        [](const CorpusIndex& index, const std::filesystem::path& reports, const std::filesystem::path& traces,
           const std::string& grid_json, int jobs) {
            auto dataset = load_dataset(reports, traces);
            auto grid = grid_from_json(parse_json(grid_json, "<grid>"));
            SweepOptions opts;
            opts.jobs = jobs;
            py::gil_scoped_release release;
            return render_sweep_csv(sweep(grid, dataset, index, opts));
        },
        py::arg("index"), py::arg("reports_dir"), py::arg("traces_dir"), py::arg("grid_json"), py::arg("jobs") = 1);
}
