#include "guibl/cli.hpp"

#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "guibl/corpus.hpp"
#include "guibl/error.hpp"
#include "guibl/evaluation.hpp"
#include "guibl/gui_mapping.hpp"
#include "guibl/index.hpp"
#include "guibl/json_io.hpp"
#include "guibl/pipeline.hpp"
#include "guibl/remote_classifier.hpp"
#include "guibl/report.hpp"

namespace guibl::cli {

namespace fs = std::filesystem;

namespace {

// Flags that mirror PipelineConfig. Unset flags leave --config values alone.
struct ConfigFlags {
    std::string config_file;
    std::string scorer;
    std::string query;
    std::string rerank;
    std::string sources;
    int window = 0;
    double expansion_weight = 0;
    int top_k = 0;
    double component_threshold = 0;

    CLI::Option* window_opt = nullptr;
    CLI::Option* weight_opt = nullptr;
    CLI::Option* top_opt = nullptr;
    CLI::Option* threshold_opt = nullptr;

    void attach(CLI::App& app, bool with_top) {
        app.add_option("--config", config_file, "JSON configuration file; flags take precedence");
        app.add_option("--scorer", scorer, "bm25 | rvsm (default bm25)");
        app.add_option("--query", query, "base | expand | replace (default base)");
        app.add_option("--rerank", rerank, "none | filter | boost | filter-boost (default none)");
        window_opt = app.add_option("--window", window, "screens used for GUI evidence (default 3)");
        app.add_option("--sources", sources, "GUI term sources: all, or names joined by '+'");
        weight_opt = app.add_option("--expansion-weight", expansion_weight, "GUI term repetition for expand (default 1)");
        if (with_top) top_opt = app.add_option("--top", top_k, "entries to emit (default 10)");
        threshold_opt = app.add_option("--component-threshold", component_threshold,
                                       "fraction of component terms a file must contain (default 0.5)");
    }

    PipelineConfig resolve() const {
        PipelineConfig c;
        if (!config_file.empty()) c = config_from_json(parse_json(read_text_file(config_file), config_file));
        if (!scorer.empty()) c.scorer = parse_scorer(scorer);
        if (!query.empty()) c.query_strategy = parse_query_strategy(query);
        if (!rerank.empty()) c.rerank_strategy = parse_rerank_strategy(rerank);
        if (!sources.empty()) c.term_sources = parse_term_sources(sources);
        if (window_opt && window_opt->count()) c.window = window;
        if (weight_opt && weight_opt->count()) c.expansion_weight = expansion_weight;
        if (top_opt && top_opt->count()) c.top_k = top_k;
        if (threshold_opt && threshold_opt->count()) c.component_threshold = component_threshold;
        c.validate();
        return c;
    }
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
    } else {
        write_file_atomic(out_path, text);
    }
}

std::vector<fs::path> json_inputs(const std::vector<std::string>& args) {
    std::vector<fs::path> files;
    for (const auto& a : args) {
        fs::path p(a);
        if (fs::is_directory(p)) {
            std::vector<fs::path> in_dir;
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".json") in_dir.push_back(e.path());
            std::sort(in_dir.begin(), in_dir.end());
            files.insert(files.end(), in_dir.begin(), in_dir.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

std::set<std::string> split_list(const std::string& s) {
    std::set<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty() && item.front() == '.') item.erase(0, 1);
        if (!item.empty()) out.insert(item);
    }
    return out;
}

Json step_json(const S2RStep& s) {
    return {{"subject", s.subject},
            {"action", s.action},
            {"object", s.object},
            {"preposition", s.preposition ? Json(*s.preposition) : Json(nullptr)},
            {"object2", s.object2 ? Json(*s.object2) : Json(nullptr)}};
}

Json edge_json(const ModelEdge& e) {
    return {{"src", e.src}, {"action", e.action}, {"resource_id", e.component.resource_id}, {"dst", e.dst}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"GUI-augmented bug localization and bug report analysis", "guibl"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // index
    auto* index_cmd = app.add_subcommand("index", "scan a source tree and write a searchable index");
    std::string corpus_dir, index_out, extensions = "java", stopword_file, known_ids_dir;
    std::size_t min_term_length = 2;
    bool stem = false;
    Bm25Params bm25;
    index_cmd->add_option("--corpus", corpus_dir, "source root")->required();
    index_cmd->add_option("--out", index_out, "index file (.json for text, otherwise binary)")->required();
    index_cmd->add_option("--ext", extensions, "comma-separated file extensions (default java)");
    index_cmd->add_option("--stopwords", stopword_file, "replace the default stopword list");
    index_cmd->add_option("--min-term-length", min_term_length, "shortest kept term (default 2)");
    index_cmd->add_flag("--stem", stem, "apply Porter stemming");
    index_cmd->add_option("--k1", bm25.k1, "BM25 k1 (default 1.2)");
    index_cmd->add_option("--b", bm25.b, "BM25 b (default 0.75)");
    index_cmd->add_option("--known-ids-from", known_ids_dir,
                          "trace file or directory whose resource ids are also matched as plain tokens");

    // localize
    auto* localize_cmd = app.add_subcommand("localize", "rank source files for one bug report");
    std::string index_path, report_path, trace_path, out_path, dump_context;
    ConfigFlags localize_flags;
    localize_cmd->add_option("--index", index_path)->required();
    localize_cmd->add_option("--report", report_path)->required();
    localize_cmd->add_option("--trace", trace_path)->required();
    localize_cmd->add_option("--out", out_path, "write ranked JSON here instead of stdout");
    localize_cmd->add_option("--dump-context", dump_context, "write the GUI context JSON to this file");
    localize_flags.attach(*localize_cmd, true);

    // build-model
    auto* model_cmd = app.add_subcommand("build-model", "merge reproduction traces into an execution model");
    std::vector<std::string> trace_inputs;
    std::string model_out;
    model_cmd->add_option("--traces", trace_inputs, "trace files or directories")->required();
    model_cmd->add_option("--out", model_out, "model JSON (stdout if omitted)");

    // lint-report
    auto* lint_cmd = app.add_subcommand("lint-report", "tag report sentences, parse steps and find gaps");
    std::string lint_report, lint_model, lint_out;
    MatchOptions match_options;
    lint_cmd->add_option("--report", lint_report)->required();
    lint_cmd->add_option("--model", lint_model, "execution model JSON")->required();
    lint_cmd->add_option("--out", lint_out);
    lint_cmd->add_option("--match-threshold", match_options.threshold, "minimum Jaccard similarity (default 0.5)");
    lint_cmd->add_option("--ambiguity-band", match_options.ambiguity_band, "default 0.05");

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate one configuration over a report set");
    std::string eval_index, reports_dir, traces_dir, eval_out;
    ConfigFlags eval_flags;
    eval_cmd->add_option("--index", eval_index)->required();
    eval_cmd->add_option("--reports", reports_dir)->required();
    eval_cmd->add_option("--traces", traces_dir)->required();
    eval_cmd->add_option("--out", eval_out);
    eval_flags.attach(*eval_cmd, false);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a configuration grid into a CSV table");
    std::string sweep_index, sweep_reports, sweep_traces, grid_path, sweep_out, details_path;
    int jobs = 1;
    sweep_cmd->add_option("--index", sweep_index)->required();
    sweep_cmd->add_option("--reports", sweep_reports)->required();
    sweep_cmd->add_option("--traces", sweep_traces)->required();
    sweep_cmd->add_option("--grid", grid_path, "grid JSON")->required();
    sweep_cmd->add_option("--out", sweep_out, "CSV file; existing rows are reused")->required();
    sweep_cmd->add_option("--details", details_path, "per-report JSON for every row");
    sweep_cmd->add_option("--jobs", jobs, "parallel configurations (default 1)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitConfig;
    }

    try {
        if (*index_cmd) {
            text::AnalyzerOptions opts;
            opts.min_length = min_term_length;
            opts.stem = stem;
            auto stop = stopword_file.empty() ? text::default_stopwords() : text::load_stopword_file(stopword_file);
            text::Analyzer analyzer(opts, std::move(stop));
            ScanOptions scan_options;
            scan_options.extensions = split_list(extensions);
            if (!known_ids_dir.empty()) {
                for (const auto& f : json_inputs({known_ids_dir})) {
                    for (const auto& screen : load_trace(f).screens)
                        for (const auto& c : screen.components)
                            if (!c.resource_id.empty()) scan_options.known_ids.insert(normalize_resource_id(c.resource_id));
                }
            }
            auto scan = scan_corpus(corpus_dir, scan_options, analyzer);
            for (const auto& w : scan.warnings) err << "warning: " << w << "\n";
            auto index = CorpusIndex::build(std::move(scan.documents), bm25, std::move(analyzer));
            save_index(index, index_out);
            err << "indexed " << index.doc_count() << " files, " << index.all_postings().size() << " terms -> "
                << index_out << "\n";
        } else if (*localize_cmd) {
            auto config = localize_flags.resolve();
            auto index = load_index(index_path);
            auto report = load_report(report_path);
            auto trace = load_trace(trace_path);
            auto result = localize(report, trace, index, config);
            if (!dump_context.empty()) write_file_atomic(dump_context, to_json(result.context).dump(2) + "\n");
            emit(localization_output(report, config, result.ranking).dump(2) + "\n", out_path, out);
        } else if (*model_cmd) {
            std::vector<ReproTrace> traces;
            for (const auto& f : json_inputs(trace_inputs)) traces.push_back(load_trace(f));
            auto model = build_execution_model(traces);
            err << "model: " << model.nodes().size() << " screens, " << model.edges().size() << " interactions from "
                << traces.size() << " traces\n";
            emit(to_json(model).dump(2) + "\n", model_out, out);
        } else if (*lint_cmd) {
            auto report = load_report(lint_report);
            auto model = load_model(lint_model);
            auto sentences = segment_sentences(report.body);

            std::unique_ptr<SentenceClassifier> classifier = std::make_unique<HeuristicClassifier>();
            if (auto remote = remote_config_from_env()) classifier = std::make_unique<RemoteClassifier>(*remote);
            auto tagged = classify_sentences(sentences, *classifier);
            for (const auto& w : tagged.warnings) err << "warning: " << w << "\n";

            Json j;
            j["report_id"] = report.report_id;
            j["classifier"] = classifier->name();
            j["warnings"] = tagged.warnings;
            j["sentences"] = Json::array();
            std::vector<S2RStep> steps;
            std::vector<std::string> step_sentences;
            Json unparsed = Json::array();
            for (const auto& s : tagged.sentences) {
                j["sentences"].push_back({{"text", s.text}, {"tag", to_string(s.tag)}});
                if (s.tag != SentenceTag::S2R) continue;
                try {
                    steps.push_back(parse_s2r(s.text));
                    step_sentences.push_back(s.text);
                } catch (const UnparseableStep& e) {
                    unparsed.push_back(e.sentence());
                }
            }
            auto matches = map_steps_to_model(steps, model, match_options);
            j["steps"] = Json::array();
            for (std::size_t i = 0; i < matches.size(); ++i) {
                const auto& m = matches[i];
                j["steps"].push_back({{"sentence", step_sentences[i]},
                                      {"step", step_json(m.step)},
                                      {"status", to_string(m.status)},
                                      {"similarity", m.similarity},
                                      {"edge", m.matched_edge ? edge_json(model.edges()[*m.matched_edge]) : Json(nullptr)}});
            }
            j["unparsed_steps"] = std::move(unparsed);
            auto missing = detect_missing_steps(matches, model);
            j["missing_steps"] = Json::array();
            for (const auto& gap : missing.gaps) {
                Json edges = Json::array();
                for (auto e : gap.missing_edges) edges.push_back(edge_json(model.edges()[e]));
                j["missing_steps"].push_back({{"after_step", gap.after_step},
                                              {"before_step", gap.before_step},
                                              {"from", gap.from},
                                              {"to", gap.to},
                                              {"feasible", gap.feasible},
                                              {"edges", std::move(edges)}});
            }
            j["next_steps"] = Json::array();
            for (auto it = matches.rbegin(); it != matches.rend(); ++it) {
                if (it->status != MatchStatus::matched) continue;
                for (const auto& s : suggest_next_steps(model, model.edges()[*it->matched_edge].dst))
                    j["next_steps"].push_back({{"action", s.action}, {"resource_id", s.component.resource_id},
                                               {"text", s.component.text}, {"dst", s.dst}});
                break;
            }
            emit(j.dump(2) + "\n", lint_out, out);
        } else if (*eval_cmd) {
            auto config = eval_flags.resolve();
            auto index = load_index(eval_index);
            auto dataset = load_dataset(reports_dir, traces_dir);
            err << "evaluating " << dataset.cases.size() << " reports (" << dataset.excluded_without_truth
                << " excluded without ground truth)\n";
            auto result = evaluate_config(dataset, index, config);
            emit(to_json(result).dump(2) + "\n", eval_out, out);
        } else if (*sweep_cmd) {
            auto grid = grid_from_json(parse_json(read_text_file(grid_path), grid_path));
            auto index = load_index(sweep_index);
            auto dataset = load_dataset(sweep_reports, sweep_traces);
            err << "sweeping " << grid.size() << " configurations over " << dataset.cases.size() << " reports ("
                << dataset.excluded_without_truth << " excluded without ground truth)\n";
            auto existing = read_sweep_csv(sweep_out);
            SweepOptions options;
            options.jobs = jobs;
            options.log = [&err](std::string_view msg) { err << msg << "\n"; };
            auto outcome = sweep(grid, dataset, index, options, &existing);
            write_file_atomic(sweep_out, render_sweep_csv(outcome));
            if (!details_path.empty()) {
                Json details = Json::array();
                for (const auto& config : grid.expand()) {
                    try {
                        config.validate();
                    } catch (const ConfigError&) {
                        continue;
                    }
                    details.push_back(to_json(evaluate_config(dataset, index, config)));
                }
                write_file_atomic(details_path, details.dump(2) + "\n");
            }
        }
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const fs::filesystem_error& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}

}  // namespace guibl::cli
