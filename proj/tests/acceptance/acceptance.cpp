// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "guibl/error.hpp"
#include "guibl/evaluation.hpp"
#include "guibl/json_io.hpp"
#include "guibl/report.hpp"
#include "helpers.hpp"

using namespace guibl;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and budgets.
constexpr double kScoreTolerance = 1e-9;
constexpr double kExampleTolerance = 1e-4;
constexpr double kMetricBudgetSeconds = 1.0;
constexpr double kBenchmarkBudgetSeconds = 10.0;
constexpr double kLargeSweepBudgetSeconds = 300.0;
constexpr double kMinLabelAccuracy = 10.0 / 12.0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

const CorpusIndex& notepad() {
    static const CorpusIndex idx = CorpusIndex::build(scan_corpus(support::notepad_src(), {}).documents);
    return idx;
}

const Dataset& notepad_data() {
    static const Dataset d =
        load_dataset(support::fixture("notepad/reports"), support::fixture("notepad/traces"));
    return d;
}

bool same_scores(const RankedList& got, const oracle::Scores& want) {
    if (got.entries.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i) {
        if (got.entries[i].path != want[i].first) return false;
        if (std::abs(got.entries[i].score - want[i].second) > kScoreTolerance) return false;
    }
    return true;
}

Outcome metrics_vs_oracle() {
    Outcome o;
    std::mt19937 rng(20261018);
    std::uniform_int_distribution<int> any(0, 29), size(1, 5);
    auto t0 = Clock::now();
    for (int round = 0; round < 50; ++round) {
        auto ranking = support::random_ranking(rng, 20, 24);
        std::set<std::string> truth;
        for (int i = size(rng); i > 0; --i) truth.insert("f" + std::to_string(any(rng)));
        for (int k : kHitsCutoffs)
            o.require(hits_at_k(ranking, truth, k) == oracle::hits_at_k(ranking, truth, k), "hits@k");
        o.require(reciprocal_rank(ranking, truth) == oracle::reciprocal_rank(ranking, truth), "reciprocal rank");
        o.require(average_precision(ranking, truth) == oracle::average_precision(ranking, truth), "average precision");
    }
    o.require(std::abs(average_precision(std::vector<std::string>{"d1", "d2", "d3"}, {"d1", "d3"}) - 0.8333) < kExampleTolerance, "AP example");
    double elapsed = seconds_since(t0);
    o.require(elapsed < kMetricBudgetSeconds, "time budget");
    if (o.pass) o.detail = "50 instances exact";
    return o;
}

Outcome scorers_vs_oracle() {
    Outcome o;
    auto two = support::index_of({{"d1", {"a", "b"}}, {"d2", {"b"}}});
    std::vector<std::string> qa{"a"};
    auto r = score_bm25(two, qa);
    o.require(r.entries.size() == 1 && std::abs(r.entries[0].score - 0.6100) < kExampleTolerance, "bm25 example");

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ndocs(1, 8), len(0, 12), word(0, 9), qlen(1, 6);
    for (int round = 0; round < 200; ++round) {
        std::vector<oracle::Doc> docs;
        for (int d = ndocs(rng); d > 0; --d) {
            oracle::Doc doc{"p" + std::to_string(docs.size()) + ".java", {}};
            for (int i = len(rng); i > 0; --i) doc.tokens.push_back("w" + std::to_string(word(rng)));
            docs.push_back(std::move(doc));
        }
        std::vector<std::string> q;
        for (int i = qlen(rng); i > 0; --i) q.push_back("w" + std::to_string(word(rng)));
        auto idx = support::index_of(docs);
        o.require(same_scores(score_bm25(idx, q), oracle::bm25(docs, q)), "bm25 random round " + std::to_string(round));
        o.require(same_scores(score_rvsm(idx, q), oracle::rvsm(docs, q)), "rvsm random round " + std::to_string(round));
    }
    if (o.pass) o.detail = "200 random corpora within 1e-9";
    return o;
}

Outcome rerank_invariants() {
    Outcome o;
    std::mt19937 rng(99);
    std::bernoulli_distribution coin(0.3);
    for (int round = 0; round < 100; ++round) {
        auto names = support::random_ranking(rng, 20, 25);
        RankedList input;
        double score = 100;
        for (const auto& n : names) input.entries.push_back({n, score -= 1.0, {}});
        GuiContext ctx;
        for (int i = 0; i < 25; ++i) {
            auto f = "f" + std::to_string(i);
            if (coin(rng)) ctx.activity_files.insert(f);
            if (coin(rng)) ctx.listener_files.insert(f);
            if (coin(rng)) ctx.component_files.insert(f);
        }
        auto boosted = ctx.boosted();
        auto related = ctx.gui_related();
        o.require(std::includes(related.begin(), related.end(), boosted.begin(), boosted.end()), "boosted subset");

        auto in = ranked_paths(input);
        auto boost = ranked_paths(apply_rerank(input, ctx, RerankStrategy::boost));
        auto filter = ranked_paths(apply_rerank(input, ctx, RerankStrategy::filter));
        auto fb = ranked_paths(apply_rerank(input, ctx, RerankStrategy::filter_boost));

        std::vector<std::string> expected;
        std::copy_if(in.begin(), in.end(), std::back_inserter(expected), [&](auto& p) { return boosted.count(p) > 0; });
        std::copy_if(in.begin(), in.end(), std::back_inserter(expected), [&](auto& p) { return boosted.count(p) == 0; });
        o.require(boost == expected, "boost is a stable partition");

        std::vector<std::string> kept;
        std::copy_if(in.begin(), in.end(), std::back_inserter(kept), [&](auto& p) { return related.count(p) > 0; });
        o.require(filter == (related.empty() ? in : kept), "filter keeps gui-related files in order");

        std::set<std::string> fs(filter.begin(), filter.end()), fbs(fb.begin(), fb.end());
        o.require(std::includes(fs.begin(), fs.end(), fbs.begin(), fbs.end()), "filter_boost within filter");
    }
    if (o.pass) o.detail = "100 random rankings";
    return o;
}

Outcome fixture_benchmark() {
    Outcome o;
    auto t0 = Clock::now();
    const int miss = static_cast<int>(notepad().doc_count()) + 1;
    std::ostringstream d;
    for (Scorer s : {Scorer::bm25, Scorer::rvsm}) {
        PipelineConfig base;
        base.scorer = s;
        PipelineConfig gui = base;
        gui.query_strategy = QueryStrategy::expand;
        gui.rerank_strategy = RerankStrategy::filter_boost;
        PipelineConfig narrow = gui;
        narrow.window = 1;

        auto rb = evaluate_config(notepad_data(), notepad(), base);
        auto rg = evaluate_config(notepad_data(), notepad(), gui);
        auto rn = evaluate_config(notepad_data(), notepad(), narrow);
        double mb = mean_first_relevant_rank(rb, miss), mg = mean_first_relevant_rank(rg, miss);
        auto name = std::string(to_string(s));
        o.require(rg.hits_at.at(10) >= rb.hits_at.at(10), name + ": hits@10 dropped");
        o.require(mg <= mb, name + ": mean first-relevant rank got worse");
        o.require(rg.mrr >= rn.mrr, name + ": window 3 below window 1");
        d << name << " rank " << mb << "->" << mg << " mrr w1 " << rn.mrr << " w3 " << rg.mrr << "; ";
    }
    double elapsed = seconds_since(t0);
    o.require(elapsed < kBenchmarkBudgetSeconds, "time budget");
    if (o.pass) o.detail = d.str() + std::to_string(elapsed) + "s";
    return o;
}

SweepGrid load_grid(const char* name) {
    return grid_from_json(parse_json(read_text_file(support::fixture(std::string("grids/") + name)), name));
}

Outcome sweeps() {
    Outcome o;
    support::TempDir dir;
    auto grid = load_grid("grid72.json");
    auto first = sweep(grid, notepad_data(), notepad());
    o.require(first.rows.size() == 72, "grid72 row count");
    auto csv = dir / "s.csv";
    write_file_atomic(csv, render_sweep_csv(first));
    auto bytes = read_text_file(csv);
    auto existing = read_sweep_csv(csv);
    auto again = sweep(grid, notepad_data(), notepad(), {}, &existing);
    o.require(again.reused == 72 && again.evaluated == 0, "re-run should reuse every row");
    o.require(render_sweep_csv(again) == bytes, "re-run changed the table");
    o.require(sweep(grid, notepad_data(), notepad()).rows == first.rows, "fresh run differs");

    auto t0 = Clock::now();
    auto large = sweep(load_grid("grid657.json"), notepad_data(), notepad());
    double elapsed = seconds_since(t0);
    o.require(large.rows.size() == 657, "grid657 row count");
    o.require(elapsed < kLargeSweepBudgetSeconds, "grid657 time budget");
    if (o.pass) o.detail = "72 rows idempotent; 657 rows in " + std::to_string(elapsed) + "s";
    return o;
}

Outcome report_analysis() {
    Outcome o;
    auto data = parse_json(read_text_file(support::fixture("analysis/labeled_reports.json")), "labels");
    int total = 0, correct = 0;
    bool version_other = false;
    for (const auto& r : data) {
        auto sentences = segment_sentences(r["body"].get<std::string>());
        if (sentences.size() != r["labels"].size()) {
            o.require(false, "segmentation of " + r["report_id"].get<std::string>());
            continue;
        }
        for (std::size_t i = 0; i < sentences.size(); ++i) {
            auto tag = HeuristicClassifier::tag(sentences[i]);
            ++total;
            if (to_string(tag) == r["labels"][i].get<std::string>()) ++correct;
            if (sentences[i].text.starts_with("App Version")) version_other = tag == SentenceTag::OTHER;
        }
    }
    double accuracy = total ? static_cast<double>(correct) / total : 0.0;
    o.require(accuracy >= kMinLabelAccuracy, "label accuracy " + std::to_string(accuracy));
    o.require(version_other, "version line not OTHER");

    std::vector<ReproTrace> traces{load_trace(support::fixture("analysis/gap/trace.json"))};
    auto model = build_execution_model(traces);
    auto report = load_report(support::fixture("analysis/gap/report.json"));
    std::vector<S2RStep> steps;
    for (const auto& s : segment_sentences(report.body))
        if (HeuristicClassifier::tag(s) == SentenceTag::S2R) steps.push_back(parse_s2r(s.text));
    auto gaps = detect_missing_steps(map_steps_to_model(steps, model), model);
    bool gap_ok = gaps.gaps.size() == 1 && gaps.gaps[0].missing_edges.size() == 1 &&
                  model.edges()[gaps.gaps[0].missing_edges[0]].component.resource_id == "org.demo.mail:id/account_row";
    o.require(gap_ok, "planted gap");

    auto suite = parse_json(read_text_file(support::fixture("analysis/s2r_slots.json")), "slots");
    int slots_ok = 0;
    for (const auto& c : suite) {
        try {
            auto s = parse_s2r(c["sentence"].get<std::string>());
            S2RStep want{c["subject"], c["action"], c["object"], c["preposition"].get<std::string>(),
                         c["object2"].get<std::string>()};
            if (s == want) ++slots_ok;
        } catch (const UnparseableStep&) {
        }
    }
    o.require(slots_ok == static_cast<int>(suite.size()), "slots " + std::to_string(slots_ok));
    if (o.pass)
        o.detail = "accuracy " + std::to_string(correct) + "/" + std::to_string(total) + ", gap found, slots " +
                   std::to_string(slots_ok) + "/" + std::to_string(suite.size());
    return o;
}

Outcome round_trips() {
    Outcome o;
    support::TempDir dir;
    for (const char* name : {"idx.json", "idx.cbor"}) {
        save_index(notepad(), dir / name);
        auto back = load_index(dir / name);
        o.require(to_json(back) == to_json(notepad()), std::string("index round-trip ") + name);
        std::vector<std::string> q{"note", "theme", "backup"};
        o.require(score_bm25(back, q) == score_bm25(notepad(), q), "reloaded index scores");
    }

    std::vector<ReproTrace> traces;
    for (const auto& c : notepad_data().cases) traces.push_back(c.trace);
    auto model = build_execution_model(traces);
    save_model(model, dir / "model.json");
    auto loaded = load_model(dir / "model.json");
    o.require(loaded.node_keys() == model.node_keys() && loaded.edge_keys() == model.edge_keys() &&
                  loaded.nodes() == model.nodes() && loaded.edges() == model.edges(),
              "model round-trip");

    std::mt19937 rng(5);
    for (int p = 0; p < 10; ++p) {
        std::shuffle(traces.begin(), traces.end(), rng);
        auto m = build_execution_model(traces);
        o.require(m.node_keys() == model.node_keys() && m.edge_keys() == model.edge_keys(), "trace order changed model");
    }
    if (o.pass)
        o.detail = std::to_string(model.nodes().size()) + " nodes, " + std::to_string(model.edges().size()) + " edges";
    return o;
}

std::string quote(const support::fs::path& p) { return "'" + p.string() + "'"; }

int shell(const std::string& cmd) { return std::system((cmd + " 2>/dev/null").c_str()); }

Outcome cli_determinism() {
    Outcome o;
    support::TempDir dir;
    const std::string cli = quote(GUIBL_CLI_PATH);
    auto idx = dir / "idx.cbor";
    o.require(shell(cli + " index --corpus " + quote(support::notepad_src()) + " --out " + quote(idx)) == 0, "index");

    for (int i = 0; i < 2; ++i) {
        auto n = std::to_string(i);
        o.require(shell(cli + " localize --index " + quote(idx) + " --report " +
                        quote(support::fixture("notepad/reports/NP-4.json")) + " --trace " +
                        quote(support::fixture("notepad/traces/NP-4.json")) +
                        " --query expand --rerank filter-boost --out " + quote(dir / ("loc" + n + ".json"))) == 0,
                  "localize");
        o.require(shell(cli + " sweep --index " + quote(idx) + " --reports " + quote(support::fixture("notepad/reports")) +
                        " --traces " + quote(support::fixture("notepad/traces")) + " --grid " +
                        quote(support::fixture("grids/grid72.json")) + " --out " + quote(dir / ("sweep" + n + ".csv"))) == 0,
                  "sweep");
    }
    if (!o.pass) return o;
    o.require(read_text_file(dir / "loc0.json") == read_text_file(dir / "loc1.json"), "localize output differs");
    o.require(read_text_file(dir / "sweep0.csv") == read_text_file(dir / "sweep1.csv"), "sweep output differs");
    if (o.pass) o.detail = "localize and sweep byte-identical across runs";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"metrics match brute-force oracles", metrics_vs_oracle},
        {"scorers match dense reference", scorers_vs_oracle},
        {"re-ranking invariants", rerank_invariants},
        {"GUI evidence improves fixture ranking", fixture_benchmark},
        {"sweep row counts, resume and large grid", sweeps},
        {"report analysis: tags, gaps, slots", report_analysis},
        {"index and model round-trips", round_trips},
        {"cli output is deterministic", cli_determinism},
    };
    int failed = 0;
    int n = 0;
    for (const auto& [name, check] : criteria) {
        ++n;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " (" << o.detail << ")\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
