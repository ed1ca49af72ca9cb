#include <doctest.h>

#include <climits>
#include <fstream>
#include <random>
#include <sstream>

#include "guibl/error.hpp"
#include "guibl/evaluation.hpp"
#include "guibl/json_io.hpp"
#include "helpers.hpp"

using namespace guibl;
using Terms = std::vector<std::string>;
using Truth = std::set<std::string>;

namespace {

const CorpusIndex& notepad() {
    static const CorpusIndex idx = CorpusIndex::build(scan_corpus(support::notepad_src(), {}).documents);
    return idx;
}

const Dataset& notepad_data() {
    static const Dataset d = load_dataset(support::fixture("notepad/reports"), support::fixture("notepad/traces"));
    return d;
}

BugReport report(std::string id, std::string title, std::optional<Truth> truth) {
    BugReport r;
    r.report_id = std::move(id);
    r.title = std::move(title);
    r.ground_truth = std::move(truth);
    return r;
}

ReproTrace trace(std::string id) {
    return support::trace(std::move(id), {support::screen("app.Main", {})});
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("metric examples") {
    Terms abc{"a", "b", "c"};
    CHECK(hits_at_k(abc, {"c"}, 10) == 1);
    CHECK(hits_at_k(abc, {"c"}, 2) == 0);
    for (int k : {1, 5, 10}) CHECK(hits_at_k(abc, {"z"}, k) == 0);
    CHECK_THROWS_AS(hits_at_k(abc, {}, 1), InputError);
    CHECK_THROWS_AS(hits_at_k(abc, {"a"}, 0), ConfigError);

    CHECK(reciprocal_rank(Terms{"a", "b", "c", "d"}, {"d"}) == 0.25);
    CHECK(reciprocal_rank(abc, {"a"}) == 1.0);
    CHECK(reciprocal_rank(abc, {"z"}) == 0.0);

    CHECK(average_precision(Terms{"d1", "d2", "d3"}, {"d1", "d3"}) == doctest::Approx((1.0 + 2.0 / 3.0) / 2).epsilon(1e-12));
    CHECK(std::abs(average_precision(Terms{"d1", "d2", "d3"}, {"d1", "d3"}) - 0.8333) < 1e-4);
    CHECK(average_precision(Terms{"x", "y", "z"}, {"x", "y"}) == 1.0);
    CHECK(average_precision(abc, {"q"}) == 0.0);
    CHECK(first_relevant_rank(abc, {"b", "c"}) == 2);
    CHECK_FALSE(first_relevant_rank(abc, {"q"}).has_value());
}

TEST_CASE("metrics agree with brute-force oracles") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> truth_size(1, 5), k(1, 12);
    for (int round = 0; round < 1000; ++round) {
        auto ranking = support::random_ranking(rng, 20, 24);
        Truth truth;
        std::uniform_int_distribution<int> any(0, 29);
        for (int i = truth_size(rng); i > 0; --i) truth.insert("f" + std::to_string(any(rng)));
        int kk = k(rng);
        CHECK(hits_at_k(ranking, truth, kk) == oracle::hits_at_k(ranking, truth, kk));
        CHECK(reciprocal_rank(ranking, truth) == oracle::reciprocal_rank(ranking, truth));
        CHECK(average_precision(ranking, truth) == oracle::average_precision(ranking, truth));
    }
}

TEST_CASE("dataset pairing") {
    std::vector<BugReport> reports{report("b", "x", Truth{"x.java"}), report("a", "x", Truth{"x.java"}),
                                   report("c", "x", std::nullopt)};
    auto d = make_dataset(reports, {trace("a"), trace("b")});
    REQUIRE(d.cases.size() == 2);
    CHECK(d.cases[0].report.report_id == "a");
    CHECK(d.excluded_without_truth == 1);

    try {
        make_dataset({report("lonely", "x", Truth{"x.java"})}, {trace("a")});
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("lonely") != std::string::npos);
    }
    CHECK_THROWS_AS(make_dataset(reports, {trace("a"), trace("a"), trace("b")}), InputError);

    CHECK(notepad_data().cases.size() == 10);
    CHECK(notepad_data().excluded_without_truth == 1);
}

TEST_CASE("evaluate_config aggregates") {
    auto idx = support::index_of({{"hit.java", {"alpha", "beta"}}, {"other.java", {"gamma"}}});
    Dataset one;
    one.cases.push_back({report("r1", "alpha", Truth{"hit.java"}), trace("r1")});
    auto r = evaluate_config(one, idx, {});
    CHECK(r.hits_at.at(1) == 1.0);
    CHECK(r.hits_at.at(10) == 1.0);
    CHECK(r.mrr == 1.0);

    Dataset two = one;
    two.cases.push_back({report("r2", "alpha", Truth{"missing.java"}), trace("r2")});
    auto r2 = evaluate_config(two, idx, {});
    CHECK(r2.mrr == 0.5);
    CHECK(r2.report_count == 2);
    CHECK(mean_first_relevant_rank(r2, 3) == 2.0);
}

TEST_CASE("fixture metrics equal a recomputation from the full rankings") {
    PipelineConfig cfg;
    cfg.query_strategy = QueryStrategy::expand;
    cfg.rerank_strategy = RerankStrategy::filter_boost;
    auto result = evaluate_config(notepad_data(), notepad(), cfg);

    auto full = cfg;
    full.top_k = INT_MAX;
    double h[3] = {0, 0, 0}, mrr = 0, map = 0;
    for (const auto& c : notepad_data().cases) {
        auto ranking = ranked_paths(localize(c.report, c.trace, notepad(), full).ranking);
        const auto& truth = *c.report.ground_truth;
        h[0] += oracle::hits_at_k(ranking, truth, 1);
        h[1] += oracle::hits_at_k(ranking, truth, 5);
        h[2] += oracle::hits_at_k(ranking, truth, 10);
        mrr += oracle::reciprocal_rank(ranking, truth);
        map += oracle::average_precision(ranking, truth);
    }
    const double n = static_cast<double>(notepad_data().cases.size());
    CHECK(result.hits_at.at(1) == doctest::Approx(h[0] / n).epsilon(1e-12));
    CHECK(result.hits_at.at(5) == doctest::Approx(h[1] / n).epsilon(1e-12));
    CHECK(result.hits_at.at(10) == doctest::Approx(h[2] / n).epsilon(1e-12));
    CHECK(result.mrr == doctest::Approx(mrr / n).epsilon(1e-12));
    CHECK(result.map_score == doctest::Approx(map / n).epsilon(1e-12));
    CHECK(result.hits_at.at(1) <= result.hits_at.at(5));
    CHECK(result.hits_at.at(5) <= result.hits_at.at(10));
}

TEST_CASE("sweep grid expansion") {
    auto grid = grid_from_json(parse_json(read_text_file(support::fixture("grids/grid72.json")), "grid"));
    CHECK(grid.size() == 72);
    auto configs = grid.expand();
    REQUIRE(configs.size() == 72);
    CHECK(configs[0].scorer == Scorer::bm25);
    CHECK(configs[0].window == 1);
    CHECK(configs[1].window == 2);
    CHECK(configs[3].rerank_strategy == RerankStrategy::filter);
    CHECK(configs[71].scorer == Scorer::rvsm);
    CHECK(configs[71].query_strategy == QueryStrategy::replace);
    CHECK(configs[71].rerank_strategy == RerankStrategy::filter_boost);

    auto dup = grid;
    dup.windows = {1, 1};
    CHECK_THROWS_AS(dup.expand(), ConfigError);
    auto empty = grid;
    empty.scorers.clear();
    CHECK_THROWS_AS(empty.expand(), ConfigError);
    CHECK_THROWS_AS(grid_from_json(Json{{"scorer", {"bm25"}}}), ConfigError);
}

TEST_CASE("sweep rows, resume and parallel runs") {
    SweepGrid single;
    auto one = sweep(single, notepad_data(), notepad());
    REQUIRE(one.rows.size() == 1);
    CHECK(one.rows[0] == sweep_csv_row(evaluate_config(notepad_data(), notepad(), single.base)));

    SweepGrid grid;
    grid.rerank_strategies = {RerankStrategy::none, RerankStrategy::boost};
    grid.windows = {0, 1, 3};
    std::vector<std::string> log;
    SweepOptions opts;
    opts.log = [&](std::string_view l) { log.emplace_back(l); };
    auto out = sweep(grid, notepad_data(), notepad(), opts);
    CHECK(out.rows.size() == 4);
    CHECK(out.skipped.size() == 2);
    CHECK(out.evaluated == 4);

    opts.jobs = 3;
    auto parallel = sweep(grid, notepad_data(), notepad(), opts);
    CHECK(parallel.rows == out.rows);

    support::TempDir dir;
    auto csv = dir / "s.csv";
    write_file_atomic(csv, render_sweep_csv(out));
    CHECK(lines(read_text_file(csv))[0] == kSweepCsvHeader);
    auto existing = read_sweep_csv(csv);
    CHECK(existing.size() == 4);
    auto again = sweep(grid, notepad_data(), notepad(), {}, &existing);
    CHECK(again.reused == 4);
    CHECK(again.evaluated == 0);
    CHECK(render_sweep_csv(again) == render_sweep_csv(out));

    CHECK(read_sweep_csv(dir / "absent.csv").empty());
    write_file_atomic(dir / "bad.csv", "a,b,c\n");
    CHECK_THROWS_AS(read_sweep_csv(dir / "bad.csv"), InputError);
}

TEST_CASE("sweep key and row format") {
    PipelineConfig c;
    c.expansion_weight = 0.5;
    CHECK(sweep_row_key(c) == "bm25,base,none,3,all,0.5");
    EvalResult r;
    r.config = c;
    r.hits_at = {{1, 0.5}, {5, 1.0}, {10, 1.0}};
    r.mrr = 2.0 / 3.0;
    r.map_score = 0.25;
    r.report_count = 4;
    CHECK(sweep_csv_row(r) == "bm25,base,none,3,all,0.5,0.500000,1.000000,1.000000,0.666667,0.250000,4");
}
