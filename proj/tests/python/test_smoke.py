import json
import math
import os
from pathlib import Path

import pytest

import guibl

FIXTURES = Path(os.environ.get("GUIBL_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))
NOTEPAD = FIXTURES / "notepad"


@pytest.fixture(scope="module")
def index():
    return guibl.CorpusIndex.build(guibl.scan_corpus(NOTEPAD / "src"))


def test_preprocess_splits_identifiers():
    assert guibl.split_identifiers("saveNoteButton") == ["save", "note", "button"]
    assert "note" in guibl.preprocess("saveNoteButton")


def test_bm25_small_example():
    docs = guibl.scan_corpus(NOTEPAD / "src")
    idx = guibl.CorpusIndex.build(docs)
    assert idx.doc_count == len(docs) == 35
    ranked = guibl.score_bm25(idx, ["theme"])
    assert len(ranked) > 0
    scores = [e.score for e in ranked.entries]
    assert scores == sorted(scores, reverse=True)
    assert guibl.rank(idx, ["theme"], "rvsm").paths()


def test_parse_s2r():
    step = guibl.parse_s2r("Tap the save button on the editor screen")
    assert step["action"] == "click"
    assert step["object"] == "save button"
    assert step["preposition"] == "on"


def test_localize_fixture(index):
    report = json.loads((NOTEPAD / "reports" / "NP-2.json").read_text())
    trace = guibl.load_trace(NOTEPAD / "traces" / "NP-2.json")
    out = guibl.localize(report, trace, index, query="expand", rerank="filter_boost", top_k=5)
    assert out["report_id"] == "NP-2"
    assert len(out["ranking"]) == 5


def test_metrics_and_evaluation(index):
    assert guibl.hits_at_k(["a", "b", "c"], {"c"}, 10) == 1
    assert guibl.reciprocal_rank(["a", "b", "c", "d"], {"d"}) == 0.25
    assert math.isclose(guibl.average_precision(["d1", "d2", "d3"], {"d1", "d3"}), 5 / 6)
    result = guibl.evaluate_config(index, NOTEPAD / "reports", NOTEPAD / "traces")
    assert 0.0 <= result["mrr"] <= 1.0


def test_errors_map_to_exceptions(index):
    with pytest.raises(guibl.ConfigError):
        guibl.rank(index, ["x"], "bert")
    with pytest.raises(guibl.InputError):
        guibl.parse_trace("{")
