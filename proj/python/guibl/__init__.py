"""GUI-augmented bug localization and bug report analysis."""

import json as _json

from ._core import (  # noqa: F401
    ConfigError,
    CorpusIndex,
    ExecutionModel,
    GuiContext,
    InputError,
    RankedEntry,
    RankedList,
    ReproTrace,
    SourceDocument,
    average_precision,
    build_execution_model,
    classify_sentences,
    extract_code_facets,
    gui_context,
    hits_at_k,
    load_trace,
    model_from_json,
    parse_s2r,
    parse_trace,
    porter_stem,
    preprocess,
    rank,
    reciprocal_rank,
    scan_corpus,
    score_bm25,
    score_rvsm,
    segment_sentences,
    split_identifiers,
    sweep_csv,
)
from . import _core


def localize(report, trace, index, **config):
    """Rank corpus files for ``report`` (a dict or JSON string); returns the ranked-output dict."""
    if not isinstance(report, str):
        report = _json.dumps(report)
    return _json.loads(_core.localize(report, trace, index, **config))


def evaluate_config(index, reports_dir, traces_dir, **config):
    """Evaluate one configuration; returns hits_at, mrr, map and per-report detail."""
    return _json.loads(_core.evaluate_config(index, str(reports_dir), str(traces_dir), **config))
