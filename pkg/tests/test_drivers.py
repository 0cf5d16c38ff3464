"""Verification drivers: verdicts, preconditions, and determinism."""

import json

import pytest

from minorgb.corpus import corpus_entries, matrix_from_dict
from minorgb.drivers import DRIVER_IDS, run_driver, serialize_report


def _statuses(report):
    return {c["name"]: c["status"] for c in report["claims"]}


def test_unknown_driver_rejected():
    with pytest.raises(KeyError):
        run_driver("no-such-driver")


def test_variable_matrix_driver_passes():
    r = run_driver("thm-1.1", m=2, n=3)
    assert r["verdict"] == "pass"
    assert all(s == "pass" for s in _statuses(r).values())


def test_counterexample_driver_passes():
    r = run_driver("remark-1.3")
    assert r["verdict"] == "pass"


def test_column_graded_driver_on_corpus_matrix():
    L = matrix_from_dict(corpus_entries()["colgraded-2x3"])
    r = run_driver("thm-3.2", matrix=L)
    assert r["verdict"] == "pass"


def test_degenerate_matrices_report_precondition_failures():
    zero_col = matrix_from_dict(corpus_entries()["colgraded-zero-column"])
    r = run_driver("thm-3.2", matrix=zero_col)
    sts = _statuses(r)
    assert "precondition failed" in sts.values()
    assert r["verdict"] != "fail"

    degenerate = matrix_from_dict(
        corpus_entries()["colgraded-vanishing-minor"])
    r2 = run_driver("thm-3.2", matrix=degenerate)
    assert all(s == "precondition failed" for s in _statuses(r2).values())
    assert r2["verdict"] != "fail"


def test_row_graded_driver_exhaustive_small_case():
    r = run_driver("thm-4.1", m=2, n=3, seed=1)
    sts = _statuses(r)
    assert r["verdict"] == "pass"
    claim = "all-initial-ideals-degree-m-radical-linear-equal-betti"
    assert sts.get(claim) == "pass"


def test_row_graded_driver_guardrail_skips():
    r = run_driver("thm-4.1", m=3, n=5, seed=1)
    sts = _statuses(r)
    assert r["verdict"] == "pass"
    assert "skipped" in sts.values()


def test_rigidity_driver_row_and_column():
    for grading in ("row", "column"):
        r = run_driver("cor-2.6", m=2, n=3, seed=1, grading=grading)
        assert r["verdict"] == "pass"


def test_k_polynomial_injectivity_driver():
    r = run_driver("thm-2.5", block_sizes=[2, 2])
    assert r["verdict"] == "pass"


def test_reconstruction_driver():
    r = run_driver("lemma-2.4", block_sizes=[2, 2])
    assert r["verdict"] == "pass"


def test_reports_deterministic():
    a = serialize_report(run_driver("thm-1.1", m=2, n=3))
    b = serialize_report(run_driver("thm-1.1", m=2, n=3))
    assert a == b
    json.loads(a)


def test_all_driver_ids_dispatch():
    assert len(DRIVER_IDS) == 10
    assert len(set(DRIVER_IDS)) == 10
