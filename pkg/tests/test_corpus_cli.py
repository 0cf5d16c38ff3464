"""Matrix corpus serialization and the command-line interface."""

import json
import subprocess
import sys

from minorgb.corpus import (corpus_entries, load_matrix_file,
                            matrix_from_dict, matrix_to_dict,
                            save_matrix_file)


def _run(*args):
    return subprocess.run([sys.executable, "-m", "minorgb.cli"] + list(args),
                          capture_output=True, text=True)


def test_corpus_round_trip(tmp_path):
    for name, doc in corpus_entries().items():
        L = matrix_from_dict(doc)
        back = matrix_to_dict(L)
        L2 = matrix_from_dict(back)
        assert [[str(e) for e in row] for row in L.entries] \
            == [[str(e) for e in row] for row in L2.entries]
        assert L.grading == L2.grading
        p = tmp_path / "m.mat"
        save_matrix_file(str(p), back)
        L3 = load_matrix_file(str(p))
        assert L3.m == L.m and L3.n == L.n and L3.grading == L.grading


def test_corpus_files_deterministic(tmp_path):
    from minorgb.corpus import write_corpus
    d1 = tmp_path / "a"
    d2 = tmp_path / "b"
    d1.mkdir()
    d2.mkdir()
    w1 = write_corpus(str(d1))
    w2 = write_corpus(str(d2))
    assert len(w1) == len(w2) == 14
    for f1, f2 in zip(sorted(d1.iterdir()), sorted(d2.iterdir())):
        assert f1.name == f2.name
        assert f1.read_bytes() == f2.read_bytes()


def test_cli_hilbert_closed_matches_matrix(tmp_path):
    r1 = _run("hilbert", "--closed", "2", "3")
    assert r1.returncode == 0
    r2 = _run("hilbert", "corpus/rowgraded-2x3.mat")
    assert r2.returncode == 0
    k1 = json.loads(r1.stdout)["k_polynomial"]
    k2 = json.loads(r2.stdout)["k_polynomial"]
    assert k1 == k2


def test_cli_universal_check_exit_codes():
    ok = _run("universal-check", "corpus/colgraded-2x3.mat")
    assert ok.returncode == 0
    bad = _run("universal-check", "corpus/remark-nonuniversal-a.mat")
    assert bad.returncode == 1
    payload = json.loads(bad.stdout)
    assert payload["verdict"] is False
    assert payload["failing_marking"]["normal_form"]


def test_cli_usage_errors():
    r = _run("no-such-command")
    assert r.returncode == 2
    r = _run("verify", "no-such-driver")
    assert r.returncode == 2


def test_cli_verify_deterministic_report(tmp_path):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    a = _run("verify", "identities", "--out", str(out1))
    b = _run("verify", "identities", "--out", str(out2))
    assert a.returncode == 0 and b.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert report["verdict"] == "pass"


def test_cli_gb_and_betti():
    gb = _run("gb", "corpus/colgraded-2x3.mat")
    assert gb.returncode == 0
    doc = json.loads(gb.stdout)
    assert doc["initial_ideal"] == ["x_1_1*x_1_2", "x_1_1*x_1_3",
                                    "x_1_2*x_1_3"]
    bt = _run("betti", "corpus/colgraded-2x3.mat")
    assert json.loads(bt.stdout)["totals"] == [1, 3, 2]
