import json

import pytest

from unionfam.report import CheckLedger
from unionfam.setfam import family_from_json, read_families
from workbench.scripts import USAGE_ERROR, bound, construct, search, verify


@pytest.fixture
def log_file(logdir):
    return logdir / "workbench.log"


def test_construct_to_stdout(capsys, log_file):
    assert construct("hilton-milner", 10, 3, log_file=log_file) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 1
    assert len(family_from_json(lines[0])) == 22


def test_construct_files(tmp_path, log_file):
    output, families = tmp_path / "report.json", tmp_path / "spine.jsonl"
    code = construct(
        "spine",
        10,
        3,
        i=1,
        output=output,
        families=families,
        log_file=log_file,
    )
    assert code == 0
    assert [len(F) for F in read_families(families)] == [22]
    report = json.loads(output.read_text())
    assert report["summary"] == {"pass": 1, "fail": 0, "skipped": 0}


def test_construct_anchors(tmp_path, log_file):
    families = tmp_path / "ranked.jsonl"
    code = construct(
        "ranked",
        20,
        3,
        s=2,
        t=2,
        anchors=["2,3,4", "5,6,7"],
        families=families,
        log_file=log_file,
    )
    assert code == 0
    assert [len(F) for F in read_families(families)] == [96]


def test_bad_anchors(log_file):
    code = construct("ranked", 20, 3, anchors=["2;3"], log_file=log_file)
    assert code == USAGE_ERROR


def test_bound_mismatch(tmp_path, log_file):
    output = tmp_path / "bound.csv"
    code = bound(
        "union-removal",
        n=18,
        k=3,
        s=2,
        t=2,
        beta=0,
        expected=83,
        output=output,
        format="csv",
        log_file=log_file,
    )
    assert code == 1
    assert output.read_text().startswith("check_id,claim,parameters")


def test_verify_archive(tmp_path, log_file):
    output = tmp_path / "setpairs.h5"
    assert verify("setpairs", output=output, log_file=log_file) == 0
    ledger = CheckLedger.read(output)
    assert len(ledger) == 4
    assert ledger.config["target"] == "setpairs"


def test_verify_budget(tmp_path, log_file):
    output = tmp_path / "setpairs.json"
    code = verify("setpairs", budget=1, output=output, log_file=log_file)
    assert code == 2


def test_verify_deterministic(tmp_path, log_file):
    reports = []
    for name in ("a.json", "b.json"):
        output = tmp_path / name
        verify("pairs-bound", count=8, output=output, log_file=log_file)
        reports.append(output.read_bytes())
    assert reports[0] == reports[1]


def test_unknown_suite(log_file):
    assert verify("everything", log_file=log_file) == USAGE_ERROR


def test_search_markdown(tmp_path, capsys, log_file):
    families = tmp_path / "witness.jsonl"
    code = search(
        "max",
        n=7,
        k=2,
        pattern=[1, 1],
        format="md",
        families=families,
        log_file=log_file,
    )
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("# unionfam report")
    assert "| search-max |" in out
    assert [len(F) for F in read_families(families)] == [6]


def test_search_bad_sets(log_file):
    code = search("max", n=4, k=2, must_contain=["1,x"], log_file=log_file)
    assert code == USAGE_ERROR
