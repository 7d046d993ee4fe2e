import json

from unionfam.report import SCHEMA_VERSION
from workbench import RunConfig, __version__, run


def test_report_metadata():
    config = RunConfig("bound", "skew-pairs", {"k": 2, "l": 2})
    report = run(config)
    assert report.tool_version == __version__
    assert report.schema == SCHEMA_VERSION
    assert report.config == config.to_dict()
    assert list(report.actual) == [6]


def test_runs_are_identical():
    config = RunConfig("verify", "peel", seed=3, count=10)
    first = run(config).to_json()
    assert run(config).to_json() == first

    other = run(RunConfig("verify", "peel", seed=4, count=10)).to_json()
    assert json.loads(other)["config"]["seed"] == 4


def test_records_sorted():
    report = run(RunConfig("verify", "setpairs"))
    keys = [
        (r["check_id"], json.dumps(r["parameters"], sort_keys=True))
        for r in report
    ]
    assert keys == sorted(keys)


def test_sink_receives_families():
    families = []
    params = {"n": 4, "k": 2, "pattern": [1, 1]}
    config = RunConfig("search", "maximal", params)
    run(config, families.append)
    assert [len(F) for F in families] == [3, 3]
