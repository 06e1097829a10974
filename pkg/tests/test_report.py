import json

from critlab.io import dumps
from critlab.report import run_report


def test_empty_battery():
    bundle, code = run_report({"battery": []})
    assert code == 0
    assert bundle["summary"] == {"total": 0, "passed": 0, "failed": 0}


def test_three_extractions():
    battery = [
        {"kind": "extract", "graph": {"name": "complete", "params": {"n": 5}}, "k": 1, "m": 2},
        {"kind": "extract", "graph": {"name": "complete", "params": {"n": 7}}, "k": 2, "m": 3},
        {"kind": "extract", "graph": {"name": "mycielski", "params": {"iterations": 1}}, "k": 1, "m": 3},
    ]
    bundle, code = run_report({"battery": battery})
    assert code == 0
    certs = [item["result"]["certificate"] for item in bundle["items"]]
    assert len(certs) == 3 and all(item["ok"] for item in bundle["items"])


def test_failures_are_recorded():
    battery = [
        {"kind": "extract", "graph": {"name": "cycle", "params": {"n": 5}}, "k": 1, "m": 2},
        {"kind": "mystery"},
        {"kind": "sweep", "kmax": 3, "dmax": 0},
    ]
    bundle, code = run_report({"battery": battery})
    assert code != 0
    assert [item["ok"] for item in bundle["items"]] == [False, False, True]
    assert "hypothesis not met" in bundle["items"][0]["error"]
    assert bundle["summary"]["failed"] == 2


def test_mixed_battery_is_deterministic(tmp_path):
    cfg = {
        "battery": [
            {"kind": "packages", "k": 3, "d": 1, "samples": 30, "seed": 2},
            {"kind": "boundary", "k": 2, "samples": 40, "seed": 1},
            {"kind": "recolor", "samples": 25, "seed": 5},
        ]
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg))
    a, code = run_report(path)
    b, _ = run_report(cfg)
    assert code == 0
    assert dumps(a) == dumps(b)
    assert a["items"][0]["result"]["sampled"] == 30
