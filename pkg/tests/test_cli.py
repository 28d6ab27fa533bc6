"""Command-line interface: exit codes, JSON shapes, determinism."""

import io
import json

from ultraconv.cli import EXIT_OK, EXIT_USAGE, EXIT_VIOLATION, main


def run(argv, stdin_text=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return code, out.getvalue()


def run_json(argv, payload=None):
    text = "" if payload is None else json.dumps(payload)
    code, out = run(argv, text)
    return code, (json.loads(out) if out else None)


# ---------------------------------------------------------------------------
# golden outputs

def test_hull_golden_compact():
    code, out = run(["hull", "--json"],
                    '{"points": [["0","0"],["1","0"],["0","1"]]}')
    assert code == EXIT_OK
    assert out == ('{"free":[],"integral":[["0","1"],["1","0"]],'
                   '"translate":["0","0"]}\n')


def test_radon_golden():
    code, report = run_json(["radon", "--field", "padic:5"],
                            {"points": [["0"], ["1"], ["5"]]})
    assert code == EXIT_OK
    assert report == {"index": 0, "coefficients": ["5/4", "-1/4"]}


def test_witness_counterexample_golden():
    code, report = run_json(["witness", "counterexample"])
    assert code == EXIT_OK
    assert report == {
        "fieldUsed": "padic:2",
        "points": [["0", "0", "0"], ["1", "0", "0"], ["0", "1", "1"]],
        "weights": ["-1", "1", "1"],
        "combination": ["1", "1", "1"],
    }


def test_member_reports_boolean():
    cset = {"translate": ["0", "0"], "free": [],
            "integral": [["1", "0"], ["0", "1"]]}
    code, report = run_json(["member"], {"set": cset, "point": ["1", "1"]})
    assert code == EXIT_OK and report == {"member": True}
    code, report = run_json(["member"], {"set": cset, "point": ["1/2", "0"]})
    assert code == EXIT_OK and report == {"member": False}


def test_intersect_round_trips_through_json():
    ball = {"translate": ["0", "0"], "free": [],
            "integral": [["1", "0"], ["0", "1"]]}
    shifted = {"translate": ["1", "1"], "free": [],
               "integral": [["2", "0"], ["0", "2"]]}
    code, report = run_json(["intersect"], {"first": ball, "second": shifted})
    assert code == EXIT_OK
    assert report == {"translate": ["1", "1"], "free": [],
                      "integral": [["0", "2"], ["2", "0"]]}


def test_flag_and_box_of_same_set_agree_on_weights():
    cset = {"translate": ["0", "0"], "free": [],
            "integral": [["1", "0"], ["3", "3"]]}
    code, flag = run_json(["flag", "--field", "padic:3"], {"set": cset})
    assert code == EXIT_OK
    code, box = run_json(["box", "--field", "padic:3"], {"set": cset})
    assert code == EXIT_OK
    assert flag["entries"][0]["delta"] == {"atLeast": 0}
    assert flag["entries"][1]["delta"] == {"atLeast": 1}
    assert box["deltas"] == [{"atLeast": 0}, {"atLeast": 1}]


def test_tvcount_reports_conjecture_floor():
    code, report = run_json(["tvcount", "--field", "padic:5"],
                            {"points": [["0"], ["1"], ["5"]], "r": 2})
    assert code == EXIT_OK
    assert report == {"count": 2, "conjecturedFloor": 1, "meetsFloor": True}


def test_shatter_reports_violation():
    code, report = run_json(
        ["shatter"],
        {"points": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]})
    assert code == EXIT_OK
    assert report["shattered"] is False
    assert "failingSubset" in report and "violator" in report


def test_selection_and_frachelly_shapes():
    code, report = run_json(
        ["selection"],
        {"points": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]})
    assert code == EXIT_OK
    assert report["count"] == 4 and report["total"] == 4

    fam = [{"translate": ["0"], "free": [], "integral": [["2"]]},
           {"translate": ["0"], "free": [], "integral": [["4"]]}]
    code, report = run_json(["frachelly"], {"family": fam, "k": 2})
    assert code == EXIT_OK
    assert report == {"alpha": "1", "beta": "1"}


def test_verify_reports_per_property_lines():
    code, report = run_json(
        ["verify", "--suite", "field", "--seed", "7", "--trials", "10"])
    assert code == EXIT_OK
    assert report["ok"] is True
    names = [r["property"] for r in report["results"]]
    assert "val_multiplicative" in names and "parse_render_roundtrip" in names
    assert all(r["ok"] for r in report["results"])


# ---------------------------------------------------------------------------
# determinism

def test_identical_invocations_are_byte_identical():
    argv = ["hull", "--field", "padic:3", "--json"]
    payload = '{"points": [["1","2"],["4","5"],["7","9"]]}'
    first = run(argv, payload)
    second = run(argv, payload)
    assert first == second

    v = ["verify", "--suite", "linalg", "--seed", "42", "--trials", "8", "--json"]
    assert run(v) == run(v)


def test_seed_changes_verify_sampling_not_status():
    a = run_json(["verify", "--suite", "field", "--seed", "1", "--trials", "8"])
    b = run_json(["verify", "--suite", "field", "--seed", "2", "--trials", "8"])
    assert a[0] == b[0] == EXIT_OK
    assert a[1]["seed"] == 1 and b[1]["seed"] == 2


# ---------------------------------------------------------------------------
# exit codes

def test_usage_errors_exit_2():
    # unknown field
    code, _ = run(["hull", "--field", "padic:4"], '{"points": [["0"]]}')
    assert code == EXIT_USAGE
    # stdin is not JSON
    code, _ = run(["hull"], "this is not json")
    assert code == EXIT_USAGE
    # missing payload key
    code, _ = run(["hull"], '{"wrong": []}')
    assert code == EXIT_USAGE
    # malformed element text
    code, _ = run(["hull"], '{"points": [["zebra"]]}')
    assert code == EXIT_USAGE
    # unknown subcommand
    code, _ = run(["frobnicate"], "")
    assert code == EXIT_USAGE
    # radon with too few points
    code, _ = run(["radon"], '{"points": [["0"], ["1"]]}')
    assert code == EXIT_USAGE


def test_violation_exit_1_on_empty_breadth():
    fam = [{"translate": ["0"], "free": [], "integral": []},
           {"translate": ["1"], "free": [], "integral": []}]
    code, _ = run(["breadth"], json.dumps({"family": fam}))
    assert code == EXIT_VIOLATION


def test_help_exits_cleanly():
    code, _ = run(["--help"])
    assert code == EXIT_OK
