import io
import json

import pytest

from farey_sl2.cli import run

from golden import HEPTAGON_ROWS, SIGNED_TILING

INTEGERS = json.dumps({"left_period": [-2], "right_period": [-2], "seed": ["0", "1"]})
HALVES = json.dumps({"core": [4], "origin": 0, "left_period": [2], "right_period": [2], "seed": ["0", "-1/2"]})


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


class FakeTTY(io.StringIO):
    def isatty(self):
        return True


def test_heptagon_frieze_text():
    code, out, _ = call("frieze", "--quiddity", "1,2,2,3,1,2,4", "--order", "7", "--format", "standard-form")
    assert code == 0
    rows = [[int(x) for x in line.split()] for line in out.splitlines()]
    assert rows == HEPTAGON_ROWS


def test_frieze_json_and_polygon_input():
    poly = json.dumps({"n": 7, "diagonals": [[1, 6], [6, 3], [3, 5], [2, 6]]})
    code, out, _ = call("frieze", "--polygon", poly, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["positive"] and data["sign_period"] == "antiperiodic"


def test_tile_signed_pair():
    code, out, _ = call("tile", "--gamma", INTEGERS, "--delta", HALVES, "--window=-3:3,-3:3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["i\\j", "-3", "-2", "-1", "0", "1", "2", "3"]
    assert [[int(x) for x in line.split("\t")[1:]] for line in lines[1:]] == SIGNED_TILING


def test_tile_json_round_trips_through_checks():
    _, out, _ = call("tile", "--gamma", INTEGERS, "--delta", HALVES, "--window=-3:3,-3:3", "--format", "json")
    assert call("check", "tame", out.strip())[0] == 0
    assert call("check", "sl2", out.strip())[0] == 0
    assert call("check", "positive", out.strip())[0] == 1


def test_itinerary_command():
    assert call("itinerary", "inf,2,1,inf,0,-1,inf")[1] == "1,1,-1,1,1,3\n"
    code, out, _ = call("itinerary", "0,inf,3", "--format", "json")
    assert json.loads(out) == {"closed": False, "itinerary": [3]}


def test_quiddity_command():
    w = json.dumps({"i0": 0, "j0": 0, "rows": [[0, -1, -3], [1, 0, -1], [3, 1, 0]]})
    assert call("quiddity", w) == (0, "3\n", "")


@pytest.mark.parametrize(
    "predicate,arg,code",
    [
        ("cycle-seq", "1,2,2,3,1,2", 0),
        ("cycle-seq", "2,2", 1),
        ("acyclic", "8,8,1,2,2,3,1,2,8,8", 1),
        ("acyclic", "2,2,2,2", 0),
        ("positive", "1,2,2,3,1,2,4", 0),
        ("clockwise", "inf,2,1,0,-1,inf", 0),
        ("clockwise", "inf,-1,0,1,2,inf", 1),
        ("cn0", "inf,1,0,inf,1,0,inf", 0),
        ("cn0", "inf,2,1,inf,0,-1,inf", 1),
    ],
)
def test_check_predicates(predicate, arg, code):
    assert call("check", predicate, arg)[0] == code


def test_limits_and_dual():
    code, out, _ = call("limits", HALVES)
    data = json.loads(out)
    assert code == 0
    assert data["backward"] == {"tag": "rational", "value": "1"}
    assert data["forward"] == {"tag": "rational", "value": "-1"}
    assert call("dual", HALVES, "--window=-6:6")[1] == "-1,inf,1\n"


def test_limits_irrational():
    spec = json.dumps({"left_period": [3], "right_period": [3]})
    data = json.loads(call("limits", spec)[1])
    assert data["forward"]["tag"] == "quadratic_irrational"
    assert data["forward"]["D"] == 5


def test_render_svg(tmp_path):
    code, out, _ = call("render", "--vertices", "inf,2,1,0,-1,inf")
    assert code == 0 and out.startswith("<svg") and out.count("<path") == 5
    target = tmp_path / "poly.svg"
    poly = json.dumps({"n": 5, "diagonals": [[0, 2], [0, 3]]})
    assert call("render", "--polygon", poly, "--output", str(target))[0] == 0
    assert "triangulated polygon" in target.read_text()


def test_roundtrip_random():
    code, out, _ = call("roundtrip", "--random", "15", "--seed", "3")
    assert code == 0 and out.strip() == "15/15 round trips passed"
    code, out, _ = call("roundtrip", "--gamma", INTEGERS, "--delta", HALVES, "--window=-3:3,-3:3")
    assert code == 0


@pytest.mark.parametrize(
    "argv,fragment",
    [
        (["tile", "--gamma", "{oops", "--delta", HALVES, "--window=-3:3,-3:3"], "malformed JSON"),
        (["itinerary", "0,2,3"], "not adjacent"),
        (["check", "tame", '{"i0": 0, "j0": 0, "rows": [[1, 2], [3, 4]]}'], "3x3"),
        (["tile", "--gamma", INTEGERS, "--delta", HALVES, "--window=3:-3,-3:3"], "not well ordered"),
        (["check", "cn0", "0,1"], "closed"),
        (["dual", INTEGERS, "--window=-3:3"], "clockwise"),
    ],
)
def test_errors_exit_two(argv, fragment):
    code, _, err = call(*argv)
    assert code == 2
    assert fragment in err


def test_unknown_subcommand():
    code, _, err = call("fly")
    assert code == 2 and "invalid choice" in err


def test_output_is_deterministic():
    argv = ("frieze", "--quiddity", "1,2,2,3,1,2,4", "--format", "tsv")
    assert call(*argv) == call(*argv)


def test_zeros_dimmed_only_on_tty(monkeypatch):
    argv = ["frieze", "--quiddity", "1,1,1", "--format", "matrix"]
    out = FakeTTY()
    run(argv, out, io.StringIO())
    assert "\x1b[2m0" in out.getvalue()
    monkeypatch.setenv("FAREY_SL2_COLOR", "0")
    out = FakeTTY()
    run(argv, out, io.StringIO())
    assert "\x1b" not in out.getvalue()
    assert "\x1b" not in call(*argv)[1]
