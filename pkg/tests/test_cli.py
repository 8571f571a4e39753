import io
import json

import pytest

from lecturehall.cli import RenderSpec, main, render


def run(argv, stdin=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


FIG1 = json.dumps({"n": 6, "parts": [0, 1, 4, 8, 14, 30]})


def test_encode():
    code, out = run(["encode"], FIG1)
    assert code == 0
    assert json.loads(out) == {"n": 6, "defining_beads": [-2, 2, 8, 12, 16, 30], "weight": 57}


def test_encode_decode_pipe():
    _, encoded = run(["encode"], FIG1)
    code, decoded = run(["decode"], encoded)
    assert code == 0
    assert json.loads(decoded)["parts"] == [0, 1, 4, 8, 14, 30]
    assert json.loads(decoded)["kind"] == "lecture_hall"


def test_to_bounded_and_back():
    code, out = run(["to-bounded", "--n", "6", "--beads=-2,2,8,12,16,30"])
    assert code == 0
    obj = json.loads(out)
    assert obj["parts"] == [2, 4, 6, 7, 8, 9, 9, 12] and obj["weight"] == 57
    code, out = run(["from-bounded"], out)
    assert code == 0
    assert json.loads(out)["defining_beads"] == [-2, 2, 8, 12, 16, 30]


def test_deterministic():
    assert run(["stats"], FIG1) == run(["stats"], FIG1)


def test_exit_codes():
    assert run(["encode"], "{not json")[0] == 2
    assert run(["encode"], json.dumps({"n": 2}))[0] == 2
    assert run(["encode", "--n", "2", "--parts", "2,x"])[0] == 2
    assert run(["encode", "--n", "2", "--parts", "2,3"])[0] == 3
    assert run(["decode", "--n", "2", "--beads", "1,4"])[0] == 3
    assert run(["from-bounded", "--n", "6", "--parts", "2,2,7"])[0] == 3
    assert run(["verify", "--n", "50", "--max-x", "100"])[0] == 4
    assert run(["bogus"])[0] == 2


def test_enumerate_json(capsys):
    code, out = run(["enumerate", "--n", "2", "--max-weight", "5"])
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 9
    weights = [r["weight"] for r in rows]
    assert [weights.count(w) for w in range(6)] == [1, 1, 1, 2, 2, 2]
    assert "0:1 1:1 2:1 3:2 4:2 5:2" in capsys.readouterr().err


def test_enumerate_csv():
    code, out = run(["enumerate", "--n", "1", "--max-weight", "3", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0] == "weight,parts"
    assert lines[1:] == ["0,0", "1,1", "2,2", "3,3"]
    _, out = run(["enumerate", "--n", "6", "--max-weight", "8", "--family", "bounded",
                  "--format", "csv"])
    assert "8,2|6" in out.splitlines()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_families_agree_per_weight(n):
    def counts(family):
        _, out = run(["enumerate", "--n", str(n), "--max-weight", "14", "--family", family])
        ws = [json.loads(line)["weight"] for line in out.splitlines()]
        return [ws.count(w) for w in range(15)]

    assert counts("lecture_hall") == counts("bounded")


@pytest.mark.parametrize("argv", [
    ["--n", "3", "--max-x", "20"],
    ["--n", "1", "--max-x", "10", "--refined"],
    ["--n", "2", "--max-x", "0"],
])
def test_verify_ok(argv):
    code, out = run(["verify"] + argv)
    assert code == 0 and out.startswith("OK")


@pytest.mark.slow
@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("refined", [False, True])
def test_verify_desk_scale(n, refined):
    argv = ["verify", "--n", str(n), "--max-x", "30"] + (["--refined"] if refined else [])
    assert run(argv)[0] == 0


FIGURE1_TEXT = """\
(-47)(-46)(-45)(-44)(-43)(-42) (-41)(-40)(-39)(-38)(-37)(-36)
(-35)(-34)(-33)(-32)(-31)(-30)  -29 (-28)(-27)(-26)(-25)(-24)
(-23)(-22)(-21)(-20)(-19)(-18)  -17 (-16) -15 (-14)(-13)(-12)
 -11 (-10) (-9) (-8)  -7  (-6)   -5  (-4)  -3  (-2)  -1   (0)
   1   (2)   3   (4)   5   (6)    7   (8)   9   10   11  (12)
  13   14   15  (16)  17  (18)   19   20   21   22   23   24
  25   26   27   28   29  (30)   31   32   33   34   35   36

  [4]  [2]  [1]  [5]  [3]  [6]   [6]  [3]  [5]  [1]  [2]  [4]"""


def test_render_figure1():
    text = render(RenderSpec(6, (-2, 2, 8, 12, 16, 30), (-4, 2)))
    assert text == FIGURE1_TEXT
    code, out = run(["render", "--n", "6", "--beads=-2,2,8,12,16,30", "--rows=-4..3"])
    assert code == 0
    assert out.startswith(FIGURE1_TEXT.split("\n\n")[0])


def test_render_small():
    _, out = run(["render", "--n", "2", "--beads", "2,4", "--rows", "0..1", "--no-classes"])
    assert out.splitlines()[0] == " 1 (2)  3 (4)"
    _, out = run(["render", "--n", "3", "--beads=-2,-1,0", "--rows", "0..1", "--no-classes"])
    assert "(" not in out


def test_render_rejects_invalid():
    assert run(["render", "--n", "2", "--beads", "1,4"])[0] == 3
    assert run(["render", "--n", "2", "--beads", "2,4", "--rows", "3..1"])[0] == 3


def test_stats():
    code, out = run(["stats"], FIG1)
    s = json.loads(out)
    assert code == 0
    assert s["weight"] == 57
    assert s["ceilings"] == [0, 1, 2, 2, 3, 5]
    assert (s["ceiling_weight"], s["odd_ceilings"]) == (13, 3)
    assert s["window_vector"] == s["ceilings"]
    assert s["small_parts"] == [2, 4, 6]
    assert s["large_parts"] == [7, 8, 9, 9, 12]


def test_stats_edge_cases():
    s = json.loads(run(["stats", "--n", "3", "--parts", "0,0,0"])[1])
    assert s["weight"] == s["ceiling_weight"] == s["odd_ceilings"] == 0
    assert s["bounded"] == []
    s = json.loads(run(["stats", "--n", "1", "--parts", "3"])[1])
    assert s["ceilings"] == [3] and s["odd_ceilings"] == 1
    assert s["bounded"] == [1, 2] and sum(s["bounded"]) == 3
