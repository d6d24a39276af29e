import json

import pytest

from fencekit.cli import main
from fencekit.quiver import FORMAT


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def star_path(tmp_path):
    spec = {
        "format": FORMAT,
        "vertices": [
            {"id": "h", "role": "head", "dim": 2},
            {"id": "t1", "role": "tail", "dim": 1},
            {"id": "t2", "role": "tail", "dim": 1},
        ],
        "arrows": [{"tail": "t1", "head": "h"}, {"tail": "t2", "head": "h"}],
        "linearization": {"r": {"h": 1}, "e": {"t1": 1, "t2": 1}},
    }
    path = tmp_path / "star.json"
    path.write_text(json.dumps(spec))
    return path


def test_lr(capsys):
    code, out, _ = _run(capsys, "lr", "--f", "3,2,1", "--d", "2,1", "--e", "2,1")
    assert code == 0 and out.strip() == "2"


def test_lr_json_is_deterministic(capsys):
    argv = ["lr", "--f", "3,2,1", "--d", "2,1", "--e", "2,1", "--format", "json"]
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second
    assert json.loads(first) == {"F": [3, 2, 1], "D": [2, 1], "E": [2, 1], "value": 2}


def test_small_commands(capsys):
    assert _run(capsys, "multi-lr", "--f", "2,1", "--d", "1", "--d", "1", "--d", "1", "--n", "3")[1].strip() == "2"
    assert _run(capsys, "kostka", "--f", "2,1", "--content", "1,1,1")[1].strip() == "2"
    assert _run(capsys, "dim", "--f", "2,1", "--n", "3")[1].strip() == "8"
    assert _run(capsys, "cauchy", "--n", "2", "--k", "2", "--degree", "2")[1].strip() == "10 == 10 OK"
    assert _run(capsys, "transfer", "--n", "2", "--m", "2", "--comp-n", "2", "--comp-m", "2", "--f", "1,1")[1].strip() == "1 1 OK"


def test_gm_verify(capsys, star_path):
    code, out, _ = _run(capsys, "gm-verify", "--quiver", str(star_path), "--nmax", "3", "--format", "json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["heads"] for r in rows] == [1, 1, 1, 1]
    assert all(r["agree"] for r in rows)
    code, out, _ = _run(capsys, "gm-verify", "--quiver", str(star_path), "--nmax", "1", "--no-oracle")
    assert out.splitlines()[0].split("\t") == ["N", "label", "heads", "tails", "oracle", "agree"]
    assert out.splitlines()[2].endswith("-\ttrue")


def test_component_and_oracle(capsys, star_path):
    code, out, _ = _run(capsys, "component", "--quiver", str(star_path), "--label", "h=1,1",
                        "--label", "t1=1", "--label", "t2=1", "--oracle", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == payload["oracle"] == 1


def test_stability(capsys, star_path, tmp_path):
    rep = tmp_path / "rep.json"
    rep.write_text(json.dumps({"format": FORMAT, "p": 3, "matrices": {"0": [[1], [0]], "1": [[0], [1]]}}))
    code, out, _ = _run(capsys, "stability", "--quiver", str(star_path), "--rep", str(rep), "--format", "json")
    assert code == 0
    # the sub h=1, t1=1 pairs to zero
    assert json.loads(out)["status"] == "semistable_not_stable"


def test_domain_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"format": FORMAT, "vertices": []}))
    code, _, err = _run(capsys, "gm-verify", "--quiver", str(bad), "--nmax", "1")
    assert code == 1 and err.startswith("fencekit: error:")
    code, _, err = _run(capsys, "lr", "--f", "1,2", "--d", "1", "--e", "1")
    assert code == 1


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["lr", "--f", "1"])
    assert exc.value.code == 2
