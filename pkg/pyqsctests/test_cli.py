import json

import pytest

from pyqsc.cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_classes(capsys):
    code, out = _run(capsys, "classes", "--n", "19")
    assert code == 0
    record = json.loads(out)
    assert record["command"] == "classes"
    assert record["status"] == "ok"
    assert record["outputs"]["classes"][1] == [2, 3, 14]


def test_formats(capsys):
    _, out = _run(capsys, "classes", "--n", "19", "--format", "csv")
    assert out.splitlines()[0] == "command,section,key,value"
    _, out = _run(capsys, "classes", "--n", "19", "--format", "text")
    assert out.startswith("classes: ok")


def test_out_file(capsys, tmp_path):
    path = tmp_path / "factor.json"
    code, out = _run(capsys, "factor", "--n", "31", "--q", "2", "--out", str(path))
    assert code == 0
    assert out == ""
    assert json.loads(path.read_text())["outputs"]["factorization_verified"]


def test_library_error_is_a_record(capsys):
    code, out = _run(capsys, "classes", "--n", "13")
    assert code == 1
    record = json.loads(out)
    assert record["status"] == "error"
    assert record["error"]["type"] == "BadModulus"
    assert record["inputs"]["n"] == 13


def test_tolerance_exceeded(capsys):
    code, out = _run(
        capsys, "qsc", "--n", "127", "--q", "2", "--family", "C", "--z", "0", "--cl", "100",
        "--cr", "27",
    )
    assert code == 1
    assert json.loads(out)["error"]["type"] == "ToleranceExceeded"


def test_code(capsys):
    code, out = _run(capsys, "code", "--n", "19", "--q", "7", "--classes", "0,1", "--no-distance")
    assert code == 0
    outputs = json.loads(out)["outputs"]
    assert outputs["code"]["params"] == "[19,13]_7"
    assert outputs["code"]["d"] is None
    assert outputs["dual_containing"]


def test_qsc(capsys):
    code, out = _run(
        capsys, "qsc", "--n", "127", "--q", "2", "--family", "D", "--z", "1", "--cl", "1",
        "--cr", "1",
    )
    assert code == 0
    assert json.loads(out)["outputs"]["qsc"]["params"] == "(1,1)-[[129,15]]_2"


def test_sync_sim(capsys):
    code, _ = _run(capsys, "sync-sim", "--n", "19", "--q", "7", "--delta", "0", "--trials", "2")
    assert code == 0
    code, out = _run(
        capsys, "sync-sim", "--n", "19", "--q", "7", "--delta", "3", "--cl", "1", "--cr", "2"
    )
    assert code == 1
    assert json.loads(out)["status"] == "failed"
    code, _ = _run(
        capsys, "sync-sim", "--n", "19", "--q", "7", "--delta", "-1", "--cl", "2",
        "--outer", "classes=0", "--inner", "classes=0,1",
    )
    assert code == 0


def test_enumerate(capsys):
    code, out = _run(capsys, "enumerate", "--n-max", "50", "--q-max", "8")
    assert code == 0
    assert json.loads(out)["outputs"]["count"] > 0


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["classes"],
        ["code", "--n", "19", "--q", "7", "--classes", "x"],
        ["qsc", "--n", "127", "--q", "2", "--family", "E", "--z", "0"],
        ["sync-sim", "--n", "19", "--q", "7", "--delta", "0", "--outer", "classes=0"],
        ["code", "--n", "19", "--q", "7", "--classes", "0", "--method", "guess"],
        ["sync-sim", "--n", "19", "--q", "7", "--delta", "0", "--seed", "-1"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc_info:
        main(argv)
    assert exc_info.value.code == 2
