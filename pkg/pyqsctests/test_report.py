import csv
import io
import json

import pytest

from pyqsc import errors, lib
from pyqsc.field import make_field
from pyqsc.poly import Poly
from pyqsc.report import (
    CSV_COLUMNS,
    SCHEMA_VERSION,
    OutputFormat,
    ReportRecord,
    poly_to_json,
)


@pytest.fixture(scope="module")
def classes_record():
    return lib.classes_report(19)


def test_classes_report(classes_record):
    assert classes_record.ok
    assert classes_record.outputs["gamma"] == 2
    assert classes_record.outputs["class_size"] == 3
    assert classes_record.outputs["classes"][0] == [1, 7, 11]
    assert classes_record.outputs["negation_map"] is True


def test_json_roundtrip(classes_record):
    text = classes_record.to_json()
    data = json.loads(text)
    assert data["schema"] == SCHEMA_VERSION
    assert data["command"] == "classes"
    assert data["error"] is None
    assert ReportRecord.from_json(text) == classes_record


def test_csv(classes_record):
    rows = list(csv.reader(io.StringIO(classes_record.to_csv())))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert rows[1] == ["classes", "status", "status", "ok"]
    assert ["classes", "outputs", "gamma", "2"] in rows
    assert ["classes", "inputs", "n", "19"] in rows
    assert all(row[0] == "classes" for row in rows[1:])


def test_text(classes_record):
    lines = classes_record.to_text().splitlines()
    assert lines[0] == "classes: ok"
    assert "outputs:" in lines
    assert "  gamma: 2" in lines


def test_serialize(classes_record):
    assert classes_record.serialize(OutputFormat.Json) == classes_record.to_json()
    assert classes_record.serialize(OutputFormat.Csv) == classes_record.to_csv()
    assert classes_record.serialize(OutputFormat.Text) == classes_record.to_text()
    assert OutputFormat.from_str("CSV") == OutputFormat.Csv
    with pytest.raises(ValueError):
        OutputFormat.from_str("xml")


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"command": "classes"}',
        json.dumps(
            {
                "schema": SCHEMA_VERSION + 1,
                "command": "classes",
                "status": "ok",
                "inputs": {},
                "outputs": {},
                "notes": [],
                "error": None,
            }
        ),
    ],
)
def test_invalid_records(text):
    with pytest.raises(errors.ReportError):
        ReportRecord.from_json(text)


def test_status():
    with pytest.raises(ValueError):
        ReportRecord("classes", status="maybe")
    assert not ReportRecord("qsc", status="failed").ok


def test_error_record():
    record = ReportRecord.from_error("classes", {"n": 13}, errors.BadModulus("13 is not ok"))
    assert record.status == "error"
    assert not record.ok
    assert record.error == {"type": "BadModulus", "message": "13 is not ok"}
    assert "error: BadModulus: 13 is not ok" in record.to_text()
    assert ["classes", "error", "type", "BadModulus"] in list(
        csv.reader(io.StringIO(record.to_csv()))
    )


def test_poly_to_json_over_extension():
    F = make_field(4)
    data = poly_to_json(Poly.parse(F, "[0,1] + x"))
    assert data == {"coefficients": [[0, 1], [1, 0]], "text": "[0,1] + x"}


def test_factor_report():
    record = lib.factor_report(19, 7)
    outputs = record.outputs
    assert (outputs["ell"], outputs["t"]) == (3, 1)
    assert outputs["factorization_verified"]
    assert outputs["reciprocal_pairs"]
    assert len(outputs["classes"]) == 6
    first = outputs["classes"][0]
    assert first["members"] == [1, 7, 11]
    assert [coset["representative"] for coset in first["cosets"]] == [1]


def test_factor_report_127():
    outputs = lib.factor_report(127, 2).outputs
    assert outputs["gamma"] == 3
    representatives = [
        tuple(coset["representative"] for coset in row["cosets"]) for row in outputs["classes"]
    ]
    assert representatives == [
        (1, 19, 47), (3, 7, 23), (9, 11, 21), (5, 27, 63), (13, 15, 31), (29, 43, 55)
    ]
    assert outputs["classes"][1]["cosets"][0]["elements"] == [3, 6, 12, 24, 48, 65, 96]


def test_renumbered_classes():
    assert lib.classes_report(127).notes == []
    record = lib.classes_report(127, 39)
    assert record.outputs["gamma"] == 39
    assert len(record.notes) == 1
    assert "0->0, 1->5, 2->4, 3->3, 4->2, 5->1" in record.notes[0]
    assert lib.factor_report(127, 2, 39).notes == record.notes
    assert lib.code_report(127, 2, [1], gamma=39, with_distance=False).notes == record.notes


def test_code_report():
    record = lib.code_report(19, 7, [0])
    assert record.outputs["code"]["params"] == "[19,16,3]_7"
    assert record.outputs["dual"]["params"] == "[19,3,15]_7"
    assert record.outputs["dual_containing"] is True
    assert record.notes == []


def test_code_report_with_bounds():
    record = lib.code_report(127, 2, [1], drop=[3])
    code = record.outputs["code"]
    assert (code["n"], code["k"]) == (127, 113)
    assert "d_lower" in code["d"]
    dual = record.outputs["dual"]
    assert (dual["k"], dual["d"]) == (14, 52)
    assert len(record.notes) == 1
    assert "[127,113]_2 is a lower bound" in record.notes[0]


def test_qsc_report():
    record = lib.qsc_report(127, 2, "C", 0, c_l=3, c_r=4)
    assert record.ok
    assert record.outputs["consistent"]
    assert record.outputs["qsc"]["params"] == "(3,4)-[[134,85]]_2"
    assert record.outputs["chain"]["order"] == 127


def test_sync_report():
    record = lib.sync_report(19, 7, 0, 1, 1, trials=3)
    assert record.ok
    assert record.outputs["recovered"] == 3
    assert record.outputs["recovered_shifts"] == [0]

    failed = lib.sync_report(19, 7, 2, 1, 1, trials=3)
    assert failed.status == "failed"
    assert failed.outputs["errors"] == {"NoMatchingShift": 3}

    with pytest.raises(ValueError):
        lib.sync_report(19, 7, 0, 1, 1, outer="classes=0")


def test_sync_report_with_chain_description():
    record = lib.sync_report(
        127, 2, -2, 3, 3, trials=2, outer="classes=1,drop=3", inner="classes=1"
    )
    assert record.ok
    assert record.outputs["chain"]["logical_dimension"] == 85


def test_enumerate_report():
    record = lib.enumerate_report(130, 8)
    entry = next(p for p in record.outputs["pairs"] if (p["n"], p["q"]) == (127, 2))
    assert entry["family_eligible"]
    assert entry["z_max"] == 1
    assert record.outputs["count"] == len(record.outputs["pairs"])


def test_records_match_schema(schema_path, classes_record):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(schema_path.read_text())
    records = [
        classes_record,
        lib.factor_report(31, 2),
        lib.code_report(19, 7, [0, 1, 2], with_distance=False),
        lib.code_report(127, 2, [1], drop=[3]),
        lib.classes_report(127, 39),
        lib.qsc_report(127, 2, "D", 1),
        lib.sync_report(19, 7, 2, 1, 1),
        lib.enumerate_report(50, 8),
        ReportRecord.from_error("code", {"n": 13}, errors.BadModulus("13")),
    ]
    for record in records:
        jsonschema.validate(json.loads(record.to_json()), schema)


def test_schema_rejects_malformed_outputs(schema_path):
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(schema_path.read_text())
    data = json.loads(lib.code_report(19, 7, [0]).to_json())
    jsonschema.validate(data, schema)
    for d in (0, {"d_lower": 3, "exact": False}, {"d": 3}, "3"):
        broken = json.loads(json.dumps(data))
        broken["outputs"]["code"]["d"] = d
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate(broken, schema)
    broken = json.loads(json.dumps(data))
    del broken["outputs"]["dual"]
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(broken, schema)
    broken = json.loads(json.dumps(data))
    broken["outputs"]["code"]["params"] = "19,16,3"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(broken, schema)
    error = json.loads(ReportRecord.from_error("code", {}, errors.BadModulus("13")).to_json())
    error["outputs"] = {"count": 1}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(error, schema)
