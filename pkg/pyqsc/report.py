""" The records produced by the commands and their json, csv and text
serializations.
"""
import csv
import enum
import io
import json
import logging
from typing import Any, Dict, Iterator, List, Optional, Tuple

from . import errors
from .codes.cyclic import CyclicCode
from .codes.distance import DistanceReport
from .poly import Poly

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
#: Columns of the csv serialization, in order
CSV_COLUMNS = ("command", "section", "key", "value")
STATUSES = ("ok", "failed", "error")


class OutputFormat(enum.Enum):
    Json = "json"
    Csv = "csv"
    Text = "text"

    @staticmethod
    def from_str(name: str) -> "OutputFormat":
        try:
            return OutputFormat(name.lower())
        except ValueError:
            raise ValueError(
                f"Unknown format '{name}', expected one of "
                f"{', '.join(f.value for f in OutputFormat)}"
            ) from None


def poly_to_json(poly: Poly) -> Dict[str, Any]:
    """
    >>> from pyqsc.field import make_prime_field
    >>> poly_to_json(Poly(make_prime_field(2), [1, 1, 0, 1]))
    {'coefficients': [1, 1, 0, 1], 'text': '1 + x + x^3'}
    """
    if poly.field.m == 1:
        coefficients = list(poly.coeffs)
    else:
        coefficients = [list(poly.field.vector(c)) for c in poly.coeffs]
    return {"coefficients": coefficients, "text": str(poly)}


def code_params(code: CyclicCode, distance: Optional[DistanceReport] = None) -> str:
    """'[n,k,d]_q', '[n,k,>=d]_q' for a bound or '[n,k]_q' without distance"""
    d = "" if distance is None else f",{distance}"
    return f"[{code.n},{code.dimension}{d}]_{code.q}"


def code_to_json(code: CyclicCode, distance: Optional[DistanceReport] = None) -> Dict[str, Any]:
    return {
        "n": code.n,
        "k": code.dimension,
        "q": code.q,
        "d": None if distance is None else distance.to_json(),
        "params": code_params(code, distance),
        "generator": poly_to_json(code.generator),
    }


class ReportRecord:
    """What a command computed, with the inputs it was given.

    >>> record = ReportRecord("classes", {"n": 7}, {"gamma": 3})
    >>> ReportRecord.from_json(record.to_json()) == record
    True
    """

    def __init__(
        self,
        command: str,
        inputs: Optional[Dict[str, Any]] = None,
        outputs: Optional[Dict[str, Any]] = None,
        notes: Optional[List[str]] = None,
        error: Optional[Dict[str, str]] = None,
        status: Optional[str] = None,
    ) -> None:
        self.command = command
        self.inputs = inputs if inputs is not None else {}
        self.outputs = outputs if outputs is not None else {}
        self.notes = notes if notes is not None else []
        self.error = error
        if status is None:
            status = "ok" if error is None else "error"
        if status not in STATUSES:
            raise ValueError(f"Unknown status '{status}'")
        self.status = status

    @classmethod
    def from_error(
        cls, command: str, inputs: Dict[str, Any], error: errors.PyqscError
    ) -> "ReportRecord":
        return cls(
            command,
            inputs,
            error={"type": type(error).__name__, "message": str(error)},
        )

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "status": self.status,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "notes": self.notes,
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReportRecord":
        expected = {"schema", "command", "status", "inputs", "outputs", "notes", "error"}
        if set(data) != expected:
            raise errors.ReportError(
                f"record keys {sorted(data)} differ from {sorted(expected)}"
            )
        if data["schema"] != SCHEMA_VERSION:
            raise errors.ReportError(f"Unsupported schema version {data['schema']}")
        return cls(
            data["command"],
            data["inputs"],
            data["outputs"],
            data["notes"],
            data["error"],
            data["status"],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ReportRecord":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise errors.ReportError(f"Invalid json record: {e}") from None
        if not isinstance(data, dict):
            raise errors.ReportError("a record is a json object")
        return cls.from_dict(data)

    def rows(self) -> Iterator[Tuple[str, str, str, str]]:
        """The (command, section, key, value) rows of the csv serialization"""
        yield self.command, "status", "status", self.status
        for section in ("inputs", "outputs"):
            for key, value in _flatten(getattr(self, section)):
                yield self.command, section, key, json.dumps(value, sort_keys=True)
        for i, note in enumerate(self.notes):
            yield self.command, "notes", str(i), note
        if self.error is not None:
            for key in sorted(self.error):
                yield self.command, "error", key, self.error[key]

    def to_csv(self) -> str:
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(self.rows())
        return stream.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status}"]
        for section in ("inputs", "outputs"):
            content = getattr(self, section)
            if content:
                lines.append(f"{section}:")
                lines.extend(_text_lines(content, 1))
        if self.notes:
            lines.append("notes:")
            lines.extend(f"  - {note}" for note in self.notes)
        if self.error is not None:
            lines.append(f"error: {self.error['type']}: {self.error['message']}")
        return "\n".join(lines) + "\n"

    def serialize(self, fmt: OutputFormat = OutputFormat.Json) -> str:
        if fmt == OutputFormat.Json:
            return self.to_json()
        if fmt == OutputFormat.Csv:
            return self.to_csv()
        return self.to_text()

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReportRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"<ReportRecord({self.command}, {self.status})>"


def _flatten(value: Any, prefix: str = "") -> Iterator[Tuple[str, Any]]:
    if isinstance(value, dict) and value:
        for key in sorted(value):
            yield from _flatten(value[key], f"{prefix}.{key}" if prefix else str(key))
    else:
        yield prefix, value


def _text_lines(value: Dict[str, Any], depth: int) -> Iterator[str]:
    indent = "  " * depth
    for key in sorted(value):
        item = value[key]
        if isinstance(item, dict) and item:
            yield f"{indent}{key}:"
            yield from _text_lines(item, depth + 1)
        elif isinstance(item, list) and item and all(isinstance(v, dict) for v in item):
            yield f"{indent}{key}:"
            for i, element in enumerate(item):
                yield f"{indent}  [{i}]"
                yield from _text_lines(element, depth + 2)
        else:
            yield f"{indent}{key}: {json.dumps(item)}"
