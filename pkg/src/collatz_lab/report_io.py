"""JSON and CSV encodings of report documents.

JSON documents are a single object ``{"kind", "metadata", "payload"}``.  Integers
and rationals are written as decimal strings (``"123"``, ``"7/5"``) so nothing
is truncated by 64-bit or double-precision readers.  Decoding is driven by the
dataclass annotations of the payload type registered for each kind.
"""

from __future__ import annotations

import csv
import dataclasses
import enum
import io
import json
import re
import types
import typing
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from . import __version__
from .arith import CertifiedReal, format_decimal
from .core import Trajectory
from .cycles import CycleSolution, EvenStartResult, FigureSeries, Figure, GapReport, TCycleEndpoints
from .verify import VerifyRun

DEFAULT_PLACES = 4
TABLE1_PLACES = 2

_INT_RE = re.compile(r"-?\d+")
_FRAC_RE = re.compile(r"-?\d+(/\d+)?")


class Kind(enum.Enum):
    TRAJECTORY = "Trajectory"
    TABLE1 = "Table1"
    FIGURE_DATA = "FigureData"
    CYCLE_SCAN = "CycleScan"
    VERIFY_RUN = "VerifyRun"


@dataclass(frozen=True)
class CycleScan:
    family: str
    reports: tuple[GapReport, ...] = ()
    solutions: tuple[CycleSolution, ...] = ()
    endpoints: tuple[TCycleEndpoints, ...] = ()
    even_starts: tuple[EvenStartResult, ...] = ()


PAYLOAD_TYPES: dict[Kind, Any] = {
    Kind.TRAJECTORY: Trajectory,
    Kind.TABLE1: tuple[GapReport, ...],
    Kind.FIGURE_DATA: FigureSeries,
    Kind.CYCLE_SCAN: CycleScan,
    Kind.VERIFY_RUN: VerifyRun,
}


@dataclass(frozen=True)
class ReportDocument:
    kind: Kind
    payload: Any
    metadata: dict[str, str] = field(default_factory=dict)


class ParseError(ValueError):
    def __init__(self, path: str, message: str) -> None:
        super().__init__(f"{path}: {message}")
        self.path = path


class UnsupportedKind(ValueError):
    pass


def make_document(kind: Kind, payload: Any, **params: object) -> ReportDocument:
    metadata = {"tool": "collatz_lab", "version": __version__}
    metadata.update({k: str(v) for k, v in params.items()})
    return ReportDocument(kind, payload, metadata)


# ---------------------------------------------------------------------------
# JSON


def encode_value(value: Any) -> Any:
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, enum.Enum):
        return value.value
    if dataclasses.is_dataclass(value):
        return {f.name: encode_value(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, (tuple, list)):
        return [encode_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): encode_value(v) for k, v in value.items()}
    raise TypeError(f"cannot encode {type(value).__name__}")


def _decode(tp: Any, data: Any, path: str) -> Any:
    origin = typing.get_origin(tp)
    if origin in (Union, types.UnionType):
        args = typing.get_args(tp)
        if data is None:
            if type(None) in args:
                return None
            raise ParseError(path, "unexpected null")
        (inner,) = [a for a in args if a is not type(None)]
        return _decode(inner, data, path)
    if origin is tuple:
        args = typing.get_args(tp)
        if not isinstance(data, list):
            raise ParseError(path, "expected an array")
        if len(args) == 2 and args[1] is Ellipsis:
            return tuple(_decode(args[0], v, f"{path}[{i}]") for i, v in enumerate(data))
        if len(args) != len(data):
            raise ParseError(path, f"expected {len(args)} items, got {len(data)}")
        return tuple(_decode(a, v, f"{path}[{i}]") for i, (a, v) in enumerate(zip(args, data)))
    if origin is dict:
        _, val_tp = typing.get_args(tp)
        if not isinstance(data, dict):
            raise ParseError(path, "expected an object")
        return {k: _decode(val_tp, v, f"{path}.{k}") for k, v in data.items()}
    if tp is bool:
        if not isinstance(data, bool):
            raise ParseError(path, "expected a boolean")
        return data
    if tp is int:
        if not isinstance(data, str) or not _INT_RE.fullmatch(data):
            raise ParseError(path, f"expected an integer string, got {data!r}")
        return int(data)
    if tp is Fraction:
        if not isinstance(data, str) or not _FRAC_RE.fullmatch(data):
            raise ParseError(path, f"expected a rational string, got {data!r}")
        return Fraction(data)
    if tp is str:
        if not isinstance(data, str):
            raise ParseError(path, "expected a string")
        return data
    if isinstance(tp, type) and issubclass(tp, enum.Enum):
        try:
            return tp(data)
        except ValueError:
            raise ParseError(path, f"invalid {tp.__name__} value {data!r}") from None
    if dataclasses.is_dataclass(tp):
        if not isinstance(data, dict):
            raise ParseError(path, f"expected an object for {tp.__name__}")
        hints = typing.get_type_hints(tp)
        fields = {f.name: f for f in dataclasses.fields(tp)}
        unknown = set(data) - set(fields)
        if unknown:
            raise ParseError(path, f"unknown fields {sorted(unknown)}")
        kwargs = {}
        for name, f in fields.items():
            if name not in data:
                if f.default is dataclasses.MISSING and f.default_factory is dataclasses.MISSING:
                    raise ParseError(f"{path}.{name}", "missing field")
                continue
            kwargs[name] = _decode(hints[name], data[name], f"{path}.{name}")
        try:
            return tp(**kwargs)
        except (TypeError, ValueError) as exc:
            raise ParseError(path, str(exc)) from None
    raise ParseError(path, f"no decoder for {tp!r}")


def to_json(doc: ReportDocument) -> str:
    obj = {
        "kind": doc.kind.value,
        "metadata": dict(sorted(doc.metadata.items())),
        "payload": encode_value(doc.payload),
    }
    return json.dumps(obj, indent=2) + "\n"


def from_json(text: str) -> ReportDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    if not isinstance(obj, dict):
        raise ParseError("$", "expected a top-level object")
    for key in ("kind", "metadata", "payload"):
        if key not in obj:
            raise ParseError(f"$.{key}", "missing field")
    kind = _decode(Kind, obj["kind"], "$.kind")
    metadata = obj["metadata"]
    if not isinstance(metadata, dict) or not all(isinstance(v, str) for v in metadata.values()):
        raise ParseError("$.metadata", "expected an object of strings")
    payload = _decode(PAYLOAD_TYPES[kind], obj["payload"], "$.payload")
    return ReportDocument(kind, payload, dict(metadata))


# ---------------------------------------------------------------------------
# CSV


def _dec(value: CertifiedReal | Fraction | int | None, places: int) -> str:
    if value is None:
        return ""
    if isinstance(value, CertifiedReal):
        return value.to_decimal(places)
    return format_decimal(value, places)


def _join(items: Any) -> str:
    return ";".join(str(i) for i in items)


def _gap_rows(reports: tuple[GapReport, ...], places: int) -> tuple[list[str], list[list[str]]]:
    header = ["case", "n", "x", "lower", "upper", "difference", "candidates", "b", "b_decimal", "verdict"]
    rows = []
    for r in reports:
        bs = [str(e.b) if e.b is not None else e.verdict.value for e in r.evaluations]
        bd = [_dec(e.b, places) if e.b is not None else e.verdict.value for e in r.evaluations]
        rows.append([
            str(r.case), str(r.n), "" if r.x is None else str(r.x),
            _dec(r.lower, places), _dec(r.upper, places), _dec(r.difference, places),
            _join(r.candidates), _join(bs), _join(bd), r.verdict.value,
        ])
    return header, rows


def _table_rows(doc: ReportDocument, places: int) -> tuple[list[str], list[list[str]]]:
    payload = doc.payload
    if doc.kind is Kind.TRAJECTORY:
        t: Trajectory = payload
        values = t.values()
        return ["step", "value", "valuation", "next"], [
            [str(i), str(s.value), str(s.valuation), str(values[i + 1])] for i, s in enumerate(t.steps)
        ]
    if doc.kind is Kind.TABLE1:
        header, rows = _gap_rows(payload, places)
        # the printed layout has no case/x columns
        return header[1:2] + header[3:], [r[1:2] + r[3:] for r in rows]
    if doc.kind is Kind.FIGURE_DATA:
        fs: FigureSeries = payload
        idx = "1" if fs.which is Figure.FIG2 else "2"
        return ["n", f"alpha{idx}_min", f"epsilon{idx}"], [
            [str(r.n), _dec(r.alpha_min, places), _dec(r.epsilon, places)] for r in fs.rows
        ]
    if doc.kind is Kind.CYCLE_SCAN:
        scan: CycleScan = payload
        if scan.reports:
            return _gap_rows(scan.reports, places)
        if scan.endpoints:
            return ["t", "exponent", "lower", "upper", "gap_ratio", "a1", "verdict"], [
                [str(e.t), str(e.exponent), _dec(e.lower, places), _dec(e.upper, places),
                 _dec(e.gap_ratio, places), str(e.solution.value), e.solution.verdict.value]
                for e in scan.endpoints
            ]
        if scan.even_starts:
            return ["a", "a_decimal", "verdict", "exponent", "lower", "upper", "gap_ratio"], [
                [str(e.a), _dec(e.a, places), e.verdict.value, str(e.exponent),
                 _dec(e.lower, places), _dec(e.upper, places), _dec(e.gap_ratio, places)]
                for e in scan.even_starts
            ]
        return ["b", "b_decimal", "verdict", "realizable"], [
            [str(s.value), _dec(s.value, places), s.verdict.value, str(s.realizable).lower()]
            for s in scan.solutions
        ]
    if doc.kind is Kind.VERIFY_RUN:
        run: VerifyRun = payload
        return ["check", "checked", "violations"], [
            [c.name, str(c.checked), str(c.violations)] for c in run.checks
        ]
    raise UnsupportedKind(f"no tabular form for {doc.kind!r}")


def to_csv(doc: ReportDocument, places: int | None = None) -> str:
    if not isinstance(doc.kind, Kind):
        raise UnsupportedKind(f"unknown kind {doc.kind!r}")
    if places is None:
        places = TABLE1_PLACES if doc.kind is Kind.TABLE1 else DEFAULT_PLACES
    header, rows = _table_rows(doc, places)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
