"""Graph documents in, report documents out.

Graphs are read either as edge-list text (optional ``n <count>`` header,
one ``u v`` pair per line, ``#`` comments) or as a JSON object
``{"n": ..., "edges": [[u, v], ...], "labels": [...]}``.  Reports are JSON
with rationals written as ``"num/den"`` strings, so nothing passes through
a float.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .complex import FVector
from .curvature import CurvatureReport
from .dimension import DimensionValue, ValidationCertificate, Violation
from .errors import IndexOutOfRange, ParseError, SelfLoop
from .graph import Graph, from_edge_list

__all__ = [
    "parse_graph",
    "read_graph_document",
    "format_edge_list",
    "format_graph_json",
    "render_rational",
    "parse_rational",
    "report_to_dict",
    "report_from_dict",
    "render_report",
    "parse_report",
    "render_tsv",
]


def render_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    try:
        value = Fraction(int(num), int(den)) if sep else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational: {text!r}") from None
    return value


def _positioned(exc_type, message, line):
    err = exc_type(f"line {line}: {message}")
    err.line = line
    return err


def _parse_edge_text(text: str) -> tuple[Graph, None]:
    n = None
    edges = []
    max_index = -1
    seen_pair = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = body.split()
        if not tokens:
            continue
        if tokens[0] == "n":
            if seen_pair or n is not None:
                raise ParseError("header 'n <count>' must precede all edges", lineno, raw.index("n") + 1)
            if len(tokens) != 2:
                raise ParseError("header must be 'n <count>'", lineno, 1)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno, raw.index(tokens[1]) + 1) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno, raw.index(tokens[1]) + 1)
            continue
        if len(tokens) != 2:
            col = raw.index(tokens[2]) + 1 if len(tokens) > 2 else len(raw.rstrip()) + 1
            raise ParseError("expected two vertex indices 'u v'", lineno, col)
        pair = []
        offset = 0
        for tok in tokens:
            col = raw.index(tok, offset) + 1
            offset = col - 1 + len(tok)
            try:
                value = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex index {tok!r}", lineno, col) from None
            if value < 0:
                raise ParseError(f"negative vertex index {value}", lineno, col)
            pair.append(value)
        u, v = pair
        if u == v:
            raise _positioned(SelfLoop, f"self-loop ({u}, {v})", lineno)
        if n is not None and max(u, v) >= n:
            raise _positioned(IndexOutOfRange, f"vertex {max(u, v)} outside [0, {n})", lineno)
        seen_pair = True
        max_index = max(max_index, u, v)
        edges.append((u, v))
    if n is None:
        n = max_index + 1
    return from_edge_list(n, edges), None


def _parse_json_graph(text: str) -> tuple[Graph, list[str] | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise ParseError('graph document must be an object with "n" and "edges"', 1, 1)
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError('"n" must be a non-negative integer', 1, 1)
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise ParseError('"edges" must be a list', 1, 1)
    pairs = []
    for i, e in enumerate(edges):
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise ParseError(f"edge #{i} must be a pair of integers", 1, 1)
        pairs.append(tuple(e))
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != n or not all(isinstance(x, str) for x in labels):
            raise ParseError('"labels" must be a list of n strings', 1, 1)
    for u, v in pairs:
        if u == v:
            raise SelfLoop(f"self-loop ({u}, {u})")
    return from_edge_list(n, pairs), labels


def read_graph_document(data: bytes | str) -> tuple[Graph, list[str] | None]:
    """Parse either format; returns the graph and the optional vertex labels."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if data.lstrip().startswith("{"):
        return _parse_json_graph(data)
    return _parse_edge_text(data)


def parse_graph(data: bytes | str) -> Graph:
    return read_graph_document(data)[0]


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines.append(f"n {g.n}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def format_graph_json(g: Graph, labels: list[str] | None = None) -> str:
    doc: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if labels is not None:
        doc["labels"] = list(labels)
    return json.dumps(doc, separators=(",", ":")) + "\n"


def report_to_dict(report) -> dict[str, Any]:
    if isinstance(report, CurvatureReport):
        return {
            "kind": "curvature",
            "method": report.method,
            "dimension_used": report.dimension_used,
            "per_vertex": [render_rational(x) for x in report.per_vertex],
            "classes": {render_rational(k): c for k, c in report.class_multiplicities.items()},
            "total": render_rational(report.total),
            "euler_characteristic": report.euler_characteristic,
            "gbc_holds": report.gbc_holds,
        }
    if isinstance(report, ValidationCertificate):
        return {
            "kind": "certificate",
            "claimed_d": report.claimed_d,
            "valid": report.valid,
            "violations": [{"path": list(v.path), "rule": v.rule, "detail": v.detail} for v in report.violations],
        }
    if isinstance(report, DimensionValue):
        return {
            "kind": "dimension",
            "value": render_rational(report.value),
            "per_vertex": None if report.per_vertex is None else [render_rational(x) for x in report.per_vertex],
        }
    raise TypeError(f"cannot render {type(report).__name__}")


def report_from_dict(doc: dict[str, Any]):
    try:
        kind = doc["kind"]
        if kind == "curvature":
            return CurvatureReport(
                method=doc["method"],
                dimension_used=doc["dimension_used"],
                per_vertex=tuple(parse_rational(x) for x in doc["per_vertex"]),
                class_multiplicities={parse_rational(k): int(c) for k, c in doc["classes"].items()},
                total=parse_rational(doc["total"]),
                euler_characteristic=int(doc["euler_characteristic"]),
                gbc_holds=bool(doc["gbc_holds"]),
            )
        if kind == "certificate":
            return ValidationCertificate(
                int(doc["claimed_d"]),
                tuple(Violation(tuple(v["path"]), v["rule"], v["detail"]) for v in doc["violations"]),
            )
        if kind == "dimension":
            pv = doc.get("per_vertex")
            return DimensionValue(parse_rational(doc["value"]),
                                  None if pv is None else tuple(parse_rational(x) for x in pv))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed report document: {exc}") from None
    raise ParseError(f"unknown report kind {doc.get('kind')!r}")


def render_report(report) -> str:
    return json.dumps(report_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def parse_report(text: str):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    return report_from_dict(doc)


def render_tsv(report: CurvatureReport, profiles: list[FVector], degrees: list[int] | None = None) -> str:
    """Per-vertex table: vertex, degree, V_1 .. V_{d-1}, K.

    d is the report's dimension for the Euler form, otherwise the largest
    sphere dimension + 1; short profiles are padded with zeros.
    """
    if report.dimension_used is not None:
        d = report.dimension_used
    else:
        d = max((pr.max_dim + 1 for pr in profiles), default=0)
    header = ["vertex", "degree"] + [f"V_{k}" for k in range(1, d)] + ["K"]
    rows = ["\t".join(header)]
    for p, (pr, k) in enumerate(zip(profiles, report.per_vertex)):
        deg = pr.count(0) if degrees is None else degrees[p]
        cells = [str(p), str(deg)] + [str(pr.count(j)) for j in range(1, d)] + [render_rational(k)]
        rows.append("\t".join(cells))
    return "\n".join(rows) + "\n"
