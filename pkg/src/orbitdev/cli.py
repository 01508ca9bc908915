"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 oracle verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import __version__
from .deviations import GroupKind, deviation
from .nearest import nearest_pair
from .oracle import oracle_min
from .polygon import Polygon
from .svg import RenderOptions, render_svg
from .triangles import (
    DELTA,
    Triangle,
    TriangleSides,
    side_lengths,
    symmetric_components,
    triangle_from_sides,
    triangle_report,
    unbalance_factor,
)

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2
#: ``--verify`` fails when closed form and oracle differ by more than this
VERIFY_TOLERANCE = 1e-5

ORIENTATIONS = {"ccw": 1, "cw": -1, "linear": 0}
VERTEX_COLUMNS = ("x1", "y1", "x2", "y2", "x3", "y3")
SIDE_COLUMNS = ("a", "b", "c", "orientation")
REPORT_COLUMNS = (
    "u",
    "q",
    "normalized_area",
    "area",
    "sign",
    "isometric_dev",
    "affine_dev",
    "unbalance",
    "classification",
)


class InputError(Exception):
    """Unreadable or invalid user input (exit code 1)."""


# -- number formatting -------------------------------------------------------


def format_number(v) -> str:
    """17 significant digits so doubles round-trip; infinity is ``inf``."""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, int):
        return str(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if math.isnan(v):
        return "nan"
    return format(v, ".17g")


def dumps(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with floats written by :func:`format_number`.

    Non-finite floats become the strings ``"inf"``/``"-inf"``/``"nan"``.
    """
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        text = format_number(obj)
        return f'"{text}"' if not math.isfinite(obj) else text
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        items = [inner + dumps(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


# -- input documents ---------------------------------------------------------


def _read_text(source: str) -> tuple[str, str]:
    """Return ``(label, text)`` for a path, ``-`` (stdin) or inline JSON."""
    if source == "-":
        return "<stdin>", sys.stdin.read()
    if source.lstrip().startswith(("{", "[")):
        return "<argument>", source
    try:
        return source, Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{source}: {exc.strerror}") from None
    except UnicodeDecodeError as exc:
        raise InputError(f"{source}: not UTF-8 ({exc.reason})") from None


def _finite(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InputError(f"{where}: expected a number, got {json.dumps(value)}")
    value = float(value)
    if not math.isfinite(value):
        raise InputError(f"{where}: number must be finite")
    return value


def parse_document(doc, label: str = "<input>") -> Polygon | TriangleSides:
    """Turn a decoded JSON document into a polygon or a side triple.

    Accepted forms are ``{"vertices": [[re, im], ...]}`` (or the bare list)
    and ``{"sides": {"a": .., "b": .., "c": .., "orientation": "ccw"|"cw"|"linear"}}``.
    """
    if isinstance(doc, list):
        doc = {"vertices": doc}
    if not isinstance(doc, dict):
        raise InputError(f"{label}: top level must be an object with 'vertices' or 'sides'")
    has_v, has_s = "vertices" in doc, "sides" in doc
    if has_v == has_s:
        raise InputError(f"{label}: exactly one of 'vertices' or 'sides' is required")

    if has_v:
        verts = doc["vertices"]
        if not isinstance(verts, list) or not verts:
            raise InputError(f"{label}: field 'vertices' must be a non-empty list")
        points = []
        for k, v in enumerate(verts):
            where = f"{label}: field 'vertices[{k}]'"
            if not isinstance(v, list) or len(v) != 2:
                raise InputError(f"{where}: expected an [re, im] pair")
            points.append(complex(_finite(v[0], where + "[0]"), _finite(v[1], where + "[1]")))
        return Triangle(points) if len(points) == 3 else Polygon(points)

    sides = doc["sides"]
    if not isinstance(sides, dict):
        raise InputError(f"{label}: field 'sides' must be an object")
    values = []
    for name in "abc":
        if name not in sides:
            raise InputError(f"{label}: field 'sides.{name}' is missing")
        values.append(_finite(sides[name], f"{label}: field 'sides.{name}'"))
    return sides_from_fields(*values, sides.get("orientation"), label=label, prefix="sides.")


def sides_from_fields(a: float, b: float, c: float, orientation, label: str = "", prefix: str = "") -> TriangleSides:
    """Build validated sides; the all-zero (singular) triple always has sign -1."""
    lead = f"{label}: " if label else ""
    if orientation not in ORIENTATIONS:
        raise InputError(
            f"{lead}field '{prefix}orientation': must be one of 'ccw', 'cw', 'linear', got {json.dumps(orientation)}"
        )
    sign = ORIENTATIONS[orientation]
    if a == b == c == 0.0:
        sign = -1
    try:
        return TriangleSides(a, b, c, sign)
    except ValueError as exc:
        raise InputError(f"{lead}{exc}") from None


def load_document(source: str) -> Polygon | TriangleSides:
    label, text = _read_text(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{label}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(doc, label)


def load_polygon(source: str) -> Polygon:
    item = load_document(source)
    return triangle_from_sides(item) if isinstance(item, TriangleSides) else item


def load_triangle_input(source: str) -> Triangle | TriangleSides:
    item = load_document(source)
    if isinstance(item, Polygon) and not isinstance(item, Triangle):
        raise InputError(f"{source}: expected 3 vertices, got {len(item)}")
    return item


# -- commands ----------------------------------------------------------------


def _verify(group: GroupKind, x: Polygon, y: Polygon, value: float) -> dict:
    oracle_value = oracle_min(group, x, y)
    return {"oracle_value": oracle_value, "abs_diff": abs(oracle_value - value)}


def cmd_deviate(args, out) -> int:
    x = load_polygon(args.x)
    ref = args.reference or args.y
    if args.reference and args.y:
        raise InputError("give the reference polygon either positionally or with --reference, not both")
    y = load_polygon(ref) if ref else DELTA
    if len(x) != len(y):
        raise InputError(f"dimension mismatch: {len(x)} vs {len(y)} vertices")
    group = GroupKind(args.group)
    result = deviation(group, x, y)
    report = {
        "group": group.value,
        "value": result.value,
        "witness": {
            "a": _pair(result.witness.a),
            "b": _pair(result.witness.b),
            "attained": result.witness.attained,
        },
    }
    status = EXIT_OK
    if args.verify:
        report["verified"] = _verify(group, x, y, result.value)
        if report["verified"]["abs_diff"] > VERIFY_TOLERANCE:
            status = EXIT_VERIFY
    out.write(dumps(report) + "\n")
    return status


def _report_row(report) -> dict:
    d = report.as_dict()
    return {k: d[k] for k in REPORT_COLUMNS}


def cmd_triangle(args, out) -> int:
    report = _report_row(triangle_report(load_triangle_input(args.input)))
    if args.format == "json":
        text = dumps(report) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(REPORT_COLUMNS)
        writer.writerow([_cell(report[k]) for k in REPORT_COLUMNS])
        text = buf.getvalue()
    else:
        width = max(len(k) for k in REPORT_COLUMNS)
        lines = []
        for k in REPORT_COLUMNS:
            v = report[k]
            shown = v if isinstance(v, str) else ("inf" if v == math.inf else f"{v:.10g}")
            lines.append(f"{k:<{width}}  {shown}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.out, out)
    return EXIT_OK


def cmd_components(args, out) -> int:
    item = load_triangle_input(args.input)
    if isinstance(item, TriangleSides):
        raise InputError(f"{args.input}: symmetric components need vertices, not sides")
    positive, negative, zero = symmetric_components(item)
    report = {
        "positive": _pair(positive),
        "negative": _pair(negative),
        "zero": _pair(zero),
        "unbalance": unbalance_factor(item),
    }
    out.write(dumps(report) + "\n")
    return EXIT_OK


def _render_options(args) -> RenderOptions:
    return RenderOptions(stroke_width=args.stroke_width, legend=not args.no_legend)


def cmd_nearest(args, out) -> int:
    item = load_triangle_input(args.input)
    s = item if isinstance(item, TriangleSides) else side_lengths(item)
    if s.is_singular():
        raise InputError(f"{args.input}: a singular triangle has no nearest triangles")
    report = triangle_report(s)
    pair = nearest_pair(s)
    Path(args.out).write_text(render_svg(s, _render_options(args)), encoding="utf-8")
    out.write(
        dumps(
            {
                "affine_dev": report.affine_dev,
                "isometric_dev": report.isometric_dev,
                "degenerate_isometric": pair.degenerate_isometric,
            }
        )
        + "\n"
    )
    return EXIT_OK


def _cell(v) -> str:
    return v if isinstance(v, str) else format_number(v)


def _parse_row(row: dict, kind: str) -> Triangle | TriangleSides:
    def number(name: str) -> float:
        raw = (row.get(name) or "").strip()
        try:
            value = float(raw)
        except ValueError:
            raise InputError(f"column {name}: not a number: {raw!r}") from None
        if not math.isfinite(value):
            raise InputError(f"column {name}: number must be finite")
        return value

    if kind == "vertices":
        v = [number(c) for c in VERTEX_COLUMNS]
        return Triangle([complex(v[0], v[1]), complex(v[2], v[3]), complex(v[4], v[5])])
    orientation = (row.get("orientation") or "").strip().lower()
    return sides_from_fields(number("a"), number("b"), number("c"), orientation)


def run_batch(rows: list[dict], kind: str, verify: bool = False, svg_dir: Path | None = None, options=None):
    """Evaluate every row; returns ``(output_rows, verification_summary)``."""
    output, failures, max_diff, checked = [], [], 0.0, 0
    for index, row in enumerate(rows):
        record = {k: "" for k in REPORT_COLUMNS}
        record["error"] = ""
        try:
            item = _parse_row(row, kind)
        except (InputError, ValueError) as exc:
            record["error"] = str(exc)
            output.append(record)
            continue
        s = item if isinstance(item, TriangleSides) else side_lengths(item)
        report = triangle_report(s)
        record.update({k: _cell(v) for k, v in _report_row(report).items()})
        output.append(record)

        if verify:
            z = item if isinstance(item, Triangle) else triangle_from_sides(item)
            for group, value in ((GroupKind.AFFINE, report.affine_dev), (GroupKind.ISOMETRY, report.isometric_dev)):
                diff = abs(oracle_min(group, z, DELTA) - value)
                max_diff = max(max_diff, diff)
                if diff > VERIFY_TOLERANCE:
                    failures.append({"row": index + 1, "group": group.value, "abs_diff": diff})
            checked += 1
        if svg_dir is not None and not s.is_singular():
            (svg_dir / f"row_{index + 1:04d}.svg").write_text(render_svg(s, options), encoding="utf-8")
    summary = {"rows": len(rows), "verified": checked, "max_abs_diff": max_diff, "failures": failures}
    return output, summary


def cmd_batch(args, out) -> int:
    label, text = _read_text(args.input)
    reader = csv.DictReader(io.StringIO(text))
    header = [h.strip() for h in (reader.fieldnames or [])]
    reader.fieldnames = header
    if set(VERTEX_COLUMNS) <= set(header):
        kind = "vertices"
    elif set(SIDE_COLUMNS) <= set(header):
        kind = "sides"
    else:
        raise InputError(
            f"{label}: line 1: header must contain {','.join(VERTEX_COLUMNS)} or {','.join(SIDE_COLUMNS)}"
        )
    svg_dir = Path(args.svg_dir) if args.svg_dir else None
    if svg_dir is not None:
        svg_dir.mkdir(parents=True, exist_ok=True)
    rows, summary = run_batch(list(reader), kind, args.verify, svg_dir, _render_options(args))

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=[*REPORT_COLUMNS, "error"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _emit(buf.getvalue(), args.out, out)

    status = EXIT_OK
    if args.verify:
        summary["errors"] = sum(1 for r in rows if r["error"])
        sys.stderr.write(dumps(summary) + "\n")
        if summary["failures"]:
            status = EXIT_VERIFY
    return status


def _emit(text: str, path: str | None, out) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
    else:
        out.write(text)


# -- entry point -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # Usage errors are input errors; exit code 2 is reserved for --verify.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="orbitdev", description="Group-orbit deviations of polygons and triangle asymmetry metrics."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("deviate", help="deviation of polygon X from polygon Y under a group")
    p.add_argument("x", help="JSON document, '-' for stdin, or inline JSON")
    p.add_argument("y", nargs="?", help="reference polygon (default: the unit regular triangle)")
    p.add_argument("--reference", help="reference polygon, alternative to the positional Y")
    p.add_argument("--group", choices=[g.value for g in GroupKind], default="affine")
    p.add_argument("--verify", action="store_true", help="cross-check against the brute-force oracle")
    p.set_defaults(func=cmd_deviate)

    p = sub.add_parser("triangle", help="quality report of a triangle against the unit regular triangle")
    p.add_argument("input")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", help="write to this file instead of standard output")
    p.set_defaults(func=cmd_triangle)

    p = sub.add_parser("components", help="Fortescue symmetric components and unbalance factor")
    p.add_argument("input")
    p.set_defaults(func=cmd_components)

    for name, helptext in (
        ("nearest", "draw the nearest affine and isometric images of the unit triangle"),
        ("batch", "per-row triangle reports for a CSV file"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input")
        p.add_argument("--stroke-width", type=float, default=2.0)
        p.add_argument("--no-legend", action="store_true")
        if name == "nearest":
            p.add_argument("--out", required=True, help="SVG file to write")
            p.set_defaults(func=cmd_nearest)
        else:
            p.add_argument("--out", help="output CSV (default: standard output)")
            p.add_argument("--verify", action="store_true", help="cross-check every row against the oracle")
            p.add_argument("--svg-dir", help="also write one SVG drawing per non-singular row here")
            p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"orbitdev: error: {exc}\n")
        return EXIT_INPUT
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"orbitdev: error: {exc}\n")
        return EXIT_INPUT


def main_entry() -> None:  # pragma: no cover
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    main_entry()
