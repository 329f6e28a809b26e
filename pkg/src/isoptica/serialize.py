"""Shape description files (JSON) and delimited text output.

Numbers in CSV are printed with 17 significant digits by default so a reader
recovers the exact binary values; the ISOPTICA_DIGITS environment variable
overrides the precision (1..17).  All output is byte-deterministic for
identical inputs.
"""

from __future__ import annotations

import json
import os

from .errors import ShapeFileError
from .geometry import Point2
from .profiles import AntiPeriodicProfile
from .shapes import Disk, Ellipse, FourierSupport, Polygon, SinBeta, SupportShape

DEFAULT_DIGITS = 17


def float_digits() -> int:
    raw = os.environ.get("ISOPTICA_DIGITS")
    if raw is None:
        return DEFAULT_DIGITS
    try:
        digits = int(raw)
    except ValueError as exc:
        raise ShapeFileError(f"ISOPTICA_DIGITS must be an integer, got {raw!r}") from exc
    if not 1 <= digits <= 17:
        raise ShapeFileError(f"ISOPTICA_DIGITS must be in 1..17, got {digits}")
    return digits


def fmt(x: float, digits: int | None = None) -> str:
    if digits is None:
        digits = float_digits()
    return f"{float(x):.{digits}g}"


def shape_to_dict(shape: SupportShape) -> dict:
    if isinstance(shape, Disk):
        return {"type": "disk", "radius": shape.radius}
    if isinstance(shape, Ellipse):
        return {"type": "ellipse", "a": shape.a, "b": shape.b}
    if isinstance(shape, FourierSupport):
        return {"type": "fourier", "a0": shape.a0,
                "harmonics": [list(h) for h in shape.harmonics]}
    if isinstance(shape, SinBeta):
        return {"type": "sinbeta", "r": shape.r, "p": shape.p, "q": shape.q,
                "terms": [list(t) for t in shape.profile.terms]}
    if isinstance(shape, Polygon):
        return {"type": "polygon", "vertices": [[v.x, v.y] for v in shape.vertices]}
    raise ShapeFileError(f"cannot serialize shape of type {type(shape).__name__}")


def _require(data: dict, field: str, kind):
    if field not in data:
        raise ShapeFileError(f"missing field {field!r}", field=field)
    value = data[field]
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ShapeFileError(f"field {field!r} must be a number, got {value!r}",
                                 field=field)
        return float(value)
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ShapeFileError(f"field {field!r} must be an integer, got {value!r}",
                                 field=field)
        return value
    if kind is list:
        if not isinstance(value, list):
            raise ShapeFileError(f"field {field!r} must be a list, got {value!r}",
                                 field=field)
        return value
    raise AssertionError(kind)


def shape_from_dict(data) -> SupportShape:
    if not isinstance(data, dict):
        raise ShapeFileError(f"shape document must be a JSON object, got {type(data).__name__}")
    kind = data.get("type")
    try:
        if kind == "disk":
            return Disk(_require(data, "radius", float))
        if kind == "ellipse":
            return Ellipse(_require(data, "a", float), _require(data, "b", float))
        if kind == "fourier":
            harmonics = []
            for i, row in enumerate(_require(data, "harmonics", list)):
                if not (isinstance(row, list) and len(row) == 3):
                    raise ShapeFileError(
                        f"harmonics[{i}] must be [m, a_m, b_m]", field="harmonics")
                harmonics.append((row[0], row[1], row[2]))
            return FourierSupport(_require(data, "a0", float), tuple(harmonics))
        if kind == "sinbeta":
            q = _require(data, "q", int)
            terms = []
            for i, row in enumerate(_require(data, "terms", list)):
                if not (isinstance(row, list) and len(row) == 3):
                    raise ShapeFileError(
                        f"terms[{i}] must be [multiplier, amplitude, phase]",
                        field="terms")
                terms.append((row[0], row[1], row[2]))
            profile = AntiPeriodicProfile(q, tuple(terms))
            return SinBeta(_require(data, "r", float), _require(data, "p", int),
                           q, profile)
        if kind == "polygon":
            vertices = []
            for i, row in enumerate(_require(data, "vertices", list)):
                if not (isinstance(row, list) and len(row) == 2):
                    raise ShapeFileError(
                        f"vertices[{i}] must be [x, y]", field="vertices")
                vertices.append(Point2(float(row[0]), float(row[1])))
            return Polygon(tuple(vertices))
    except ShapeFileError:
        raise
    except (ValueError, TypeError) as exc:
        raise ShapeFileError(f"invalid {kind!r} shape: {exc}") from exc
    raise ShapeFileError(
        f"field 'type' must be one of disk/ellipse/fourier/sinbeta/polygon, "
        f"got {kind!r}", field="type")


def load_shape(path) -> SupportShape:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ShapeFileError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    try:
        return shape_from_dict(data)
    except ShapeFileError as exc:
        raise ShapeFileError(f"{path}: {exc}", field=exc.field) from exc


def save_shape(shape: SupportShape, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(shape_to_dict(shape), fh, indent=2, sort_keys=True)
        fh.write("\n")


def orbit_csv(record) -> str:
    """CSV of a circle-billiard orbit: one row per step (initial state first)."""
    digits = float_digits()
    lines = ["step,psi,beta,chord_normal,chord_offset"]
    for k, line in enumerate(record.chords):
        s = record.states[k]
        lines.append(",".join([str(k), fmt(s.psi, digits), fmt(s.beta, digits),
                               fmt(line.normal, digits), fmt(line.offset, digits)]))
    return "\n".join(lines) + "\n"


def curve_csv(curve) -> str:
    digits = float_digits()
    lines = ["phi,x,y"]
    for phi, (x, y) in zip(curve.phi, curve.points):
        lines.append(",".join([fmt(phi, digits), fmt(x, digits), fmt(y, digits)]))
    return "\n".join(lines) + "\n"


def outer_csv(states, sights) -> str:
    """CSV of an outer-billiard orbit (states visited, with sight angles)."""
    digits = float_digits()
    lines = ["step,x,y,tangent_normal,direction,sight"]
    for k, (state, sight) in enumerate(zip(states, sights)):
        lines.append(",".join([str(k), fmt(state.point.x, digits),
                               fmt(state.point.y, digits),
                               fmt(state.tangent_normal, digits),
                               fmt(state.direction, digits), fmt(sight, digits)]))
    return "\n".join(lines) + "\n"
