"""Command-line interface.

Subcommands: classify, construct, isoptic, orbit (circle|outer), residual,
modes.  Angles are accepted either as decimal radians ("1.0472") or as exact
rational multiples of pi ("1/3pi", "2/3 pi", "pi", "pi/4").  Exit codes:
0 success, 2 argument error, 3 convexity violated, 4 parity obstruction,
5 numeric failure.
"""

from __future__ import annotations

import argparse
import math
import re
import sys
from pathlib import Path

from .billiard import BilliardState, orbit
from .classify import antiperiodic_modes, classify
from .construction import beta_residual, build_shape
from .errors import (BetaOutOfRange, BracketingFailed, ConvexityViolated,
                     DegenerateFit, NoSignChange, NotCoprime, OutOfRange,
                     ParallelLines, ParityObstruction, PointInsideShape,
                     ShapeFileError)
from .geometry import Point2, angle_distance
from .isoptics import circle_fit, isoptic_curve
from .outer import initial_state, outer_step
from .profiles import AntiPeriodicProfile
from .serialize import curve_csv, fmt, load_shape, orbit_csv, outer_csv, save_shape
from . import svg

EXIT_OK = 0
EXIT_ARGUMENT = 2
EXIT_CONVEXITY = 3
EXIT_PARITY = 4
EXIT_NUMERIC = 5

_RATIONAL_PI = re.compile(r"^(\d+)\s*/\s*(\d+)\s*\*?\s*pi$")
_MULTIPLE_PI = re.compile(r"^(\d+(?:\.\d*)?|\.\d+)\s*\*?\s*pi$")
_PI_OVER = re.compile(r"^pi\s*/\s*(\d+)$")


def parse_angle(text: str) -> float:
    """Radians from a decimal or a rational multiple of pi."""
    s = text.strip().lower()
    if s == "pi":
        return math.pi
    m = _RATIONAL_PI.match(s)
    if m:
        p, q = int(m.group(1)), int(m.group(2))
        if q == 0:
            raise OutOfRange(f"zero denominator in angle {text!r}")
        return math.pi * p / q
    m = _PI_OVER.match(s)
    if m:
        q = int(m.group(1))
        if q == 0:
            raise OutOfRange(f"zero denominator in angle {text!r}")
        return math.pi / q
    m = _MULTIPLE_PI.match(s)
    if m:
        return float(m.group(1)) * math.pi
    try:
        return float(s)
    except ValueError:
        raise OutOfRange(
            f"cannot parse angle {text!r}; use radians or forms like '2/3pi'") from None


def parse_point(text: str) -> Point2:
    parts = text.split(",")
    if len(parts) != 2:
        raise OutOfRange(f"expected 'x,y', got {text!r}")
    try:
        return Point2(float(parts[0]), float(parts[1]))
    except ValueError:
        raise OutOfRange(f"expected numeric 'x,y', got {text!r}") from None


def _write_text(path: Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_classify(args) -> int:
    verdict = classify(args.p, args.q)
    parity = "odd" if (args.q - args.p) % 2 else "even"
    print(f"{verdict.value} (q-p={args.q - args.p} {parity})")
    return EXIT_OK


def cmd_modes(args) -> int:
    modes = antiperiodic_modes(args.p, args.q, args.m_max)
    print(" ".join(str(m) for m in modes))
    return EXIT_OK


def cmd_construct(args) -> int:
    profile = AntiPeriodicProfile.single(args.q, args.k, args.delta)
    shape = build_shape(args.p, args.q, args.r, profile)
    out = Path(args.out)
    json_path = out.with_suffix(".json")
    save_shape(shape, json_path)
    width = svg.stroke_width(args.r)
    elements = [
        svg.circle_element(args.r, width=width),
        svg.polygon_element(shape.outline(720), svg.SHAPE_STYLE, width=width),
    ]
    svg.write_svg(out, elements, args.r)
    if args.fig:
        from . import plotting
        plotting.save_construct_figure(shape, args.r, args.fig)
    print(f"wrote {json_path} and {out}")
    return EXIT_OK


def cmd_isoptic(args) -> int:
    shape = load_shape(args.shapefile)
    alpha = parse_angle(args.alpha)
    curve = isoptic_curve(shape, alpha, args.n)
    out = Path(args.out)
    _write_text(out, curve_csv(curve))
    fit = circle_fit(curve)
    view = max(float(abs(curve.points).max()), shape.diameter() / 2.0)
    width = svg.stroke_width(view)
    elements = [
        svg.polygon_element(shape.outline(720), svg.SHAPE_STYLE, width=width),
        svg.polygon_element(curve.points, svg.CURVE_STYLE, width=width),
    ]
    svg_path = out.with_suffix(".svg")
    svg.write_svg(svg_path, elements, view)
    if args.fig:
        from . import plotting
        plotting.save_isoptic_figure(shape, curve, args.fig)
    print(f"wrote {out} and {svg_path}")
    print(f"circle fit: center=({fmt(fit.center.x)},{fmt(fit.center.y)}) "
          f"radius={fmt(fit.radius)} max_deviation={fmt(fit.max_deviation)}")
    return EXIT_OK


def cmd_orbit_circle(args) -> int:
    alpha = parse_angle(args.alpha)
    beta0 = parse_angle(args.beta0)
    psi0 = parse_angle(args.psi0)
    record = orbit(BilliardState(psi0, beta0), alpha, args.radius, args.steps)
    out = Path(args.out)
    _write_text(out, orbit_csv(record))
    width = svg.stroke_width(args.radius)
    elements = [
        svg.circle_element(args.radius, width=width),
        svg.polyline_element(record.positions(), svg.PATH_STYLE, width=width),
    ]
    svg_path = out.with_suffix(".svg")
    svg.write_svg(svg_path, elements, args.radius)
    if args.fig:
        from . import plotting
        plotting.save_circle_orbit_figure(record, args.fig)
    print(f"wrote {out} and {svg_path}")
    first, last = record.states[0], record.states[-1]
    if (angle_distance(first.psi, last.psi) < 1e-9
            and abs(first.beta - last.beta) < 1e-9):
        print(f"orbit closed after {record.steps} steps")
    return EXIT_OK


def cmd_orbit_outer(args) -> int:
    shape = load_shape(args.shapefile)
    start = parse_point(args.start)
    state = initial_state(shape, start)
    states = [state]
    sights = [shape.sight_angle(state.point)]
    for _ in range(args.steps):
        state = outer_step(shape, state)
        states.append(state)
        sights.append(shape.sight_angle(state.point))
    out = Path(args.out)
    _write_text(out, outer_csv(states, sights))
    pts = [s.point for s in states]
    view = max(max(p.norm() for p in pts), shape.diameter() / 2.0)
    width = svg.stroke_width(view)
    elements = [
        svg.polygon_element(shape.outline(720), svg.SHAPE_STYLE, width=width),
        svg.polyline_element([(p.x, p.y) for p in pts], svg.PATH_STYLE, width=width),
    ]
    svg_path = out.with_suffix(".svg")
    svg.write_svg(svg_path, elements, view)
    if args.fig:
        from . import plotting
        plotting.save_outer_orbit_figure(shape, states, args.fig)
    print(f"wrote {out} and {svg_path}")
    diam = shape.diameter()
    period = None
    for m in range(1, len(states)):
        if ((states[m].point - states[0].point).norm() <= args.tol
                and angle_distance(states[m].tangent_normal,
                                   states[0].tangent_normal) <= args.tol / diam):
            period = m
            break
    if period is None:
        print(f"no recurrence within {args.steps} steps (tol {fmt(args.tol, 6)})")
    else:
        print(f"period={period}")
    return EXIT_OK


def cmd_residual(args) -> int:
    shape = load_shape(args.shapefile)
    alpha = parse_angle(args.alpha)
    value = beta_residual(shape, alpha, r=args.radius, samples=args.samples)
    print(f"max residual: {fmt(value)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isoptica",
        description="Isoptic curves, constant-angle shapes and billiards.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="decide whether alpha = p*pi/q admits non-disk shapes")
    p_classify.add_argument("p", type=int)
    p_classify.add_argument("q", type=int)
    p_classify.set_defaults(func=cmd_classify)

    p_modes = sub.add_parser(
        "modes", help="anti-periodic perturbation modes up to m_max")
    p_modes.add_argument("p", type=int)
    p_modes.add_argument("q", type=int)
    p_modes.add_argument("m_max", type=int)
    p_modes.set_defaults(func=cmd_modes)

    p_construct = sub.add_parser(
        "construct", help="build a constant-angle shape and render it")
    p_construct.add_argument("p", type=int)
    p_construct.add_argument("q", type=int)
    p_construct.add_argument("r", type=float, help="radius of the circle C")
    p_construct.add_argument("k", type=float, help="perturbation amplitude (radians)")
    p_construct.add_argument("delta", type=float, help="perturbation phase (radians)")
    p_construct.add_argument("out", help="output SVG path (JSON written alongside)")
    p_construct.add_argument("--fig", help="also render a matplotlib figure here")
    p_construct.set_defaults(func=cmd_construct)

    p_isoptic = sub.add_parser("isoptic", help="sample the isoptic of a shape")
    p_isoptic.add_argument("shapefile")
    p_isoptic.add_argument("alpha", help="sight angle (radians or 'p/q pi')")
    p_isoptic.add_argument("n", type=int, help="number of samples")
    p_isoptic.add_argument("out", help="output CSV path (SVG written alongside)")
    p_isoptic.add_argument("--fig", help="also render a matplotlib figure here")
    p_isoptic.set_defaults(func=cmd_isoptic)

    p_orbit = sub.add_parser("orbit", help="simulate a billiard orbit")
    orbit_sub = p_orbit.add_subparsers(dest="mode", required=True)

    p_circle = orbit_sub.add_parser("circle", help="constant-angle billiard on a circle")
    p_circle.add_argument("alpha", help="sight angle (radians or 'p/q pi')")
    p_circle.add_argument("beta0", help="initial chord angle (radians or 'p/q pi')")
    p_circle.add_argument("steps", type=int)
    p_circle.add_argument("out", help="output CSV path (SVG written alongside)")
    p_circle.add_argument("--radius", type=float, default=1.0)
    p_circle.add_argument("--psi0", default="0", help="initial position angle")
    p_circle.add_argument("--fig", help="also render a matplotlib figure here")
    p_circle.set_defaults(func=cmd_orbit_circle)

    p_outer = orbit_sub.add_parser("outer", help="outer constant-angle billiard")
    p_outer.add_argument("shapefile")
    p_outer.add_argument("start", help="exterior start point 'x,y'")
    p_outer.add_argument("steps", type=int)
    p_outer.add_argument("out", help="output CSV path (SVG written alongside)")
    p_outer.add_argument("--tol", type=float, default=1e-6,
                         help="recurrence tolerance (length)")
    p_outer.add_argument("--fig", help="also render a matplotlib figure here")
    p_outer.set_defaults(func=cmd_orbit_outer)

    p_residual = sub.add_parser(
        "residual", help="billiard-compatibility residual of a shape")
    p_residual.add_argument("shapefile")
    p_residual.add_argument("alpha", help="sight angle (radians or 'p/q pi')")
    p_residual.add_argument("--radius", type=float, default=1.0)
    p_residual.add_argument("--samples", type=int, default=720)
    p_residual.set_defaults(func=cmd_residual)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConvexityViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONVEXITY
    except ParityObstruction as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARITY
    except (NotCoprime, OutOfRange, ShapeFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGUMENT
    except (BracketingFailed, DegenerateFit, ParallelLines, BetaOutOfRange,
            PointInsideShape, NoSignChange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
