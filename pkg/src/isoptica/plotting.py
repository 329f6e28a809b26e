"""Matplotlib report figures rendered next to the CSV/SVG output.

Figures are built on explicit Figure objects (no pyplot state) so library
use stays side-effect free.  These renders are for inspection; the golden
artifacts remain the deterministic SVG files.
"""

from __future__ import annotations

import numpy as np
from matplotlib.figure import Figure

_SHAPE_COLOR = "#c03028"
_CURVE_COLOR = "#2858c0"
_PATH_COLOR = "#288048"
_CIRCLE_COLOR = "0.55"


def _new_axes(title: str):
    fig = Figure(figsize=(6.0, 6.0))
    ax = fig.subplots()
    ax.set_aspect("equal")
    ax.grid(True, lw=0.4, alpha=0.4)
    ax.set_title(title, fontsize=11)
    return fig, ax


def _draw_circle(ax, r: float):
    t = np.linspace(0.0, 2.0 * np.pi, 361)
    ax.plot(r * np.cos(t), r * np.sin(t), ls="--", lw=1.0, color=_CIRCLE_COLOR,
            label="circle C")


def _draw_shape(ax, shape, samples: int = 720):
    pts = shape.outline(samples)
    closed = np.vstack([pts, pts[:1]])
    ax.plot(closed[:, 0], closed[:, 1], lw=1.6, color=_SHAPE_COLOR, label="shape")


def save_construct_figure(shape, r: float, path) -> None:
    fig, ax = _new_axes(f"constant-angle shape, p={shape.p}, q={shape.q}")
    _draw_circle(ax, r)
    _draw_shape(ax, shape)
    ax.legend(loc="upper right", fontsize=9)
    fig.savefig(path, dpi=150)


def save_isoptic_figure(shape, curve, path) -> None:
    fig, ax = _new_axes(f"isoptic at alpha = {curve.alpha:.6g} rad")
    _draw_shape(ax, shape)
    pts = np.vstack([curve.points, curve.points[:1]])
    ax.plot(pts[:, 0], pts[:, 1], lw=1.2, color=_CURVE_COLOR, label="isoptic")
    ax.legend(loc="upper right", fontsize=9)
    fig.savefig(path, dpi=150)


def save_circle_orbit_figure(record, path) -> None:
    fig, ax = _new_axes(
        f"billiard orbit, alpha = {record.alpha:.6g} rad, {record.steps} steps")
    _draw_circle(ax, record.r)
    pts = record.positions()
    ax.plot(pts[:, 0], pts[:, 1], lw=1.0, color=_PATH_COLOR, label="trajectory")
    ax.plot(pts[0, 0], pts[0, 1], "o", ms=5, color=_PATH_COLOR)
    ax.legend(loc="upper right", fontsize=9)
    fig.savefig(path, dpi=150)


def save_outer_orbit_figure(shape, states, path) -> None:
    fig, ax = _new_axes(f"outer billiard, {max(len(states) - 1, 0)} steps")
    _draw_shape(ax, shape)
    xs = [s.point.x for s in states]
    ys = [s.point.y for s in states]
    ax.plot(xs, ys, lw=1.0, color=_PATH_COLOR, label="trajectory")
    ax.plot(xs[0], ys[0], "o", ms=5, color=_PATH_COLOR)
    ax.legend(loc="upper right", fontsize=9)
    fig.savefig(path, dpi=150)
