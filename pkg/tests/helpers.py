"""Shared independent oracles for the test suite.

These stay deliberately dumb: ray counting, dense grids, brute-force
scans.  They never call the code paths they are used to check.
"""

import math

import numpy as np


def ray_aperture(rho, point, n=1_000_000):
    """Aperture of the direction cone from `point` hitting the disk of radius rho.

    Counts hits over n equally spaced ray directions; error is below one
    grid step 2*pi/n.
    """
    theta = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    b = point[0] * np.cos(theta) + point[1] * np.sin(theta)
    disc = b * b - (point[0] ** 2 + point[1] ** 2 - rho * rho)
    hits = (disc >= 0.0) & (b < 0.0)
    return hits.sum() * (2.0 * np.pi / n)


def distance_to_body(points, shape, grid=4096):
    """Exact distance of exterior points to a support-function body.

    For a convex body, the distance equals the largest signed distance to a
    support line, maximized over the normal grid.
    """
    phi = np.linspace(0.0, 2.0 * np.pi, grid, endpoint=False)
    normals = np.column_stack([np.cos(phi), np.sin(phi)])
    h = shape.support(phi)
    return (np.asarray(points, float) @ normals.T - h).max(axis=1)


def distance_to_polyline(points, polyline):
    """Max distance from each point to a closed polyline (segment distance)."""
    a = np.asarray(polyline, float)
    b = np.roll(a, -1, axis=0)
    ab = b - a
    seg_len2 = (ab ** 2).sum(axis=1)
    worst = 0.0
    for pt in np.asarray(points, float):
        t = np.clip(((pt - a) * ab).sum(axis=1) / seg_len2, 0.0, 1.0)
        proj = a + t[:, None] * ab
        worst = max(worst, float(np.sqrt(((proj - pt) ** 2).sum(axis=1)).min()))
    return worst


def radial_profile(points, n=360):
    """Radius of a star-shaped (about the origin) sample set at n directions."""
    pts = np.asarray(points, float)
    ang = np.mod(np.arctan2(pts[:, 1], pts[:, 0]), 2.0 * np.pi)
    rad = np.hypot(pts[:, 0], pts[:, 1])
    order = np.argsort(ang)
    targets = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    return np.interp(targets, ang[order], rad[order], period=2.0 * np.pi)


def coprime_pairs(q_max, parity=None):
    """All (p, q) with 0 < p < q <= q_max, gcd 1, optionally filtered by q-p parity."""
    pairs = []
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            if parity == "odd" and (q - p) % 2 == 0:
                continue
            if parity == "even" and (q - p) % 2 == 1:
                continue
            pairs.append((p, q))
    return pairs
