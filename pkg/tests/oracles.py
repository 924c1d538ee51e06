"""Independent reference computations used only by the tests.

None of these share code with the package: they recompute things by the
most direct method available at desk scale.
"""

from __future__ import annotations

from fractions import Fraction


def fm_feasible(equalities, weak, strict) -> bool:
    """Fourier-Motzkin elimination with strictness tracking."""
    rows = []
    for vec, rhs in equalities:
        rows.append((list(map(Fraction, vec)), Fraction(rhs), False))
        rows.append(([-Fraction(v) for v in vec], -Fraction(rhs), False))
    rows += [(list(map(Fraction, v)), Fraction(r), False) for v, r in weak]
    rows += [(list(map(Fraction, v)), Fraction(r), True) for v, r in strict]
    if not rows:
        return True
    nvar = len(rows[0][0])
    for j in range(nvar):
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        keep = [r for r in rows if r[0][j] == 0]
        for pv, pr, ps in pos:
            for nv, nr, ns in neg:
                a, b = pv[j], -nv[j]
                vec = [b * x + a * y for x, y in zip(pv, nv)]
                keep.append((vec, b * pr + a * nr, ps or ns))
        rows = keep
    return all((r > 0) if s else (r >= 0) for _, r, s in rows)


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points):
    """Andrew's monotone chain; returns the extreme points counter-clockwise."""
    pts = sorted(set(tuple(map(Fraction, p)) for p in points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def area_2d(points) -> Fraction:
    """Shoelace area of the convex hull."""
    h = hull_2d(points)
    if len(h) < 3:
        return Fraction(0)
    s = sum(h[i][0] * h[(i + 1) % len(h)][1] - h[(i + 1) % len(h)][0] * h[i][1]
            for i in range(len(h)))
    return abs(Fraction(s)) / 2


def hull_edges_2d(points) -> set[frozenset[int]]:
    """Facets of a planar point set as label sets (1-based), including
    points lying in the relative interior of an edge."""
    pts = [tuple(map(Fraction, p)) for p in points]
    h = hull_2d(pts)
    edges = set()
    for i in range(len(h)):
        a, b = h[i], h[(i + 1) % len(h)]
        edges.add(frozenset(k for k, p in enumerate(pts, 1) if cross(a, b, p) == 0))
    return edges


def barycentric_2d(tri, p):
    """Barycentric coordinates of ``p`` in the triangle ``tri``."""
    (x1, y1), (x2, y2), (x3, y3) = [tuple(map(Fraction, q)) for q in tri]
    x, y = map(Fraction, p)
    det = (y2 - y3) * (x1 - x3) + (x3 - x2) * (y1 - y3)
    l1 = ((y2 - y3) * (x - x3) + (x3 - x2) * (y - y3)) / det
    l2 = ((y3 - y1) * (x - x3) + (x1 - x3) * (y - y3)) / det
    return l1, l2, 1 - l1 - l2


def strictly_inside_2d(tri, p) -> bool:
    return all(c > 0 for c in barycentric_2d(tri, p))
