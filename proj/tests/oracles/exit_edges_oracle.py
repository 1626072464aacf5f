#!/usr/bin/env python3
"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Exit edges are computed straight from the double-wedge definition with exact
Fractions; no code is shared with the C++ implementation.
"""
from fractions import Fraction as F
from itertools import combinations
import sys


def orient(p, q, r):
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def separates(p, q, a, b):
    return orient(p, q, a) * orient(p, q, b) < 0


def exit_edges(pts):
    n = len(pts)
    out = {}
    for a, b in combinations(range(n), 2):
        wit = []
        for c in range(n):
            if c in (a, b):
                continue
            ok = True
            for p in range(n):
                if p in (a, b, c):
                    continue
                if separates(pts[a], pts[p], pts[b], pts[c]) or separates(pts[b], pts[p], pts[a], pts[c]):
                    ok = False
                    break
            if ok:
                wit.append(c)
        if wit:
            out[(a, b)] = wit
    return out


def hull(pts):
    n = len(pts)
    res = []
    for i in range(n):
        inside = False
        for a, b, c in combinations([j for j in range(n) if j != i], 3):
            o = [orient(pts[a], pts[b], pts[i]), orient(pts[b], pts[c], pts[i]), orient(pts[c], pts[a], pts[i])]
            if all(x > 0 for x in o) or all(x < 0 for x in o):
                inside = True
                break
        if not inside:
            res.append(i)
    return res


def fmt(edges, pts):
    def wit(a, b, c):
        return "%d%s" % (c, "L" if orient(pts[a], pts[b], pts[c]) > 0 else "R")
    return "; ".join("{%d,%d} witnesses {%s}" % (a, b, ",".join(wit(a, b, c) for c in w)) for (a, b), w in sorted(edges.items()))


FIXTURES = {
    "triangle": [(0, 0), (4, 0), (2, 4)],
    "square": [(0, 0), (1, 0), (1, 1), (0, 1)],
    "two_triangles": [(-5, 5), (5, 5), (-5, -5), (5, -5), (-3, 2), (-3, -2)],
    "tri_plus_interior": [(0, 0), (4, 0), (2, 4), (2, 1)],
    "pentagon": [(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)],
    "quad_plus_one": [(0, 0), (6, 0), (6, 6), (0, 6), (2, 3)],
    "tri_plus_two": [(0, 0), (10, 0), (5, 10), (4, 3), (6, 4)],
}

if __name__ == "__main__":
    names = sys.argv[1:] or list(FIXTURES)
    for name in names:
        pts = [(F(x), F(y)) for x, y in FIXTURES[name]]
        e = exit_edges(pts)
        print(f"{name}: n={len(pts)} count={len(e)} two_witness={sum(len(w) == 2 for w in e.values())} hull={hull(pts)}")
        print("   ", fmt(e, pts))


def four_holes(pts):
    """Empty simple quadrilaterals via shapely; returns (cycle, convex) pairs."""
    from shapely.geometry import Point, Polygon
    out = []
    n = len(pts)
    for quad in combinations(range(n), 4):
        a = quad[0]
        for rest in ((quad[1], quad[2], quad[3]), (quad[1], quad[3], quad[2]), (quad[2], quad[1], quad[3])):
            cyc = (a,) + rest
            poly = Polygon([tuple(map(float, pts[i])) for i in cyc])
            if not poly.is_valid:
                continue
            if any(poly.contains(Point(*map(float, pts[p]))) for p in range(n) if p not in cyc):
                continue
            out.append((cyc, poly.convex_hull.area == poly.area))
    return out


def holes_at_edge(pts, a, b):
    res = []
    for cyc, convex in four_holes(pts):
        for i in range(4):
            if {cyc[i], cyc[(i + 1) % 4]} == {a, b}:
                res.append((cyc, convex))
    return res
