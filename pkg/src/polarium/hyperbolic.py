"""Double perps, hyperbolic lines, and the enriched linear space L(S).

A hyperbolic line is the double perp {a,b}^perpperp of a non-collinear
pair; its members are pairwise non-collinear.  Lines are keyed by their
sorted member tuple, since many pairs regenerate the same double perp.
Adjoining all hyperbolic lines to the ordinary lines yields a linear
space: any two points lie on exactly one joining line (verified at build).
"""

from __future__ import annotations

import numpy as np

from polarium.space import PolarSpace, SpaceError


class HyperbolicLine:
    __slots__ = ("space", "pair", "points")

    def __init__(self, space, pair, points):
        self.space = space
        self.pair = pair
        self.points = tuple(sorted(points))

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, HyperbolicLine) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"HyperbolicLine({self.pair} -> {self.points})"


def hyperbolic_line(space: PolarSpace, a: int, b: int) -> HyperbolicLine:
    """{a,b}^perpperp for a non-collinear pair, computed by two perp passes."""
    if a == b:
        raise ValueError("hyperbolic line needs two distinct points")
    if space.collinear(a, b):
        raise ValueError(f"points {a} and {b} are collinear")
    members = np.flatnonzero(space.double_perp_mask([a, b]))
    line = HyperbolicLine(space, (a, b), (int(i) for i in members))
    for i in line.points:
        for j in line.points:
            if i < j and space.collinear(i, j):
                raise SpaceError(f"{space.name}: collinear pair inside a hyperbolic line")
    assert a in line.points and b in line.points
    return line


def all_hyperbolic_lines(space: PolarSpace) -> list:
    """All hyperbolic lines, deduplicated, ordered by member tuple."""
    seen_pairs = set()
    lines = {}
    coll = space.coll
    for a in range(space.n_points):
        for b in np.flatnonzero(~coll[a, a + 1:]) + a + 1:
            b = int(b)
            if (a, b) in seen_pairs:
                continue
            h = hyperbolic_line(space, a, b)
            lines[h.points] = h
            pts = h.points
            for i in range(len(pts)):
                for j in range(i + 1, len(pts)):
                    seen_pairs.add((pts[i], pts[j]))
    return [lines[k] for k in sorted(lines)]


class LinearSpaceL:
    """The structure (P, L u L_h): ordinary plus hyperbolic lines."""

    def __init__(self, space, hyperbolic_lines):
        self.space = space
        self.lines = sorted(set(space.lines) | {h.points for h in hyperbolic_lines})
        self._verify_linear()

    def _verify_linear(self):
        n = self.space.n_points
        count = np.zeros((n, n), dtype=np.int64)
        for line in self.lines:
            idx = np.fromiter(line, dtype=np.int64)
            count[np.ix_(idx, idx)] += 1
        np.fill_diagonal(count, 1)
        if (count != 1).any():
            i, j = map(int, np.argwhere(count != 1)[0])
            raise SpaceError(
                f"{self.space.name}: points {i},{j} lie on {int(count[i, j])} "
                "joining lines; L(S) is not a linear space")

    @property
    def n_lines(self):
        return len(self.lines)


def linear_space(space: PolarSpace) -> LinearSpaceL:
    return LinearSpaceL(space, all_hyperbolic_lines(space))
