"""Hyperplanes of a polar space and their classification.

A hyperplane is a proper subspace meeting every line.  Singular hyperplanes
are point perps p^perp with deepest point p; hyperplanes arising from an
embedding are preimages of projective hyperplanes, one per canonical dual
vector.  Classification computes the rank (largest singular subspace
inside) and searches for a deepest point; rank-1 hyperplanes of rank-2
spaces are ovoids.
"""

from __future__ import annotations

import numpy as np

from polarium import linalg
from polarium.embed import Embedding
from polarium.space import PolarSpace, SpaceError

SINGULAR = "singular"
OVOID = "ovoid"
OTHER = "other"


class Hyperplane:
    """A proper subspace meeting every line, with provenance metadata."""

    __slots__ = ("space", "points", "provenance", "_rank", "_deepest", "_searched")

    def __init__(self, space: PolarSpace, points, provenance):
        self.space = space
        self.points = tuple(sorted(points))
        self.provenance = provenance
        self._rank = None
        self._deepest = None
        self._searched = False
        self._verify_axiom()

    def _verify_axiom(self):
        n = self.space.n_points
        if not self.points or len(self.points) == n:
            raise SpaceError(f"{self.space.name}: hyperplane must be a proper "
                             "nonempty subspace")
        mask = self.mask
        lm = self.space.lines_matrix
        if len(self.space.lines) and not (lm & mask).any(axis=1).all():
            k = int(np.flatnonzero(~(lm & mask).any(axis=1))[0])
            raise SpaceError(f"{self.space.name}: line {self.space.lines[k]} "
                             "misses the hyperplane")
        # subspace: a line meets it in <= 1 point or entirely
        counts = (lm & mask).sum(axis=1) if len(self.space.lines) else np.array([])
        sizes = lm.sum(axis=1) if len(self.space.lines) else np.array([])
        partial = (counts > 1) & (counts < sizes)
        if partial.any():
            k = int(np.flatnonzero(partial)[0])
            raise SpaceError(f"{self.space.name}: {self.space.lines[k]} meets the "
                             "hyperplane in more than one point but not fully")

    @property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.space.n_points, dtype=bool)
        m[list(self.points)] = True
        return m

    def deepest_point(self):
        """The unique p with H = p^perp, if one exists."""
        if not self._searched:
            found = []
            mask = self.mask
            for p in self.points:
                if (mask & ~self.space.coll[p]).any():
                    continue
                if int(self.space.coll[p].sum()) == len(self.points):
                    found.append(p)
            if len(found) > 1:
                raise SpaceError(f"{self.space.name}: hyperplane with several "
                                 f"deepest points {found}")
            self._deepest = found[0] if found else None
            self._searched = True
        return self._deepest

    def rank(self) -> int:
        if self._rank is None:
            space = self.space
            gm = space.generators_matrix()
            if not (gm & ~self.mask).any(axis=1).all():  # some generator inside
                self._rank = space.rank
            else:
                self._rank = space.max_singular_rank(self.mask)
        return self._rank

    def is_singular(self) -> bool:
        return self.deepest_point() is not None

    def classification(self) -> str:
        if self.is_singular():
            return SINGULAR
        if self.space.rank == 2 and self.rank() == 1:
            return OVOID
        return OTHER

    def __repr__(self):
        return (f"Hyperplane({self.space.name}, {len(self.points)} points, "
                f"{self.provenance})")


def singular_hyperplane(space: PolarSpace, p: int) -> Hyperplane:
    """p^perp with deepest point p."""
    members = space.perp([p])
    h = Hyperplane(space, members, ("singular", space.points[p]))
    assert h.deepest_point() == p
    return h


def arising_hyperplanes(e: Embedding) -> list:
    """One hyperplane per canonical dual vector of the target space.

    Distinct functionals must induce distinct hyperplanes (the image spans
    the target); a collision is reported as an anomaly.
    """
    space = e.source
    duals = linalg.dual_hyperplanes(e.field, e.dim)
    out = []
    seen = {}
    for phi in duals:
        members = _functional_section(e, phi)
        key = tuple(members)
        if key in seen:
            raise SpaceError(f"{space.name}: functionals {seen[key]} and {phi} "
                             "induce the same hyperplane (image does not span)")
        seen[key] = phi
        out.append(Hyperplane(space, members, ("arising", e.kind, phi)))
    return out


def _functional_section(e: Embedding, phi) -> list:
    field = e.field
    members = []
    for i, v in enumerate(e.images):
        acc = 0
        for c, x in zip(phi, v):
            if c and x:
                acc = field.add(acc, field.mul(c, x))
        if acc == 0:
            members.append(i)
    return members


def hyperplane_from_functional(e: Embedding, phi) -> Hyperplane:
    return Hyperplane(e.source, _functional_section(e, phi), ("arising", e.kind, tuple(phi)))


def find_inducing_functional(e: Embedding, h: Hyperplane):
    """A canonical dual vector whose section under e is exactly h, or None."""
    target = list(h.points)
    for phi in linalg.dual_hyperplanes(e.field, e.dim):
        if _functional_section(e, phi) == target:
            return phi
    return None
