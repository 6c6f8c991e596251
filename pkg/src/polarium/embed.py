"""Projective embeddings of form-backed polar spaces.

An Embedding maps every point to a canonical projective point of GF(q)^d
and is *full*: each source line maps onto all points of a projective line.
It carries the bilinear (and, when alive, quadratic) form describing its
image, so quotients by radical subspaces and the perp identities of the
embedded space can be computed.  Preimage queries run on a hash of the
canonical image points.
"""

from __future__ import annotations

import itertools

from polarium import linalg
from polarium.forms import (ALTERNATING, QUADRATIC, Form, orthogonal_complement,
                            parabolic_quadric_form, symplectic_form)
from polarium.linalg import Subspace, quotient_map, span
from polarium.space import PolarSpace, SingularSubspace, are_opposite


class EmbeddingError(Exception):
    """Injectivity or fullness failed; the requested quotient is inadmissible."""


class Embedding:
    """An injective, line-full map of a polar space into PG(d-1, q)."""

    def __init__(self, source: PolarSpace, images, bilinear: Form,
                 quadratic: Form | None = None, *, kind: str = "natural",
                 is_minimal: bool | None = None, is_universal: bool = False):
        self.source = source
        self.field = bilinear.field
        self.dim = bilinear.dim
        self.images = [tuple(v) for v in images]
        self.bilinear = bilinear
        self.quadratic = quadratic
        self.kind = kind
        self.is_universal = is_universal
        self.is_minimal = (bilinear.radical().rank == 0
                           if is_minimal is None else is_minimal)
        self._preimage = {}
        for i, v in enumerate(self.images):
            if v in self._preimage:
                raise EmbeddingError(f"images of points {self._preimage[v]} and {i} collide")
            self._preimage[v] = i
        self._verify_full()

    def _verify_full(self):
        field = self.field
        for line in self.source.lines:
            u, v = self.images[line[0]], self.images[line[1]]
            target = {linalg.normalize(field, v)}
            for lam in field.elements:
                w = linalg.vec_add(field, u, linalg.vec_scale(field, lam, v))
                target.add(linalg.normalize(field, w))
            have = {self.images[p] for p in line}
            if have != target:
                raise EmbeddingError(
                    f"{self.source.name}: line {line} does not map onto a projective line")

    def preimage(self, point):
        """Source point index of a canonical target point, or None."""
        return self._preimage.get(tuple(point))

    def preimage_of_subspace(self, sub: Subspace) -> list:
        return sorted(i for v, i in self._preimage.items() if sub.contains(v))

    def image_points(self) -> set:
        return set(self.images)

    def __repr__(self):
        return (f"Embedding({self.source.name} -> PG({self.dim - 1},"
                f"{self.field.q}), kind={self.kind})")


def natural_embedding(space: PolarSpace) -> Embedding:
    """Identity-on-coordinates inclusion of a form-backed space."""
    if not space.is_form_backed:
        raise ValueError(f"{space.name} carries no form")
    form = space.form
    if form.kind == QUADRATIC:
        return Embedding(space, space.vectors, form.polarization(), form)
    return Embedding(space, space.vectors, form)


def quotient_embedding(e: Embedding, x: Subspace) -> Embedding:
    """Quotient of an embedding by a subspace of the radical of its bilinear form."""
    rad = e.bilinear.radical()
    if not rad.contains_subspace(x):
        raise EmbeddingError("quotient subspace must lie inside the radical")
    if x.rank == 0:
        return Embedding(e.source, e.images, e.bilinear, e.quadratic,
                         kind=e.kind, is_universal=e.is_universal)
    qm = quotient_map(e.field, e.dim, x)
    images = []
    for v in e.images:
        w = qm.apply(v)
        if not any(w):
            raise EmbeddingError("a point image collapses into the quotient kernel")
        images.append(linalg.normalize(e.field, w))
    basis = [tuple(1 if i == c else 0 for i in range(e.dim)) for c in qm.coords]
    gram = [[e.bilinear.bilinear(bi, bj) for bj in basis] for bi in basis]
    bilinear = Form(e.bilinear.kind, e.field, gram)
    quad = None
    if e.quadratic is not None and all(e.quadratic.quadratic(v) == 0
                                       for v in linalg.enumerate_points(x)):
        m = len(basis)
        A = [[0] * m for _ in range(m)]
        for i in range(m):
            A[i][i] = e.quadratic.quadratic(basis[i])
            for j in range(i + 1, m):
                A[i][j] = e.bilinear.bilinear(basis[i], basis[j])
        quad = Form(QUADRATIC, e.field, A)
    return Embedding(e.source, images, bilinear, quad, kind="quotient")


def minimal_embedding(space: PolarSpace) -> Embedding:
    """Quotient of the natural embedding by the full radical of the
    polarization (the nucleus, in the characteristic-2 quadric case)."""
    nat = natural_embedding(space)
    rad = nat.bilinear.radical()
    if rad.rank == 0:
        nat.is_minimal = True
        return nat
    out = quotient_embedding(nat, rad)
    out.is_minimal = True
    return out


def universal_embedding_sp_char2(space: PolarSpace) -> Embedding:
    """The universal embedding of W(2n-1, q), q even: the coordinate section
    v -> (sqrt(Q_w(v)), v) onto the parabolic quadric Q(2n, q), whose
    quotient by the nucleus coordinate recovers the natural embedding."""
    form = space.form
    if form is None or form.kind != ALTERNATING:
        raise ValueError(f"{space.name} is not a symplectic form-backed space")
    field = form.field
    if field.p != 2:
        raise ValueError("the proper universal embedding exists only for even q")
    n = form.dim // 2
    if form.matrix != symplectic_form(field, n).matrix:
        raise ValueError("universal section assumes the canonical symplectic Gram")
    target = parabolic_quadric_form(field, n)
    images = []
    for v in space.vectors:
        qw = 0
        for i in range(n):
            qw = field.add(qw, field.mul(v[2 * i], v[2 * i + 1]))
        images.append(linalg.normalize(field, (field.sqrt(qw),) + tuple(v)))
    return Embedding(space, images, target.polarization(), target,
                     kind="universal", is_minimal=False, is_universal=True)


# ---------------------------------------------------------------------------
# embedded perp identities

def check_emb_identities(e: Embedding, a: int, b: int) -> dict:
    """The double-perp identities of the embedded space for a non-collinear
    pair: (i) the images of {a,b}^perp span the f-perp of the image pair,
    (ii) {a,b}^perpperp is the preimage of the projective line through the
    images, (iii) for opposite generators N, N' of {a,b}^perp, equality
    {a,b}^perpperp = N^perp cap N'^perp holds iff dim = 2n."""
    space = e.source
    if space.collinear(a, b):
        raise ValueError("identities are stated for non-collinear pairs")
    if e.bilinear.radical().rank != 0:
        raise ValueError("identities need an embedding with nondegenerate form")
    field = e.field
    trace = space.perp([a, b])
    dperp = set(space.perp(trace))

    img_span = span(field, e.dim, [e.images[p] for p in trace])
    f_perp = orthogonal_complement(e.bilinear, [e.images[a], e.images[b]])
    identity_span = img_span == f_perp
    codim2 = img_span.rank == e.dim - 2

    line = span(field, e.dim, [e.images[a], e.images[b]])
    preim = set(e.preimage_of_subspace(line))
    identity_line = preim == dperp

    induced = space.induced_subspace(trace, name=f"{space.name}|trace")
    gens = induced.generators()
    pair = next(((g, h) for g, h in itertools.combinations(gens, 2)
                 if are_opposite(induced, g, h)), None)
    if pair is None:
        raise ValueError("no opposite generator pair in the trace space")
    n_pts = [trace[i] for i in pair[0].points]
    n2_pts = [trace[i] for i in pair[1].points]
    joint = set(space.perp(n_pts)) & set(space.perp(n2_pts))
    is_2n = e.dim == 2 * space.rank
    identity_gen = (joint == dperp) == is_2n

    return {
        "perp_span_equals_f_perp": identity_span,
        "perp_span_codim_2": codim2,
        "double_perp_is_line_preimage": identity_line,
        "gen_perp_equality": joint == dperp,
        "dim_is_2n": is_2n,
        "gen_perp_matches_dim": identity_gen,
    }
