"""Reflexive sesquilinear and quadratic forms over finite fields.

A Form holds Gram data: a Gram matrix for alternating, symmetric and
Hermitian forms, an upper-triangular coefficient matrix for quadratic
forms.  Bilinear evaluation is linear in the first argument and (for
Hermitian forms) conjugate-linear in the second, so the standard Hermitian
form reads sum x_i * conj(y_i).  The Witt index is computed by splitting
off hyperbolic pairs and recursing on their perp.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from polarium.gf import Field
from polarium import linalg
from polarium.linalg import Subspace, nullspace, span

ALTERNATING = "alternating"
SYMMETRIC = "symmetric"
HERMITIAN = "hermitian"
QUADRATIC = "quadratic"

BILINEAR_KINDS = (ALTERNATING, SYMMETRIC, HERMITIAN)


class Form:
    """A reflexive form on GF(q)^d, given by its Gram/coefficient matrix."""

    def __init__(self, kind: str, field: Field, matrix):
        self.kind = kind
        self.field = field
        self.matrix = tuple(tuple(r) for r in matrix)
        self.dim = len(self.matrix)
        for r in self.matrix:
            if len(r) != self.dim:
                raise ValueError("Gram data must be square")
        self._validate()

    def _validate(self):
        f, G = self.field, self.matrix
        if self.kind == ALTERNATING:
            for i in range(self.dim):
                if G[i][i] != 0:
                    raise ValueError("alternating Gram matrix must have zero diagonal")
                for j in range(self.dim):
                    if G[j][i] != f.neg(G[i][j]):
                        raise ValueError("alternating Gram matrix must be antisymmetric")
        elif self.kind == SYMMETRIC:
            for i in range(self.dim):
                for j in range(self.dim):
                    if G[j][i] != G[i][j]:
                        raise ValueError("symmetric Gram matrix required")
        elif self.kind == HERMITIAN:
            if not f.has_conjugation:
                raise ValueError("Hermitian forms need a field with conjugation")
            for i in range(self.dim):
                for j in range(self.dim):
                    if G[j][i] != f.conjugate(G[i][j]):
                        raise ValueError("Gram matrix must equal its conjugate transpose")
        elif self.kind == QUADRATIC:
            for i in range(self.dim):
                for j in range(i):
                    if G[i][j] != 0:
                        raise ValueError("quadratic coefficient matrix must be upper-triangular")
        else:
            raise ValueError(f"unknown form kind {self.kind!r}")

    # -- evaluation ----------------------------------------------------------

    def bilinear(self, x, y) -> int:
        """f(x, y); for quadratic forms this is the polarization value."""
        if self.kind == QUADRATIC:
            return self.polarization().bilinear(x, y)
        f = self.field
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector dimension mismatch")
        yy = tuple(f.conjugate(c) for c in y) if self.kind == HERMITIAN else y
        acc = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.matrix[i]
            for j, yj in enumerate(yy):
                if yj and row[j]:
                    acc = f.add(acc, f.mul(f.mul(xi, row[j]), yj))
        return acc

    def quadratic(self, x) -> int:
        if self.kind != QUADRATIC:
            raise ValueError("quadratic evaluation on a non-quadratic form")
        f = self.field
        if len(x) != self.dim:
            raise ValueError("vector dimension mismatch")
        acc = 0
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.matrix[i]
            for j in range(i, self.dim):
                if x[j] and row[j]:
                    acc = f.add(acc, f.mul(f.mul(xi, row[j]), x[j]))
        return acc

    def vanishes(self, x) -> bool:
        """Point membership test: singular (quadratic) or isotropic (bilinear)."""
        if self.kind == QUADRATIC:
            return self.quadratic(x) == 0
        return self.bilinear(x, x) == 0

    # -- derived forms ---------------------------------------------------------

    def polarization(self) -> Form:
        """f_q(x,y) = q(x+y) - q(x) - q(y); alternating iff char 2."""
        if self.kind != QUADRATIC:
            raise ValueError("polarization applies to quadratic forms")
        f, A, d = self.field, self.matrix, self.dim
        G = [[0] * d for _ in range(d)]
        for i in range(d):
            G[i][i] = f.mul(2 % f.p, A[i][i])
            for j in range(i + 1, d):
                G[i][j] = A[i][j]
                G[j][i] = A[i][j]
        kind = ALTERNATING if f.p == 2 else SYMMETRIC
        return Form(kind, f, G)

    def radical(self) -> Subspace:
        """Rad(f) = V^perp, the kernel of the Gram matrix."""
        if self.kind == QUADRATIC:
            return self.polarization().radical()
        # v in radical  <=>  v^T G = 0, i.e. v in kernel of G^T rows
        cols = tuple(tuple(self.matrix[i][j] for i in range(self.dim))
                     for j in range(self.dim))
        return nullspace(self.field, cols, self.dim)

    def quadratic_radical(self) -> Subspace:
        """Rad(q): the singular vectors inside Rad(f_q) (a subspace in char 2)."""
        if self.kind != QUADRATIC:
            raise ValueError("Rad(q) applies to quadratic forms")
        rad = self.radical()
        singular = [v for v in linalg.enumerate_points(rad) if self.quadratic(v) == 0]
        return span(self.field, self.dim, singular)

    def is_nondegenerate(self) -> bool:
        if self.kind == QUADRATIC:
            return self.quadratic_radical().rank == 0
        return self.radical().rank == 0

    def __repr__(self):
        return f"Form({self.kind}, GF({self.field.q}), dim={self.dim})"


# ---------------------------------------------------------------------------
# Witt index

def _first_vanishing_point(form: Form):
    for v in linalg.proj_points(form.field, form.dim):
        if form.vanishes(v):
            return v
    return None


def orthogonal_complement(form: Form, vectors):
    """Basis of the common perp of the given vectors w.r.t. the (polarized) form."""
    f = form.field
    bil = form.polarization() if form.kind == QUADRATIC else form
    rows = []
    for v in vectors:
        # f(v, w) = 0 as a linear condition on w
        row = []
        for j in range(form.dim):
            e = tuple(1 if i == j else 0 for i in range(form.dim))
            row.append(bil.bilinear(v, e))
        if bil.kind == HERMITIAN:
            row = [f.conjugate(c) for c in row]
        rows.append(tuple(row))
    return nullspace(f, rows, form.dim)


def _restrict(form: Form, basis_rows) -> Form:
    """The form induced on the span of the given (independent) vectors."""
    f, m = form.field, len(basis_rows)
    if form.kind == QUADRATIC:
        bil = form.polarization()
        A = [[0] * m for _ in range(m)]
        for i in range(m):
            A[i][i] = form.quadratic(basis_rows[i])
            for j in range(i + 1, m):
                A[i][j] = bil.bilinear(basis_rows[i], basis_rows[j])
        return Form(QUADRATIC, f, A)
    G = [[form.bilinear(basis_rows[i], basis_rows[j]) for j in range(m)]
         for i in range(m)]
    return Form(form.kind, f, G)


def _hyperbolic_partner(form: Form, v):
    """A vanishing w with f(v, w) != 0, completing v to a hyperbolic pair."""
    f = form.field
    bil = form.polarization() if form.kind == QUADRATIC else form
    w0 = None
    for j in range(form.dim):
        e = tuple(1 if i == j else 0 for i in range(form.dim))
        if bil.bilinear(v, e):
            w0 = e
            break
    if w0 is None:
        return None  # v lies in the radical of the bilinear form
    c = bil.bilinear(v, w0)
    if form.kind == ALTERNATING:
        return w0
    if form.kind == QUADRATIC:
        mu = f.neg(f.div(form.quadratic(w0), c))
        return linalg.vec_add(f, w0, linalg.vec_scale(f, mu, v))
    if form.kind == HERMITIAN:
        s = form.bilinear(w0, w0)
        t = next(t for t in f.elements if f.add(t, f.conjugate(t)) == f.neg(s))
        mu = f.div(t, c)
        return linalg.vec_add(f, w0, linalg.vec_scale(f, mu, v))
    raise ValueError(f"no hyperbolic splitting for kind {form.kind}")


def witt_index(form: Form) -> int:
    """Common rank of maximal totally isotropic (singular) subspaces.

    Splits off one hyperbolic pair at a time and recurses on its perp;
    anisotropic forms return 0.  Requires a nondegenerate input.
    """
    if not form.is_nondegenerate():
        raise ValueError("Witt index of a degenerate form")
    current = form
    index = 0
    while current.dim > 0:
        v = _first_vanishing_point(current)
        if v is None:
            return index
        w = _hyperbolic_partner(current, v)
        if w is None:
            raise AssertionError("vanishing vector stuck in the radical")
        perp = orthogonal_complement(current, [v, w])
        current = _restrict(current, perp.rows)
        index += 1
    return index


# ---------------------------------------------------------------------------
# canonical catalog forms

def symplectic_form(field: Field, n: int) -> Form:
    """f(x,y) = sum x_{2i} y_{2i+1} - x_{2i+1} y_{2i} on GF(q)^(2n)."""
    d = 2 * n
    G = [[0] * d for _ in range(d)]
    for i in range(n):
        G[2 * i][2 * i + 1] = 1
        G[2 * i + 1][2 * i] = field.neg(1)
    return Form(ALTERNATING, field, G)


def parabolic_quadric_form(field: Field, n: int) -> Form:
    """q(x) = x_0^2 + sum x_{2i-1} x_{2i} on GF(q)^(2n+1)."""
    d = 2 * n + 1
    A = [[0] * d for _ in range(d)]
    A[0][0] = 1
    for i in range(n):
        A[2 * i + 1][2 * i + 2] = 1
    return Form(QUADRATIC, field, A)


def hyperbolic_quadric_form(field: Field, n: int) -> Form:
    """q(x) = sum x_{2i} x_{2i+1} on GF(q)^(2n)."""
    d = 2 * n
    A = [[0] * d for _ in range(d)]
    for i in range(n):
        A[2 * i][2 * i + 1] = 1
    return Form(QUADRATIC, field, A)


def elliptic_quadric_form(field: Field, n: int) -> Form:
    """q(x) = g(x_0, x_1) + sum pairs, with g the first irreducible binary quadric."""
    d = 2 * n + 2
    A = [[0] * d for _ in range(d)]
    A[0][0] = 1
    A[0][1] = 1
    A[1][1] = _first_anisotropic_coefficient(field)
    for i in range(1, n + 1):
        A[2 * i][2 * i + 1] = 1
    return Form(QUADRATIC, field, A)


def _first_anisotropic_coefficient(field: Field) -> int:
    """First c (in element order) such that x^2 + x + c has no root."""
    for c in field.elements:
        if all(field.add(field.add(field.mul(x, x), x), c) != 0 for x in field.elements):
            return c
    raise ValueError(f"no irreducible binary quadric over GF({field.q})")


def hermitian_form(field: Field, d: int) -> Form:
    """f(x,y) = sum x_i conj(y_i) on GF(q)^d, q a square."""
    G = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    return Form(HERMITIAN, field, G)


@dataclass(frozen=True)
class CanonicalSpaceSpec:
    """Catalog key for a polar space: family, projective dimension, field order.

    Families: W (symplectic), Q (parabolic quadric), Q+ (hyperbolic), Q-
    (elliptic), H (Hermitian), grid, payne, dual.  Derived families carry
    their base spec in `inner`.
    """

    family: str
    proj_dim: int | None = None
    order: int | None = None
    inner: "CanonicalSpaceSpec | None" = None

    def __str__(self):
        if self.family == "grid":
            return f"grid({self.proj_dim})"
        if self.family == "payne":
            return f"P({self.inner})"
        if self.family == "dual":
            return f"dual({self.inner})"
        return f"{self.family}({self.proj_dim},{self.order})"


def _field_for_order(q: int, max_order: int) -> Field:
    for p in range(2, q + 1):
        if is_prime_power(q, p):
            k = 0
            t = q
            while t > 1:
                t //= p
                k += 1
            return Field(p, k, max_order=max_order)
    raise ValueError(f"{q} is not a prime power")


def is_prime_power(q: int, p: int) -> bool:
    from polarium.gf import is_prime
    if not is_prime(p):
        return False
    while q % p == 0:
        q //= p
    return q == 1


def canonical_form(spec: CanonicalSpaceSpec, max_order: int = 256) -> Form:
    """The canonical form of a classical family member, per the fixed Gram data."""
    fam, pd, q = spec.family, spec.proj_dim, spec.order
    field = _field_for_order(q, max_order)
    if fam == "W":
        if pd % 2 == 0:
            raise ValueError("W requires odd projective dimension (even ambient)")
        return symplectic_form(field, (pd + 1) // 2)
    if fam == "Q":
        if pd % 2 == 1:
            raise ValueError("parabolic quadrics need even projective dimension")
        return parabolic_quadric_form(field, pd // 2)
    if fam == "Q+":
        if pd % 2 == 0:
            raise ValueError("hyperbolic quadrics need odd projective dimension")
        return hyperbolic_quadric_form(field, (pd + 1) // 2)
    if fam == "Q-":
        if pd % 2 == 0:
            raise ValueError("elliptic quadrics need odd projective dimension")
        return elliptic_quadric_form(field, (pd + 1) // 2 - 1)
    if fam == "H":
        return hermitian_form(field, pd + 1)
    raise ValueError(f"{fam} is not a classical form family")
