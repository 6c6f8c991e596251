"""The characterization predicates and their cross-equivalences.

Each checker scans its quantifier range in canonical enumeration order and
stops at the first counterexample, so failing verdicts carry the smallest
witness.  Witnesses are serialized with canonical point labels, never
indices, and every one can be replayed against a freshly built space.
full_report runs the whole battery and asserts the theorem matrix: any
violated biconditional raises EquivalenceViolation.
"""

from __future__ import annotations

import itertools
import time

import numpy as np

from polarium import embed, hyperbolic, hyperplanes
from polarium.space import PolarSpace, SpaceError, are_opposite

HOLDS = "holds"
FAILS = "fails"
SKIPPED = "skipped"

PROPERTY_ORDER = ["A", "B_prime", "B_triads", "C", "D", "regular_pairs", "symplectic"]


class EquivalenceViolation(Exception):
    """A proven biconditional failed on an instance: a bug, not a verdict."""


class Verdict:
    __slots__ = ("status", "witness", "checked", "reason", "millis")

    def __init__(self, status, witness=None, checked=0, reason=None, millis=0.0):
        self.status = status
        self.witness = witness
        self.checked = checked
        self.reason = reason
        self.millis = millis

    @property
    def holds(self):
        return self.status == HOLDS

    def to_dict(self, include_millis=False):
        out = {"verdict": self.status, "checked_count": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        if include_millis:
            out["millis"] = round(self.millis, 3)
        return out

    def __repr__(self):
        return f"Verdict({self.status}, checked={self.checked})"


def _label(space, i):
    return _jsonable(space.points[i])


def _jsonable(label):
    if isinstance(label, tuple):
        return [_jsonable(x) for x in label]
    return label


def _subgen_size(space: PolarSpace) -> int:
    if space.is_form_backed:
        q = space.field.q
        return (q ** (space.rank - 1) - 1) // (q - 1)
    if space.rank == 2:
        return 1
    raise ValueError(f"{space.name}: combinatorial spaces of rank > 2 unsupported")


def _noncollinear_pairs(space: PolarSpace):
    for a in range(space.n_points):
        for b in np.flatnonzero(~space.coll[a, a + 1:]) + a + 1:
            yield a, int(b)


def contains_subgenerator(space: PolarSpace, mask) -> bool:
    r = space.rank - 1
    if r == 1:
        return bool(mask.any())
    if r == 2 and len(space.lines):
        return bool((~(space.lines_matrix & ~mask).any(axis=1)).any())
    return space.max_singular_rank(mask, stop_at=r) >= r


# ---------------------------------------------------------------------------
# property (A)

def check_A(space: PolarSpace) -> Verdict:
    """For non-collinear a, b and generator M: if M cap {a,b}^perp is a
    hyperplane of M then M must meet the hyperbolic line {a,b}^perpperp."""
    t0 = time.perf_counter()
    gm = space.generators_matrix().astype(np.int64)
    size = _subgen_size(space)
    checked = 0
    for a, b in _noncollinear_pairs(space):
        perp = space.coll[a] & space.coll[b]
        dperp = space.coll[perp].all(axis=0)
        counts = gm @ perp
        cand = counts == size
        checked += int(cand.sum())
        if not cand.any():
            continue
        meets = (gm @ dperp) > 0
        bad = cand & ~meets
        if bad.any():
            g = space.generators()[int(np.flatnonzero(bad)[0])]
            witness = {"a": _label(space, a), "b": _label(space, b),
                       "generator": [_label(space, p) for p in g.points]}
            return Verdict(FAILS, witness, checked, millis=_ms(t0))
    return Verdict(HOLDS, checked=checked, millis=_ms(t0))


def validate_A_witness(space, witness) -> bool:
    a = space.index_of(witness["a"])
    b = space.index_of(witness["b"])
    if space.collinear(a, b):
        return False
    members = tuple(sorted(space.index_of(p) for p in witness["generator"]))
    if members not in {g.points for g in space.generators()}:
        return False
    perp = space.coll[a] & space.coll[b]
    dperp = space.coll[perp].all(axis=0)
    inside = list(members)
    return (int(perp[inside].sum()) == _subgen_size(space)
            and not dperp[inside].any())


# ---------------------------------------------------------------------------
# regular pairs

def check_regular_pairs(space: PolarSpace) -> Verdict:
    """Every pair of opposite points a, b must be regular: N^perp cap N'^perp
    = {a,b}^perpperp for all opposite generators N, N' of the trace."""
    t0 = time.perf_counter()
    checked = 0
    for a, b in _noncollinear_pairs(space):
        perp = space.coll[a] & space.coll[b]
        trace = [int(i) for i in np.flatnonzero(perp)]
        dperp = space.coll[perp].all(axis=0)
        induced = space.induced_subspace(trace, name=f"{space.name}|{a},{b}")
        gens = induced.generators()
        for g in gens:
            if g.rank != space.rank - 1:
                raise SpaceError(f"{space.name}: trace of ({a},{b}) has a generator "
                                 f"of rank {g.rank}, expected {space.rank - 1}")
        for gi, gj in itertools.combinations(gens, 2):
            if not are_opposite(induced, gi, gj):
                continue
            checked += 1
            n_pts = [trace[k] for k in gi.points]
            n2_pts = [trace[k] for k in gj.points]
            joint = space.perp_mask(n_pts) & space.perp_mask(n2_pts)
            extra = joint & ~dperp
            if extra.any():
                p = int(np.flatnonzero(extra)[0])
                witness = {"a": _label(space, a), "b": _label(space, b),
                           "N": [_label(space, x) for x in n_pts],
                           "N_prime": [_label(space, x) for x in n2_pts],
                           "extra_point": _label(space, p)}
                return Verdict(FAILS, witness, checked, millis=_ms(t0))
    return Verdict(HOLDS, checked=checked, millis=_ms(t0))


def validate_regular_pairs_witness(space, witness) -> bool:
    a = space.index_of(witness["a"])
    b = space.index_of(witness["b"])
    if space.collinear(a, b):
        return False
    perp = space.coll[a] & space.coll[b]
    dperp = space.coll[perp].all(axis=0)
    n_pts = [space.index_of(p) for p in witness["N"]]
    n2_pts = [space.index_of(p) for p in witness["N_prime"]]
    if not (perp[n_pts].all() and perp[n2_pts].all()):
        return False
    extra = space.index_of(witness["extra_point"])
    joint = space.perp_mask(n_pts) & space.perp_mask(n2_pts)
    return bool(joint[extra]) and not bool(dperp[extra])


# ---------------------------------------------------------------------------
# centric triads (the implementation of property (B))

def check_centric_triads(space: PolarSpace) -> Verdict:
    """Every triple of distinct points must have a sub-generator in its
    common perp (a point when n = 2)."""
    t0 = time.perf_counter()
    n = space.n_points
    rank2 = space.rank == 2
    lines_int = space.lines_matrix.astype(np.int64) if len(space.lines) else None
    sizes = lines_int.sum(axis=1) if lines_int is not None else None
    checked = 0
    for a in range(n):
        for b in range(a + 1, n):
            pair_perp = space.coll[a] & space.coll[b]
            triple = space.coll & pair_perp[None, :]
            if rank2:
                ok = triple.any(axis=1)
            else:
                hits = lines_int @ triple.T  # line k vs point c
                ok = (hits == sizes[:, None]).any(axis=0)
            tail = ok[b + 1:]
            if tail.all():
                checked += n - b - 1
                continue
            c = int(np.flatnonzero(~tail)[0]) + b + 1
            checked += c - b
            if not rank2 and contains_subgenerator(space, triple[c]):
                raise AssertionError("fast path disagreed with generic rank search")
            witness = {"a": _label(space, a), "b": _label(space, b),
                       "c": _label(space, c)}
            return Verdict(FAILS, witness, checked, millis=_ms(t0))
    return Verdict(HOLDS, checked=checked, millis=_ms(t0))


def validate_triad_witness(space, witness) -> bool:
    idx = [space.index_of(witness[k]) for k in ("a", "b", "c")]
    if len(set(idx)) != 3:
        return False
    mask = space.perp_mask(idx)
    return not contains_subgenerator(space, mask)


# ---------------------------------------------------------------------------
# properties (B') and (C) over arising hyperplanes

def _pair_perp_matrix(space: PolarSpace):
    pairs = list(_noncollinear_pairs(space))
    mat = np.zeros((len(pairs), space.n_points), dtype=bool)
    for k, (a, b) in enumerate(pairs):
        mat[k] = space.coll[a] & space.coll[b]
    return pairs, mat


def check_B_prime(space: PolarSpace, e: embed.Embedding) -> Verdict:
    """Every arising hyperplane containing the trace of a non-collinear pair
    must contain a generator (equivalently have rank n)."""
    t0 = time.perf_counter()
    arising = hyperplanes.arising_hyperplanes(e)
    pairs, perps = _pair_perp_matrix(space)
    gm = space.generators_matrix()
    checked = 0
    for h in arising:
        mask = h.mask
        contained = ~(perps & ~mask).any(axis=1)
        checked += int(contained.sum())
        if not contained.any():
            continue
        has_gen = not (gm & ~mask).any(axis=1).all()
        if not has_gen:
            a, b = pairs[int(np.flatnonzero(contained)[0])]
            witness = {"functional": list(h.provenance[2]),
                       "a": _label(space, a), "b": _label(space, b)}
            return Verdict(FAILS, witness, checked, millis=_ms(t0))
    return Verdict(HOLDS, checked=checked, millis=_ms(t0))


def validate_B_prime_witness(space, witness, e) -> bool:
    h = hyperplanes.hyperplane_from_functional(e, tuple(witness["functional"]))
    a = space.index_of(witness["a"])
    b = space.index_of(witness["b"])
    if space.collinear(a, b):
        return False
    mask = h.mask
    perp = space.coll[a] & space.coll[b]
    if (perp & ~mask).any():
        return False
    gm = space.generators_matrix()
    return bool((gm & ~mask).any(axis=1).all())


def check_C(space: PolarSpace, e: embed.Embedding) -> Verdict:
    """Every arising hyperplane containing a trace must be singular, with
    deepest point on the hyperbolic line of the pair."""
    t0 = time.perf_counter()
    arising = hyperplanes.arising_hyperplanes(e)
    pairs, perps = _pair_perp_matrix(space)
    checked = 0
    for h in arising:
        mask = h.mask
        contained = np.flatnonzero(~(perps & ~mask).any(axis=1))
        checked += len(contained)
        if not len(contained):
            continue
        deepest = h.deepest_point()
        for k in contained:
            a, b = pairs[int(k)]
            if deepest is not None:
                dperp = space.coll[perps[int(k)]].all(axis=0)
                if dperp[deepest]:
                    continue
            witness = {"functional": list(h.provenance[2]),
                       "a": _label(space, a), "b": _label(space, b),
                       "deepest_point": None if deepest is None
                       else _label(space, deepest)}
            return Verdict(FAILS, witness, checked, millis=_ms(t0))
    return Verdict(HOLDS, checked=checked, millis=_ms(t0))


def validate_C_witness(space, witness, e) -> bool:
    h = hyperplanes.hyperplane_from_functional(e, tuple(witness["functional"]))
    a = space.index_of(witness["a"])
    b = space.index_of(witness["b"])
    if space.collinear(a, b):
        return False
    perp = space.coll[a] & space.coll[b]
    if (perp & ~h.mask).any():
        return False
    deepest = h.deepest_point()
    if deepest is None:
        return witness["deepest_point"] is None
    dperp = space.coll[perp].all(axis=0)
    return not bool(dperp[deepest])


# ---------------------------------------------------------------------------
# property (D)

def check_D(space: PolarSpace) -> Verdict:
    """Every singular hyperplane x^perp must meet every hyperbolic line."""
    t0 = time.perf_counter()
    hlines = hyperbolic.all_hyperbolic_lines(space)
    checked = 0
    for h in hlines:
        members = list(h.points)
        meets = space.coll[:, members].any(axis=1)
        checked += space.n_points
        if not meets.all():
            x = int(np.flatnonzero(~meets)[0])
            witness = {"point": _label(space, x),
                       "pair": [_label(space, h.pair[0]), _label(space, h.pair[1])],
                       "hyperbolic_line": [_label(space, p) for p in h.points]}
            return Verdict(FAILS, witness, checked, millis=_ms(t0))
    return Verdict(HOLDS, checked=checked, millis=_ms(t0))


def validate_D_witness(space, witness) -> bool:
    x = space.index_of(witness["point"])
    a = space.index_of(witness["pair"][0])
    b = space.index_of(witness["pair"][1])
    h = hyperbolic.hyperbolic_line(space, a, b)
    if [_label(space, p) for p in h.points] != witness["hyperbolic_line"]:
        return False
    return not space.coll[x, list(h.points)].any()


# ---------------------------------------------------------------------------
# symplectic verdict

def is_symplectic(space: PolarSpace) -> Verdict:
    """Compute the minimal embedding: the space is symplectic iff the
    embedding is 2n-dimensional and onto the whole target point set."""
    t0 = time.perf_counter()
    if not space.is_form_backed:
        return Verdict(SKIPPED, reason="no embedding (combinatorial space)",
                       millis=_ms(t0))
    e = embed.minimal_embedding(space)
    q = space.field.q
    target = (q ** e.dim - 1) // (q - 1)
    dim_ok = e.dim == 2 * space.rank
    onto = len(e.image_points()) == target
    if dim_ok and onto:
        return Verdict(HOLDS, checked=1, millis=_ms(t0))
    witness = {"dimension": e.dim, "required_dimension": 2 * space.rank,
               "image_points": len(e.image_points()), "target_points": target}
    return Verdict(FAILS, witness, checked=1, millis=_ms(t0))


def validate_symplectic_witness(space, witness) -> bool:
    v = is_symplectic(space)
    return v.status == FAILS and v.witness == witness


# ---------------------------------------------------------------------------
# aggregation

class PropertyReport:
    def __init__(self, space, verdicts, equivalences):
        self.space = space
        self.verdicts = verdicts
        self.equivalences = equivalences

    def to_dict(self, include_millis=False):
        return {
            "space": self.space.name,
            "points": self.space.n_points,
            "lines": len(self.space.lines),
            "rank": self.space.rank,
            "properties": {k: v.to_dict(include_millis)
                           for k, v in sorted(self.verdicts.items())},
            "equivalences": self.equivalences,
        }


def _assert_equiv(name, space, left, right, record):
    if left.status == SKIPPED or right.status == SKIPPED:
        record.append({"name": name, "status": "skipped"})
        return
    if left.holds != right.holds:
        raise EquivalenceViolation(
            f"{space.name}: {name} violated ({left.status} vs {right.status}); "
            f"witnesses {left.witness} / {right.witness}")
    record.append({"name": name, "status": "ok"})


def full_report(space: PolarSpace) -> PropertyReport:
    """Run every checker and assert the biconditionals between the properties."""
    verdicts = {}
    verdicts["A"] = check_A(space)
    verdicts["regular_pairs"] = check_regular_pairs(space)
    verdicts["B_triads"] = check_centric_triads(space)
    if space.is_form_backed:
        nat = embed.natural_embedding(space)
        verdicts["B_prime"] = check_B_prime(space, nat)
        verdicts["C"] = check_C(space, nat)
    else:
        reason = "no embedding (combinatorial space)"
        verdicts["B_prime"] = Verdict(SKIPPED, reason=reason)
        verdicts["C"] = Verdict(SKIPPED, reason=reason)
    verdicts["D"] = check_D(space)
    verdicts["symplectic"] = is_symplectic(space)

    equivalences = []
    _assert_equiv("A<=>regular_pairs", space, verdicts["A"],
                  verdicts["regular_pairs"], equivalences)
    _assert_equiv("B_triads<=>B_prime", space, verdicts["B_triads"],
                  verdicts["B_prime"], equivalences)
    sym = verdicts["symplectic"]
    ab = Verdict(HOLDS if (verdicts["A"].holds and verdicts["B_triads"].holds)
                 else FAILS)
    _assert_equiv("A&B<=>symplectic", space, ab, sym, equivalences)
    _assert_equiv("C<=>symplectic", space, verdicts["C"], sym, equivalences)
    _assert_equiv("D<=>symplectic", space, verdicts["D"], sym, equivalences)
    return PropertyReport(space, verdicts, equivalences)


def validate_witness(space: PolarSpace, prop: str, witness: dict) -> bool:
    """Replay a serialized failure witness against a freshly built space."""
    if prop == "A":
        return validate_A_witness(space, witness)
    if prop == "regular_pairs":
        return validate_regular_pairs_witness(space, witness)
    if prop == "B_triads":
        return validate_triad_witness(space, witness)
    if prop in ("B_prime", "C"):
        e = embed.natural_embedding(space)
        if prop == "B_prime":
            return validate_B_prime_witness(space, witness, e)
        return validate_C_witness(space, witness, e)
    if prop == "D":
        return validate_D_witness(space, witness)
    if prop == "symplectic":
        return validate_symplectic_witness(space, witness)
    raise ValueError(f"unknown property {prop!r}")


def _ms(t0):
    return (time.perf_counter() - t0) * 1000.0
