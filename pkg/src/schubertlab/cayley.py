"""Pointwise geometry of a general tensor h in V1* x V2* x V3* (dim V_i = 4).

S3 is the set of pairs of lines (l1, l2) with h(l1, l2, .) = 0; its
projections are determinantal quartic surfaces.  Cayley's correspondence
trades one line of an incidence pair for a line on the third axis; three
such trades return to S3 and give the triality automorphism.  Pairs of
S3-points determine plane triples (T1, T2, T3) on which h vanishes.

Axes are numbered 1, 2, 3.  All computations are exact over the tensor's field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .linalg import ExactMatrix, PrimeField, normalize_projective, span_dim

AXES = (1, 2, 3)
# triality: the axis kept when the free axis is the key
TRIALITY_KEEP = {3: 1, 2: 3, 1: 2}


class CayleyError(ValueError):
    """Precondition violated (e.g. a pair not on the incidence surface)."""


class NonGeneralError(RuntimeError):
    """The tensor is not general at this point; ``witness`` records where."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class ExhaustionError(RuntimeError):
    pass


@dataclass(frozen=True)
class ProjPoint:
    """A line in a 4-space, scaled so its first nonzero coordinate is 1."""

    coords: tuple

    @classmethod
    def of(cls, field, v: Sequence) -> "ProjPoint":
        return cls(normalize_projective(field, v))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


class Tensor444:
    """``h[i][j][k]``: i, j, k index dual bases of V1, V2, V3."""

    def __init__(self, field, entries):
        self.field = field
        self.h = [[[field(entries[i][j][k]) for k in range(4)] for j in range(4)] for i in range(4)]

    @classmethod
    def random(cls, field, rng: random.Random) -> "Tensor444":
        return cls(field, [[[field.random(rng) for _ in range(4)] for _ in range(4)] for _ in range(4)])

    @classmethod
    def rank_one(cls, field, a, b, c) -> "Tensor444":
        return cls(field, [[[a[i] * b[j] * c[k] for k in range(4)] for j in range(4)] for i in range(4)])

    def entry(self, idx: dict[int, int]):
        return self.h[idx[1]][idx[2]][idx[3]]

    def contract(self, vectors: dict[int, Sequence]) -> list:
        """Contract h with vectors on two axes; returns a vector on the third."""
        (free,) = [a for a in AXES if a not in vectors]
        f = self.field
        a, b = [ax for ax in AXES if ax != free]
        out = []
        for t in range(4):
            s = 0
            for x, y in product(range(4), repeat=2):
                idx = {free: t, a: x, b: y}
                s += self.entry(idx) * vectors[a][x] * vectors[b][y]
            out.append(f(s))
        return out

    def evaluate(self, x, y, z):
        f = self.field
        return f(sum(self.h[i][j][k] * x[i] * y[j] * z[k]
                     for i in range(4) for j in range(4) for k in range(4)))


def slice_matrix(h: Tensor444, axis: int, point: Sequence) -> ExactMatrix:
    """Contract h with ``point`` along ``axis``; rows and columns follow the
    remaining axes in increasing order."""
    if axis not in AXES:
        raise CayleyError(f"axis must be 1, 2 or 3, got {axis}")
    f = h.field
    a, b = [ax for ax in AXES if ax != axis]
    rows = []
    for x in range(4):
        row = []
        for y in range(4):
            s = 0
            for t in range(4):
                s += h.entry({axis: t, a: x, b: y}) * point[t]
            row.append(f(s))
        rows.append(row)
    return ExactMatrix(f, rows)


def quartic_value(h: Tensor444, axis: int, point: Sequence):
    return slice_matrix(h, axis, point).det()


def is_general(h: Tensor444, rng: random.Random, tries: int = 4) -> bool:
    """False if some axis has no invertible slice at ``tries`` random points
    (identically vanishing quartic, e.g. h of low rank)."""
    f = h.field
    for axis in AXES:
        if not any(slice_matrix(h, axis, [f.random(rng) for _ in range(4)]).rank() == 4
                   for _ in range(tries)):
            return False
    return True


# ---------------------------------------------------------------------------
# incidence pairs


@dataclass(frozen=True)
class Incidence:
    """Lines on two axes with h vanishing on line x line x (free axis)."""

    free: int
    lines: tuple[tuple[int, ProjPoint], ...]

    @classmethod
    def make(cls, free: int, lines: dict[int, ProjPoint]) -> "Incidence":
        return cls(free, tuple(sorted(lines.items())))

    def line(self, axis: int) -> ProjPoint:
        return dict(self.lines)[axis]


def on_incidence(h: Tensor444, state: Incidence) -> bool:
    return all(x == 0 for x in h.contract(dict(state.lines)))


def s3_point(l1: ProjPoint, l2: ProjPoint) -> Incidence:
    return Incidence.make(3, {1: l1, 2: l2})


def _unique_kernel(h: Tensor444, keep_axis: int, keep: ProjPoint, target: int) -> list:
    """Vectors x on ``target`` with h(keep, V_other, x) = 0."""
    m = slice_matrix(h, keep_axis, keep)
    a, _ = [ax for ax in AXES if ax != keep_axis]
    # m rows follow axis a; the target axis is a (left kernel) or b (right kernel)
    return m.left_kernel() if target == a else m.kernel()


def swap_step(h: Tensor444, state: Incidence, keep_axis: int) -> Incidence:
    """Keep the line on ``keep_axis``; replace the other line by the unique
    line on the free axis.  An involution on incidence pairs."""
    if keep_axis == state.free or keep_axis not in dict(state.lines):
        raise CayleyError(f"axis {keep_axis} carries no line in {state}")
    if not on_incidence(h, state):
        raise CayleyError("state is not on its incidence surface")
    keep = state.line(keep_axis)
    (dropped,) = [a for a, _ in state.lines if a != keep_axis]
    ker = _unique_kernel(h, keep_axis, keep, state.free)
    if len(ker) != 1:
        raise NonGeneralError(
            f"kernel of the slice at the kept line has dimension {len(ker)}",
            {"keep_axis": keep_axis, "keep": list(keep), "kernel": [list(v) for v in ker]})
    new = Incidence.make(dropped, {keep_axis: keep, state.free: ProjPoint.of(h.field, ker[0])})
    if not on_incidence(h, new):
        raise AssertionError("produced line fails the exact vanishing re-check")
    return new


def next_line(h: Tensor444, l1: ProjPoint, l2: ProjPoint) -> ProjPoint:
    """The unique l3 with h(l1, V2, l3) = 0, given (l1, l2) on S3."""
    if not on_incidence(h, s3_point(l1, l2)):
        raise CayleyError("(l1, l2) is not on S3")
    return swap_step(h, s3_point(l1, l2), keep_axis=1).line(3)


def triality_step(h: Tensor444, state: Incidence) -> Incidence:
    """One step of l1 l2 V3 -> l1 V2 l3 -> V1 l2' l3 -> l1' l2' V3."""
    return swap_step(h, state, TRIALITY_KEEP[state.free])


def triality(h: Tensor444, l1: ProjPoint, l2: ProjPoint) -> tuple[ProjPoint, ProjPoint]:
    state = s3_point(l1, l2)
    for _ in range(3):
        state = triality_step(h, state)
    if state.free != 3:
        raise AssertionError("three triality steps must return to S3")
    return state.line(1), state.line(2)


# ---------------------------------------------------------------------------
# sampling S3


def _interpolate(field, values: Sequence) -> list:
    """Coefficients (low to high) of the polynomial through (t, values[t]), t = 0..n-1."""
    n = len(values)
    coeffs = [field(0)] * n
    for i, yi in enumerate(values):
        basis = [field(1)]
        denom = field(1)
        for j in range(n):
            if j == i:
                continue
            basis = [field(c) for c in
                     [(-j) * basis[0]] + [basis[t - 1] - j * basis[t] for t in range(1, len(basis))] + [basis[-1]]]
            denom = field(denom * (i - j))
        scale = field(yi * field.inv(denom))
        coeffs = [field(c + scale * b) for c, b in zip(coeffs, basis)]
    return coeffs


def _horner(field, coeffs: Sequence, t: int):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * t + c) % field.p
    return acc


def points_on_line(h: Tensor444, a: Sequence, b: Sequence) -> list[ProjPoint]:
    """Points of the line <a, b> in P(V1) lying on the quartic Q1."""
    f = h.field
    if not isinstance(f, PrimeField):
        raise CayleyError("line enumeration needs a prime field")
    pts = lambda t: [f(x + t * y) for x, y in zip(a, b)]
    coeffs = _interpolate(f, [quartic_value(h, 1, pts(t)) for t in range(5)])
    out = [pts(t) for t in range(f.p) if _horner(f, coeffs, t) == 0]
    if quartic_value(h, 1, b) == 0:
        out.append(list(b))
    return [ProjPoint.of(f, v) for v in out if any(x != 0 for x in v)]


def find_surface_points(h: Tensor444, count: int, seed, max_lines: int | None = None) -> list[Incidence]:
    """``count`` distinct S3-points from quartic roots on random lines of P(V1).

    Only roots whose slice has rank exactly 3 are used; each point is
    re-verified exactly.  Deterministic in (field, h, seed).
    """
    f = h.field
    if not isinstance(f, PrimeField):
        raise CayleyError("sampling needs a prime field")
    rng = random.Random(f"{seed}/surface-points")
    if not is_general(h, rng):
        raise NonGeneralError("tensor is not general: some quartic vanishes identically")
    budget = max_lines if max_lines is not None else 40 * count + 100
    found: list[Incidence] = []
    seen: set[ProjPoint] = set()
    for _ in range(budget):
        a = [f.random(rng) for _ in range(4)]
        b = [f.random(rng) for _ in range(4)]
        if span_dim(f, [a, b]) < 2:
            continue
        for l1 in points_on_line(h, a, b):
            if l1 in seen:
                continue
            m = slice_matrix(h, 1, l1)
            if m.rank() != 3:
                continue
            (v,) = m.left_kernel()
            state = s3_point(l1, ProjPoint.of(f, v))
            if not on_incidence(h, state):
                raise AssertionError("sampled pair fails the exact S3 check")
            seen.add(l1)
            found.append(state)
            if len(found) == count:
                return found
    raise ExhaustionError(f"found {len(found)} of {count} S3-points within {budget} lines")


# ---------------------------------------------------------------------------
# pairs of S3-points and plane triples


@dataclass(frozen=True)
class PlaneTriple:
    t1: tuple[tuple, tuple]
    t2: tuple[tuple, tuple]
    t3: tuple[tuple, tuple]

    def planes(self) -> dict[int, tuple[tuple, tuple]]:
        return {1: self.t1, 2: self.t2, 3: self.t3}


def vanishes_on_triple(h: Tensor444, triple: PlaneTriple) -> bool:
    """All 8 equations h(a, b, c) = 0 over basis vectors of T1, T2, T3."""
    return all(h.evaluate(a, b, c) == 0 for a in triple.t1 for b in triple.t2 for c in triple.t3)


def triple_from_pair(h: Tensor444, z: tuple[Incidence, Incidence]) -> PlaneTriple:
    f = h.field
    p, q = z
    for s in (p, q):
        if s.free != 3 or not on_incidence(h, s):
            raise CayleyError("both points must lie on S3")
    if p.line(1) == q.line(1) or p.line(2) == q.line(2):
        raise CayleyError("the two points share a line; z is not generic")
    t1 = (tuple(p.line(1)), tuple(q.line(1)))
    t2 = (tuple(p.line(2)), tuple(q.line(2)))
    image = [h.contract({1: a, 2: b}) for a in t1 for b in t2]
    rank = span_dim(f, image)
    if rank != 2:
        raise NonGeneralError(f"T1 x T2 -> V3* has rank {rank}, expected 2",
                              {"t1": t1, "t2": t2})
    t3 = ExactMatrix(f, image).kernel()
    triple = PlaneTriple(t1, t2, (tuple(t3[0]), tuple(t3[1])))
    if not vanishes_on_triple(h, triple):
        raise AssertionError("h does not vanish on the constructed triple")
    return triple


@dataclass
class BaseLocus:
    rank: int
    points: list[tuple[ProjPoint, ProjPoint]]
    curve_component: bool


def pencil_base_points(h: Tensor444, triple: PlaneTriple) -> BaseLocus:
    """Rank of V3 -> T1* x T2*, and the base points of its image pencil on
    P(T1) x P(T2), found by enumerating P^1(F_p) for the first factor."""
    f = h.field
    if not isinstance(f, PrimeField):
        raise CayleyError("base-point enumeration needs a prime field")
    t1, t2 = triple.t1, triple.t2
    e3 = [[int(i == k) for i in range(4)] for k in range(4)]
    # columns: forms B_v(x, y) = h(x, y, v) in T1, T2 coordinates
    rows = [[h.evaluate(a, b, v) for v in e3] for a in t1 for b in t2]
    m = ExactMatrix(f, rows)
    rank = m.rank()
    cols = m.image()  # each is a 4-vector indexed by (a, b) pairs
    forms = [[[c[0], c[1]], [c[2], c[3]]] for c in cols]
    pts: list[tuple[ProjPoint, ProjPoint]] = []
    curve = False
    for x in [(1, s) for s in range(f.p)] + [(0, 1)]:
        lin = [[f(x[0] * B[0][j] + x[1] * B[1][j]) for j in range(2)] for B in forms]
        km = ExactMatrix(f, lin, 2).kernel() if lin else [[1, 0], [0, 1]]
        if len(km) == 2:
            curve = True
            continue
        if len(km) == 1:
            y = km[0]
            v1 = [f(x[0] * t1[0][i] + x[1] * t1[1][i]) for i in range(4)]
            v2 = [f(y[0] * t2[0][i] + y[1] * t2[1][i]) for i in range(4)]
            pts.append((ProjPoint.of(f, v1), ProjPoint.of(f, v2)))
    return BaseLocus(rank, pts, curve)


def roundtrip_ok(h: Tensor444, z: tuple[Incidence, Incidence], triple: PlaneTriple) -> bool:
    """Rank exactly 2 and the pencil's base points are exactly the two points of z."""
    locus = pencil_base_points(h, triple)
    want = {(s.line(1), s.line(2)) for s in z}
    return locus.rank == 2 and not locus.curve_component and set(locus.points) == want and len(locus.points) == 2
