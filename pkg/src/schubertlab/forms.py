"""Pointwise checks on a 2-form of rank 8 and a 3-form on a 9-dimensional space.

Covers the Sp(omega)-orbit of a 6-space (rank of the restricted form), the
contraction map wedge^3 T -> T, the dimension of T ^ Lambda for hyperplanes
Lambda of wedge^2 T_4, the graph-subspace identity relating a 3-form on V_10
to forms on V_9, and vanishing of the pair (omega, Omega) on 5-spaces.

Everything is exact.  Sampling happens over GF(p), with per-sample seeds
derived from a master seed so every report is reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import combinations
from math import comb
from typing import Sequence

from . import exterior as ext
from .linalg import ExactMatrix, random_full_rank, span_dim

DEFAULT_PRIME = 1009
V9 = 9


def sample_rng(seed: int, tag: str, i: int) -> random.Random:
    """Independent stream for sample ``i`` of suite ``tag``."""
    return random.Random(f"{seed}/{tag}/{i}")


class FormError(ValueError):
    """Dimension or containment precondition violated."""


class InconsistentFormError(RuntimeError):
    """An outcome the rank-8 hypothesis rules out was observed."""


@dataclass
class Subspace:
    """Column span of ``basis`` (a list of ambient vectors)."""

    field: object
    basis: list[list]

    def __post_init__(self):
        if self.basis and span_dim(self.field, self.basis) != len(self.basis):
            raise FormError("subspace basis is not linearly independent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient(self) -> int:
        return len(self.basis[0]) if self.basis else 0

    @classmethod
    def coordinate(cls, field, n: int, indices: Sequence[int]) -> "Subspace":
        """Span of standard basis vectors, 1-based as in ``e_1, ..., e_n``."""
        return cls(field, [[int(j == i - 1) for j in range(n)] for i in indices])

    @classmethod
    def random(cls, field, n: int, k: int, rng: random.Random) -> "Subspace":
        return cls(field, random_full_rank(field, k, n, rng).rows)

    def matrix(self) -> ExactMatrix:
        """``ambient x dim`` matrix whose columns are the basis."""
        return ExactMatrix.from_columns(self.field, self.basis)

    def contains(self, other: "Subspace") -> bool:
        return span_dim(self.field, self.basis + other.basis) == self.dim


@dataclass
class SkewForm:
    """Skew-symmetric bilinear form ``omega(x, y) = x^T A y``."""

    field: object
    matrix: ExactMatrix

    def __post_init__(self):
        a = self.matrix
        n = a.nrows
        if a.ncols != n or any(a[i, j] != self.field(-a[j, i]) for i in range(n) for j in range(n)):
            raise FormError("matrix is not skew-symmetric")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    @classmethod
    def from_pairs(cls, field, n: int, pairs: Sequence[tuple[int, int]]) -> "SkewForm":
        """Sum of ``e_i^* ^ e_j^*`` over 1-based pairs."""
        rows = [[0] * n for _ in range(n)]
        for i, j in pairs:
            rows[i - 1][j - 1] += 1
            rows[j - 1][i - 1] -= 1
        return cls(field, ExactMatrix(field, rows))

    @classmethod
    def normal_form(cls, field) -> "SkewForm":
        """``e5^e6 + e4^e7 + e3^e8 + e2^e9`` on V_9; kernel spanned by e_1."""
        return cls.from_pairs(field, V9, [(5, 6), (4, 7), (3, 8), (2, 9)])

    @classmethod
    def random(cls, field, rng: random.Random, n: int = V9) -> "SkewForm":
        """Uniform skew form of maximal rank (lower-rank draws are rejected)."""
        target = n - n % 2
        while True:
            rows = [[0] * n for _ in range(n)]
            for i, j in combinations(range(n), 2):
                x = field.random(rng)
                rows[i][j], rows[j][i] = x, field(-x)
            form = cls(field, ExactMatrix(field, rows))
            if form.rank() == target:
                return form

    def rank(self) -> int:
        return self.matrix.rank()

    def kernel(self) -> list[list]:
        return self.matrix.kernel()

    def as_multi(self) -> ext.Multi:
        a = self.matrix
        return {(i, j): a[i, j] for i, j in combinations(range(self.dim), 2) if a[i, j] != 0}

    def restricted(self, basis: Sequence[Sequence]) -> ExactMatrix:
        b = ExactMatrix.from_columns(self.field, basis)
        return b.T @ self.matrix @ b


@dataclass
class ThreeForm:
    field: object
    dim: int
    coeffs: ext.Multi = dc_field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for idx, c in self.coeffs.items():
            if len(idx) != 3 or len(set(idx)) != 3 or max(idx) >= self.dim:
                raise FormError(f"bad 3-form index {idx}")
            order = sorted(range(3), key=lambda t: idx[t])
            key = tuple(idx[t] for t in order)
            sign = _perm_parity(order)
            clean[key] = self.field(clean.get(key, 0) + sign * c)
        self.coeffs = {k: v for k, v in clean.items() if v != 0}

    @classmethod
    def random(cls, field, rng: random.Random, n: int = V9, support=None) -> "ThreeForm":
        idx = list(combinations(range(n), 3))
        if support is not None:
            idx = [t for t in idx if support(t)]
        return cls(field, n, {t: field.random(rng) for t in idx})

    def __call__(self, x, y, z):
        return ext.evaluate(self.field, self.coeffs, [x, y, z])

    def restrict(self, basis: Sequence[Sequence]) -> ext.Multi:
        return ext.restrict(self.field, self.coeffs, basis, 3)

    def vanishes_on(self, basis: Sequence[Sequence]) -> bool:
        return not self.restrict(basis)


def _perm_parity(order: Sequence[int]) -> int:
    inv = sum(1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j])
    return -1 if inv % 2 else 1


# ---------------------------------------------------------------------------
# orbits and the contraction map


def restriction_rank(omega: SkewForm, v6: Subspace) -> int:
    """Rank of omega restricted to a 6-space: 6, 4 or 2 for the three orbits."""
    if v6.dim != 6:
        raise FormError(f"expected a 6-dimensional subspace, got dimension {v6.dim}")
    r = omega.restricted(v6.basis).rank()
    if r == 0:
        raise InconsistentFormError("omega vanishes on a 6-space; omega cannot have rank 8")
    return r


def orbit_index(rank: int) -> int:
    return (6 - rank) // 2


def contraction_matrix(field, w: ExactMatrix) -> ExactMatrix:
    """Matrix of ``wedge^3 T -> T``, ``x^y^z -> w(x,y)z - w(x,z)y + w(y,z)x``.

    Columns follow lexicographic triples of T's basis; ``w`` is the Gram
    matrix of the restricted 2-form.
    """
    m = w.nrows
    cols = []
    for i, j, k in combinations(range(m), 3):
        col = [0] * m
        col[k] += w[i, j]
        col[j] -= w[i, k]
        col[i] += w[j, k]
        cols.append([field(x) for x in col])
    return ExactMatrix.from_columns(field, cols)


def contraction_kernel_dim(omega: SkewForm, t: Subspace) -> int:
    if t.dim != 6:
        raise FormError(f"expected a 6-dimensional subspace, got dimension {t.dim}")
    m = contraction_matrix(omega.field, omega.restricted(t.basis))
    return m.ncols - m.rank()


def contraction_image_dim(omega: SkewForm, t: Subspace) -> int:
    return contraction_matrix(omega.field, omega.restricted(t.basis)).rank()


# ---------------------------------------------------------------------------
# T ^ Lambda


def _bivector(field, t4: Subspace, coeffs: Sequence) -> ext.Multi:
    out: ext.Multi = {}
    for (a, b), c in zip(combinations(range(4), 2), coeffs):
        if c != 0:
            out = ext.add(field, out, ext.scale(field, c, ext.wedge_vectors(field, t4.basis[a], t4.basis[b])))
    return out


def f_lambda_dim(t: Subspace, t4: Subspace, lam: Sequence[Sequence]) -> tuple[int, int]:
    """``(dim T^Lambda, dim T_4^Lambda)`` inside wedge^3 of the ambient space.

    ``lam`` lists a basis of the hyperplane Lambda of wedge^2 T_4, each element
    given by its 6 coordinates on ``t4.basis[a] ^ t4.basis[b]``, a < b.
    """
    f = t.field
    if t.dim != 6 or t4.dim != 4:
        raise FormError("need dim T = 6 and dim T_4 = 4")
    if not t.contains(t4):
        raise FormError("T_4 is not contained in T")
    if len(lam) != 5 or span_dim(f, [list(x) for x in lam]) != 5:
        raise FormError("Lambda must be a 5-dimensional subspace of wedge^2 T_4")
    n = t.ambient
    bivs = [_bivector(f, t4, x) for x in lam]

    def dim_of(vectors) -> int:
        rows = [ext.coordinates(f, ext.wedge(f, ext.vector(f, v), b), n, 3) for v in vectors for b in bivs]
        return span_dim(f, rows)

    return dim_of(t.basis), dim_of(t4.basis)


def random_hyperplane(field, rng: random.Random, dim: int = 6, inside=None) -> list[list]:
    """Basis of the kernel of a random nonzero functional on ``field^dim``.

    ``inside`` optionally lists vectors the hyperplane must contain.
    """
    inside = inside or []
    constraints = ExactMatrix(field, inside, dim) if inside else None
    choices = constraints.kernel() if constraints else ExactMatrix.identity(field, dim).rows
    while True:
        coeffs = [field.random(rng) for _ in choices]
        functional = [field(sum(c * v[i] for c, v in zip(coeffs, choices))) for i in range(dim)]
        if any(x != 0 for x in functional):
            return ExactMatrix(field, [functional]).kernel()


def decomposable_through(field, u: Sequence) -> list[list]:
    """Coordinates of ``u ^ e_i`` (i = 1..4) on the pair basis of wedge^2 of a 4-space."""
    pairs = list(combinations(range(4), 2))
    out = []
    for i in range(4):
        row = [0] * 6
        for (a, b), idx in zip(pairs, range(6)):
            if b == i:
                row[idx] += u[a]
            if a == i:
                row[idx] -= u[b]
        out.append([field(x) for x in row])
    return out


# ---------------------------------------------------------------------------
# graph subspaces in V_10 = V_9 + <v_0>


def extend_3form(omega: SkewForm, big: ThreeForm, v0_index: int) -> ThreeForm:
    """``Omega_0 = Omega + omega ^ v_0^*`` on V_10, v_0 inserted at ``v0_index``."""
    f = omega.field
    n = omega.dim

    def lift(i: int) -> int:
        return i if i < v0_index else i + 1

    coeffs = {tuple(lift(i) for i in idx): c for idx, c in big.coeffs.items()}
    extra = ext.wedge(f, {(lift(i), lift(j)): c for (i, j), c in omega.as_multi().items()},
                      {(v0_index,): f(1)})
    return ThreeForm(f, n + 1, ext.add(f, coeffs, extra))


@dataclass
class GraphCheck:
    lhs: bool
    rhs: bool

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs


def graph_vanishing_check(omega: SkewForm, big: ThreeForm, t: Subspace, u: Sequence,
                          v0_index: int = V9) -> GraphCheck:
    """Compare ``Omega_0 | T_0 = 0`` with ``(Omega + u ^ omega) | T = 0``.

    ``T_0 = {x + u(x) v_0 : x in T}``; ``u`` gives the values of the linear
    form on ``t.basis``.
    """
    f = omega.field
    if t.ambient != omega.dim or big.dim != omega.dim:
        raise FormError("forms and subspace must live on the same space")
    if len(u) != t.dim:
        raise FormError(f"u needs {t.dim} values, got {len(u)}")
    if not 0 <= v0_index <= omega.dim:
        raise FormError("v0_index out of range")
    big0 = extend_3form(omega, big, v0_index)
    t0 = [list(b[:v0_index]) + [f(c)] + list(b[v0_index:]) for b, c in zip(t.basis, u)]
    lhs = big0.vanishes_on(t0)
    rhs_form = _twisted_restriction(omega, big, t, u)
    return GraphCheck(lhs=lhs, rhs=not rhs_form)


def _twisted_restriction(omega: SkewForm, big: ThreeForm, t: Subspace, u: Sequence) -> ext.Multi:
    """``(Omega + u ^ omega)`` restricted to T, in T's coordinates."""
    f = omega.field
    w = omega.restricted(t.basis)
    m = t.dim
    w_multi = {(i, j): w[i, j] for i, j in combinations(range(m), 2) if w[i, j] != 0}
    u_multi = {(i,): f(x) for i, x in enumerate(u) if f(x) != 0}
    return ext.add(f, big.restrict(t.basis), ext.wedge(f, u_multi, w_multi))


def solve_vanishing_3form(omega: SkewForm, t: Subspace, u: Sequence, rng: random.Random) -> ThreeForm:
    """A 3-form Omega with ``(Omega + u ^ omega)|_T = 0``, found by a linear solve
    in Omega's 84 coefficients plus a random kernel element."""
    f = omega.field
    n, m = omega.dim, t.dim
    triples = list(combinations(range(n), 3))
    rows_idx = list(combinations(range(m), 3))
    cols = []
    for tr in triples:
        res = ext.restrict(f, {tr: f(1)}, t.basis, 3)
        cols.append([res.get(r, f(0)) for r in rows_idx])
    a = ExactMatrix.from_columns(f, cols)
    zero = ThreeForm(f, n, {})
    target = _twisted_restriction(omega, zero, t, u)
    b = [f(-target.get(r, 0)) for r in rows_idx]
    x = a.solve(b)
    if x is None:
        raise FormError("restriction map is not surjective")
    for v in a.kernel():
        c = f.random(rng)
        x = [f(xi + c * vi) for xi, vi in zip(x, v)]
    return ThreeForm(f, n, dict(zip(triples, x)))


# ---------------------------------------------------------------------------
# 5-spaces killing both forms


def vanishing_pair_residual(omega: SkewForm, big: ThreeForm, r: Subspace) -> tuple[bool, bool]:
    """``(omega|_R == 0, Omega|_R == 0)`` for a 5-space R."""
    if r.dim != 5:
        raise FormError(f"expected a 5-dimensional subspace, got dimension {r.dim}")
    return omega.restricted(r.basis).is_zero(), big.vanishes_on(r.basis)


def normal_form_pair(field, rng: random.Random) -> tuple[SkewForm, ThreeForm, Subspace]:
    """Normal-form omega, and a random Omega in wedge^2 V* ^ W with
    W = <e6*, ..., e9*>; both vanish on R = <e1, ..., e5>."""
    omega = SkewForm.normal_form(field)
    big = ThreeForm.random(field, rng, support=lambda t: t[-1] >= 5)
    return omega, big, Subspace.coordinate(field, V9, range(1, 6))


def lift_map_rank(big: ThreeForm, r: Subspace) -> int:
    """Rank of ``V/R -> wedge^2 R^*``, ``v -> Omega(v, ., .)|_R``.

    Well defined when Omega vanishes on R; rank ``dim V - dim R`` means injective.
    """
    f = big.field
    n = big.dim
    chosen = [list(b) for b in r.basis]
    complement = []
    for i in range(n):
        e = [f(int(j == i)) for j in range(n)]
        if span_dim(f, chosen + [e]) > len(chosen):
            chosen.append(e)
            complement.append(e)
    rows = []
    for v in complement:
        two = ext.interior_first(f, big.coeffs, v)
        res = ext.restrict(f, two, r.basis, 2)
        rows.append([res.get(p, f(0)) for p in combinations(range(r.dim), 2)])
    return span_dim(f, rows)


def wedge_omega_rank(omega: SkewForm) -> int:
    """Rank of ``V* -> wedge^3 V*``, ``v -> omega ^ v``."""
    f = omega.field
    n = omega.dim
    rows = []
    for i in range(n):
        prod = ext.wedge(f, omega.as_multi(), {(i,): f(1)})
        rows.append(ext.coordinates(f, prod, n, 3))
    return span_dim(f, rows)


def global_sections_dim(omega: SkewForm) -> int:
    """``dim wedge^3 V* / (omega ^ V*)``."""
    return comb(omega.dim, 3) - wedge_omega_rank(omega)

