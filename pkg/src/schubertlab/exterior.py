"""Sparse multivectors and alternating forms.

A multivector (or form) of degree d is a dict mapping strictly increasing
index tuples of length d to field elements.  The same representation serves
for k-vectors in ``wedge^k V`` and k-forms in ``wedge^k V*``; a k-form pairs
with decomposable k-vectors through determinants of coordinates.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

Multi = dict[tuple[int, ...], object]


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # parity of the shuffle sorting a + b
    inv = 0
    for x in a:
        for y in b:
            if x > y:
                inv += 1
    return -1 if inv % 2 else 1


def wedge(field, a: Multi, b: Multi) -> Multi:
    out: Multi = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            if set(ka) & set(kb):
                continue
            key = tuple(sorted(ka + kb))
            out[key] = field(out.get(key, 0) + _merge_sign(ka, kb) * va * vb)
    return {k: v for k, v in out.items() if v != 0}


def vector(field, v: Sequence) -> Multi:
    return {(i,): field(x) for i, x in enumerate(v) if field(x) != 0}


def wedge_vectors(field, *vs: Sequence) -> Multi:
    out: Multi = {(): field(1)}
    for v in vs:
        out = wedge(field, out, vector(field, v))
    return out


def add(field, *ms: Multi) -> Multi:
    out: Multi = {}
    for m in ms:
        for k, v in m.items():
            out[k] = field(out.get(k, 0) + v)
    return {k: v for k, v in out.items() if v != 0}


def scale(field, c, m: Multi) -> Multi:
    return {k: field(c * v) for k, v in m.items() if field(c * v) != 0}


def basis_index(n: int, d: int) -> list[tuple[int, ...]]:
    """Lexicographic basis of ``wedge^d`` of an n-dimensional space."""
    return list(combinations(range(n), d))


def coordinates(field, m: Multi, n: int, d: int) -> list:
    return [m.get(k, field(0)) for k in basis_index(n, d)]


def _det(field, rows: list[list]) -> object:
    n = len(rows)
    if n == 0:
        return field(1)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return field(rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0])
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return field(a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g))
    total = field(0)
    for j in range(n):
        if rows[0][j] != 0:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total = field(total + (-1) ** j * rows[0][j] * _det(field, minor))
    return total


def evaluate(field, form: Multi, vectors: Sequence[Sequence]) -> object:
    """Value of a d-form on d vectors."""
    total = field(0)
    for idx, c in form.items():
        rows = [[v[i] for v in vectors] for i in idx]
        total = field(total + c * _det(field, rows))
    return total


def restrict(field, form: Multi, basis: Sequence[Sequence], d: int) -> Multi:
    """Pull back a d-form along the inclusion spanned by ``basis`` vectors."""
    out: Multi = {}
    for sub in combinations(range(len(basis)), d):
        val = evaluate(field, form, [basis[j] for j in sub])
        if val != 0:
            out[sub] = val
    return out


def interior_first(field, form: Multi, v: Sequence) -> Multi:
    """Contraction ``form(v, ., ..., .)``."""
    out: Multi = {}
    for idx, c in form.items():
        for pos, i in enumerate(idx):
            if v[i] == 0:
                continue
            rest = idx[:pos] + idx[pos + 1:]
            out[rest] = field(out.get(rest, 0) + (-1) ** pos * c * v[i])
    return {k: v for k, v in out.items() if v != 0}
