"""Slow, independent reference computations used to cross-check the fast paths.

Nothing here shares code with ``schur`` beyond the Partition type.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, enumerate_partitions

Poly = dict[tuple[int, ...], int]


def _skew_cells(outer: Sequence[int], inner: Sequence[int]) -> list[tuple[int, int]]:
    cells = []
    for r, length in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        cells.extend((r, c) for c in range(start, length))
    return cells


def _is_lattice(word: Iterable[int]) -> bool:
    seen: Counter = Counter()
    for x in word:
        seen[x] += 1
        if x > 1 and seen[x] > seen[x - 1]:
            return False
    return True


def lr_bruteforce(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Count semistandard fillings of nu/lam with content mu whose reverse
    reading word is a lattice word."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight:
        return 0
    if len(lam) > len(nu) or any(a > b for a, b in zip(lam, nu)):
        return 0
    cells = _skew_cells(nu, lam)
    letters = len(mu)
    filling: dict[tuple[int, int], int] = {}
    used = [0] * (letters + 1)
    count = 0

    def place(i: int) -> None:
        nonlocal count
        if i == len(cells):
            if all(used[j + 1] == mu[j] for j in range(letters)):
                word = [filling[(r, c)] for r in range(len(nu)) for c in reversed(range(nu[r]))
                        if (r, c) in filling]
                count += _is_lattice(word)
            return
        r, c = cells[i]
        lo = 1
        if (r, c - 1) in filling:
            lo = filling[(r, c - 1)]
        if (r - 1, c) in filling:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for x in range(lo, letters + 1):
            if used[x] < mu[x - 1]:
                filling[(r, c)] = x
                used[x] += 1
                place(i + 1)
                used[x] -= 1
                del filling[(r, c)]

    place(0)
    return count


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def vandermonde(n: int) -> Poly:
    out: Poly = {(0,) * n: 1}
    for i, j in combinations(range(n), 2):
        xi = tuple(int(t == i) for t in range(n))
        xj = tuple(int(t == j) for t in range(n))
        out = poly_mul(out, {xi: 1, xj: -1})
    return out


def schur_coefficients_bialternant(f: Mapping[tuple[int, ...], int], n: int) -> dict[Partition, int]:
    """Schur expansion of a symmetric polynomial in n variables: the
    coefficient of s_lam in f is that of x^(lam + delta) in f * a_delta."""
    prod = poly_mul(dict(f), vandermonde(n))
    out: dict[Partition, int] = {}
    for e, c in prod.items():
        lam = [e[i] - (n - 1 - i) for i in range(n)]
        if all(lam[i] >= lam[i + 1] for i in range(n - 1)) and lam[-1] >= 0:
            out[Partition(lam)] = c
    return out


def elementary_of_forms(forms: Sequence[Sequence[int]], degree: int) -> Poly:
    """Degree-``degree`` part of the product of (1 + l) over the linear forms."""
    n = len(forms[0]) if forms else 0
    total: Poly = {(0,) * n: 1}
    for form in forms:
        lin = {tuple(int(t == i) for t in range(n)): c for i, c in enumerate(form) if c}
        nxt = dict(total)
        for e, c in poly_mul(total, lin).items():
            if sum(e) <= degree:
                nxt[e] = nxt.get(e, 0) + c
        total = {e: c for e, c in nxt.items() if c}
    return {e: c for e, c in total.items() if sum(e) == degree}


def lr_product_bruteforce(lam: Sequence[int], mu: Sequence[int]) -> dict[Partition, int]:
    lam, mu = Partition(lam), Partition(mu)
    out = {}
    for nu in enumerate_partitions(lam.weight + mu.weight):
        c = lr_bruteforce(lam, mu, nu)
        if c:
            out[nu] = c
    return out


def gottsche_euler(chi_surface: int, n: int) -> int:
    """Euler number of Hilb^n of a surface: coefficient of q^n in
    prod_{k>=1} (1 - q^k)^(-chi)."""
    series = [1] + [0] * n
    for k in range(1, n + 1):
        # multiply by (1 - q^k)^(-chi) = sum_j binom(chi + j - 1, j) q^(kj)
        factor = [0] * (n + 1)
        coeff, j = 1, 0
        while k * j <= n:
            factor[k * j] = coeff
            coeff = coeff * (chi_surface + j) // (j + 1)
            j += 1
        series = [sum(series[i] * factor[m - i] for i in range(m + 1)) for m in range(n + 1)]
    return series[n]
