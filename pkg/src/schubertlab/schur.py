"""Schur-basis arithmetic: Littlewood-Richardson products, conversion of
symmetric polynomials to Schur polynomials, and Chern classes of bundle
expressions via the splitting principle."""

from __future__ import annotations

from collections import Counter, defaultdict
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Iterator, Mapping

from .bundles import BundleExpr, FactorRanks, RootLayout, rank_of
from .partitions import EMPTY, Partition

Key = tuple[Partition, ...]

# ---------------------------------------------------------------------------
# Littlewood-Richardson rule


def _lr_fillings(lam: Partition, mu: Partition, max_len: int | None,
                 max_part: int | None) -> dict[Partition, int]:
    """Grow ``lam`` by horizontal strips of sizes ``mu[0], mu[1], ...``.

    Strip ``i`` puts ``mu[i]`` copies of the letter ``i``.  The reverse reading
    word is a lattice word iff for every row r and letter i >= 1, the number
    of i's in rows <= r is at most the number of (i-1)'s in rows < r.
    """
    out: dict[Partition, int] = defaultdict(int)
    limit = max_len if max_len is not None else len(lam) + len(mu)

    def grow(shape: tuple[int, ...], i: int, prev: tuple[int, ...]) -> None:
        if i == len(mu):
            out[Partition(shape)] += 1
            return
        nrows = min(len(shape) + 1, limit)
        base = shape + (0,) * (nrows - len(shape))
        adds = [0] * nrows

        def row(r: int, left: int, placed: int, allowed: int) -> None:
            # placed: letters i in rows < r; allowed: letters i-1 in rows < r
            if left == 0:
                new = tuple(base[s] + (adds[s] if s < r else 0) for s in range(nrows))
                grow(tuple(x for x in new if x), i + 1, tuple(adds[:r]) + (0,) * (nrows - r))
                return
            if r == nrows:
                return
            cap = left if r == 0 else base[r - 1] - base[r]
            if r == 0 and max_part is not None:
                cap = min(cap, max_part - base[0])
            if i > 0:
                cap = min(cap, allowed - placed)
            nxt_allowed = allowed + (prev[r] if i > 0 and r < len(prev) else 0)
            for a in range(min(cap, left), -1, -1):
                adds[r] = a
                row(r + 1, left - a, placed + a, nxt_allowed)
            adds[r] = 0

        row(0, mu[i], 0, 0)

    grow(tuple(lam), 0, ())
    return dict(out)


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition, max_len: int | None = None,
               max_part: int | None = None) -> dict[Partition, int]:
    """``s_lam * s_mu`` as ``{nu: c^nu_{lam,mu}}``.

    Terms with more than ``max_len`` rows or first part above ``max_part``
    are dropped; they vanish in that many variables / outside the box.
    """
    if max_len is not None and (len(lam) > max_len or len(mu) > max_len):
        return {}
    if max_part is not None and ((lam and lam[0] > max_part) or (mu and mu[0] > max_part)):
        return {}
    # fewer strips is faster; the coefficients are symmetric in lam, mu
    if len(mu) > len(lam):
        lam, mu = mu, lam
    return _lr_fillings(Partition(lam), Partition(mu), max_len, max_part)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight:
        return 0
    return lr_product(lam, mu, len(nu), nu.part(0)).get(nu, 0)


# ---------------------------------------------------------------------------
# Kostka numbers and monomial expansions


def _strips_removed(shape: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Shapes kappa with shape/kappa a horizontal strip of ``size`` boxes."""
    n = len(shape)

    def rec(r: int, left: int) -> Iterator[tuple[int, ...]]:
        if r == n:
            if left == 0:
                yield ()
            return
        lo = shape[r + 1] if r + 1 < n else 0
        for x in range(max(lo, shape[r] - left), shape[r] + 1):
            for rest in rec(r + 1, left - (shape[r] - x)):
                yield (x,) + rest

    for k in rec(0, size):
        yield tuple(x for x in k if x)


@lru_cache(maxsize=None)
def _contents(shape: tuple[int, ...], j: int, min_last: int) -> dict[tuple[int, ...], int]:
    """Weakly decreasing contents (c_1..c_j), c_j >= min_last, of SSYT of ``shape``
    with entries <= j, with multiplicities."""
    if j == 0:
        return {(): 1} if not shape else {}
    total = sum(shape)
    out: dict[tuple[int, ...], int] = defaultdict(int)
    # c_j is the smallest of j parts summing to total
    for s in range(min_last, total // j + 1):
        for kappa in _strips_removed(shape, s):
            for head, cnt in _contents(kappa, j - 1, s).items():
                out[head + (s,)] += cnt
    return dict(out)


@lru_cache(maxsize=None)
def schur_dominant_terms(lam: Partition, num_vars: int) -> dict[Partition, int]:
    """Kostka numbers ``{mu: K_{lam,mu}}`` over partitions mu with at most
    ``num_vars`` parts: the coefficients of the dominant monomials of s_lam."""
    if len(lam) > num_vars:
        return {}
    return {Partition(c): k for c, k in _contents(tuple(lam), num_vars, 0).items()}


def kostka(lam: Partition, mu: Partition) -> int:
    return schur_dominant_terms(Partition(lam), max(len(mu), len(lam), 1)).get(Partition(mu), 0)


# ---------------------------------------------------------------------------
# Schur polynomials over several independent variable groups


class SchurPoly:
    """Integer combination of products ``s_{lam_1}(x_1) ... s_{lam_m}(x_m)``.

    ``nvars[i]`` is the number of variables in group i.  A single-group
    polynomial may be indexed by a bare partition.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: Mapping, nvars: int | Iterable[int]):
        self.nvars: tuple[int, ...] = (nvars,) if isinstance(nvars, int) else tuple(nvars)
        clean: dict[Key, int] = {}
        for key, c in terms.items():
            key = self._key(key)
            if c == 0:
                continue
            if any(len(p) > n for p, n in zip(key, self.nvars)):
                raise ValueError(f"{key} has more parts than variables {self.nvars}")
            clean[key] = clean.get(key, 0) + int(c)
        self.terms = {k: v for k, v in sorted(clean.items(), key=_order) if v}

    def _key(self, key) -> Key:
        if isinstance(key, Partition) or (key and isinstance(key[0], int)) or key == ():
            if len(self.nvars) != 1 and key != ():
                raise KeyError("bare partitions only index single-group polynomials")
            key = (key,) if len(self.nvars) == 1 else key
        if len(key) != len(self.nvars):
            raise KeyError(f"expected {len(self.nvars)} partitions, got {key!r}")
        return tuple(Partition(p) for p in key)

    @classmethod
    def one(cls, nvars) -> "SchurPoly":
        nv = (nvars,) if isinstance(nvars, int) else tuple(nvars)
        return cls({(EMPTY,) * len(nv): 1}, nv)

    @classmethod
    def zero(cls, nvars) -> "SchurPoly":
        return cls({}, nvars)

    def __getitem__(self, key) -> int:
        return self.terms.get(self._key(key), 0)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == SchurPoly.one(self.nvars) * other if other else not self.terms
        return isinstance(other, SchurPoly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def _check(self, other: "SchurPoly") -> None:
        if not isinstance(other, SchurPoly) or other.nvars != self.nvars:
            raise ValueError(f"variable groups differ: {self.nvars} vs {getattr(other, 'nvars', None)}")

    def __add__(self, other: "SchurPoly") -> "SchurPoly":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SchurPoly(out, self.nvars)

    def __neg__(self) -> "SchurPoly":
        return SchurPoly({k: -v for k, v in self.terms.items()}, self.nvars)

    def __sub__(self, other: "SchurPoly") -> "SchurPoly":
        return self + (-other)

    def __mul__(self, other) -> "SchurPoly":
        if isinstance(other, int):
            return SchurPoly({k: v * other for k, v in self.terms.items()}, self.nvars)
        return schur_multiply(self, other)

    __rmul__ = __mul__

    def degree_part(self, d: int) -> "SchurPoly":
        return SchurPoly({k: v for k, v in self.terms.items() if _weight(k) == d}, self.nvars)

    def degrees(self) -> set[int]:
        return {_weight(k) for k in self.terms}

    def to_json(self) -> list[dict]:
        return [{"partition_tuple": [list(p) for p in k], "coefficient": str(v)}
                for k, v in self.terms.items()]

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, v in self.terms.items():
            label = "|".join(str(p) for p in k)
            parts.append(f"{v}*s[{label}]")
        return " + ".join(parts)


def _weight(key: Key) -> int:
    return sum(p.weight for p in key)


def _order(item) -> tuple:
    key = item[0]
    return (_weight(key), tuple(tuple(-x for x in p) + (1,) for p in key))


def schur_multiply(a: SchurPoly, b: SchurPoly, max_parts: tuple[int | None, ...] | None = None) -> SchurPoly:
    """Product in the Schur basis; rows beyond the group's variable count vanish.

    ``max_parts`` optionally bounds first parts per group (box truncation).
    """
    a._check(b)
    caps = max_parts or (None,) * len(a.nvars)
    out: dict[Key, int] = defaultdict(int)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            factors = [lr_product(p, q, n, cap) for p, q, n, cap in zip(ka, kb, a.nvars, caps)]
            if not all(factors):
                continue
            for combo in product(*(f.items() for f in factors)):
                c = ca * cb
                for _, m in combo:
                    c *= m
                out[tuple(nu for nu, _ in combo)] += c
    return SchurPoly(out, a.nvars)


# ---------------------------------------------------------------------------
# symmetric polynomials -> Schur basis


class NotSymmetricError(ValueError):
    pass


def polynomial_to_schur_multi(orbit_coeffs: Mapping, nvars: tuple[int, ...]) -> SchurPoly:
    """Schur expansion of a polynomial symmetric in each variable group.

    ``orbit_coeffs`` maps tuples of exponent multisets (one per group) to the
    coefficient of the corresponding product of monomial symmetric functions.
    Works by repeatedly subtracting the Schur polynomial of the lexicographically
    leading monomial, which is dominant in every group.
    """
    rem: dict[Key, int] = {}
    for key, c in orbit_coeffs.items():
        if not c:
            continue
        key = tuple(Partition(sorted(e, reverse=True)) for e in key)
        if len(key) != len(nvars):
            raise ValueError(f"expected {len(nvars)} exponent groups, got {key!r}")
        rem[key] = rem.get(key, 0) + c
    out: dict[Key, int] = {}
    while True:
        rem = {k: v for k, v in rem.items() if v}
        if not rem:
            break
        lead = max(rem)
        if any(len(p) > n for p, n in zip(lead, nvars)):
            raise NotSymmetricError(f"leading exponent {lead} has more parts than variables {nvars}")
        c = rem[lead]
        out[lead] = c
        expansions = [schur_dominant_terms(p, n) for p, n in zip(lead, nvars)]
        for combo in product(*(e.items() for e in expansions)):
            k = 1
            for _, m in combo:
                k *= m
            key = tuple(mu for mu, _ in combo)
            rem[key] = rem.get(key, 0) - c * k
    return SchurPoly(out, nvars)


def polynomial_to_schur(orbit_coeffs: Mapping, num_vars: int) -> SchurPoly:
    """Single-group version; keys are exponent multisets such as ``(2,)`` or ``(1, 1)``."""
    return polynomial_to_schur_multi({(tuple(k),): v for k, v in orbit_coeffs.items()}, (num_vars,))


def monomials_to_schur(poly: Mapping[tuple[int, ...], int], nvars: tuple[int, ...] | int) -> SchurPoly:
    """Schur expansion of a polynomial given monomial by monomial.

    Exponent vectors are concatenated over the groups.  Raises
    ``NotSymmetricError`` unless the polynomial is symmetric within every group.
    """
    nvars = (nvars,) if isinstance(nvars, int) else tuple(nvars)
    cuts = [0]
    for n in nvars:
        cuts.append(cuts[-1] + n)
    poly = {tuple(e): c for e, c in poly.items() if c}
    orbit: dict[Key, int] = {}
    seen: Counter = Counter()
    for e, c in poly.items():
        if len(e) != cuts[-1]:
            raise ValueError(f"exponent {e} has wrong length, expected {cuts[-1]}")
        groups = [e[cuts[i]:cuts[i + 1]] for i in range(len(nvars))]
        dom = tuple(tuple(sorted(g, reverse=True)) for g in groups)
        if poly.get(sum(dom, ()), 0) != c:
            raise NotSymmetricError(f"coefficient of {e} differs from its sorted rearrangement")
        seen[dom] += 1
        if tuple(map(tuple, groups)) == dom:
            orbit[dom] = c
    for dom, count in seen.items():
        if count != prod(_orbit_size(g) for g in dom):
            raise NotSymmetricError(f"some rearrangements of {sum(dom, ())} are missing")
    return polynomial_to_schur_multi(orbit, nvars)


def _orbit_size(exponents: tuple[int, ...]) -> int:
    out = factorial(len(exponents))
    for m in Counter(exponents).values():
        out //= factorial(m)
    return out


# ---------------------------------------------------------------------------
# Chern classes


_SHIFT = 7  # bits per exponent in a packed monomial; degrees stay below 128


def _pack_forms(forms: list[tuple[int, ...]]) -> list[list[tuple[int, int]]]:
    out = []
    for f in forms:
        terms = [(c, 1 << (_SHIFT * v)) for v, c in enumerate(f) if c]
        if terms:
            out.append(terms)
    return out


def _graded_e(roots: list[list[tuple[int, int]]], lo: int, hi: int) -> list[dict[int, int]]:
    """Graded pieces of prod(1 + r), degrees lo..hi, as packed-monomial dicts."""
    parts: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(hi)]
    n = len(roots)
    for t, r in enumerate(roots):
        remaining = n - t - 1
        top = min(t + 1, hi)
        for j in range(top, 0, -1):
            if j + remaining < lo:
                parts[j] = {}
                continue
            src = parts[j - 1]
            if not src:
                continue
            dst = parts[j]
            for mono, c in src.items():
                for a, step in r:
                    key = mono + step
                    dst[key] = dst.get(key, 0) + a * c
        if remaining + 0 < lo:
            parts[0] = {}
    return parts


def _unpack(mono: int, nvars: int) -> tuple[int, ...]:
    mask = (1 << _SHIFT) - 1
    return tuple((mono >> (_SHIFT * v)) & mask for v in range(nvars))


def _to_schur(part: dict[int, int], layout: RootLayout) -> SchurPoly:
    groups = layout.groups
    cuts = [0]
    for n in groups:
        cuts.append(cuts[-1] + n)
    orbit: dict[Key, int] = {}
    for mono, c in part.items():
        if not c:
            continue
        e = _unpack(mono, layout.nvars)
        key = []
        for i in range(len(groups)):
            g = e[cuts[i]:cuts[i + 1]]
            if any(g[j] < g[j + 1] for j in range(len(g) - 1)):
                break
            key.append(g)
        else:
            orbit[tuple(key)] = c
    return polynomial_to_schur_multi(orbit, groups)


def _layout(e: BundleExpr, factor_ranks: FactorRanks) -> RootLayout:
    rank_of(e, factor_ranks)  # validates the tree against the declared factors
    return RootLayout(factor_ranks)


def chern_class(e: BundleExpr, degree: int, factor_ranks: FactorRanks) -> SchurPoly:
    """Degree-``degree`` Chern class of ``e``, in Schur polynomials of the
    dual-tautological roots of every declared factor (sorted by index)."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    layout = _layout(e, factor_ranks)
    roots = _pack_forms(layout.roots(e))
    if degree > len(roots):
        return SchurPoly.zero(layout.groups)
    parts = _graded_e(roots, degree, degree)
    return _to_schur(parts[degree], layout)


def chern_classes(e: BundleExpr, factor_ranks: FactorRanks) -> list[SchurPoly]:
    """``[c_0(e), ..., c_rank(e)]``."""
    layout = _layout(e, factor_ranks)
    rank = rank_of(e, factor_ranks)
    roots = _pack_forms(layout.roots(e))
    parts = _graded_e(roots, 0, rank)
    return [_to_schur(parts[d], layout) if d <= len(roots) else SchurPoly.zero(layout.groups)
            for d in range(rank + 1)]
