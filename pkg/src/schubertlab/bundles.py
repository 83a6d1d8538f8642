"""Formal vector-bundle expressions over products of Grassmannians.

Leaves are tautological subbundles ``Taut(i)`` of the i-th Grassmannian factor
and trivial bundles.  Nodes build duals, direct sums, tensor products, exterior
and symmetric powers.  Chern roots follow the splitting principle: the roots
of ``Dual(Taut(i))`` are the formal variables ``x_{i,1..k_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Mapping, Union

FactorRanks = Mapping[int, tuple[int, int]]
LinearForm = tuple[int, ...]


@dataclass(frozen=True)
class Taut:
    factor: int
    rank: int | None = None

    def __str__(self) -> str:
        return f"taut({self.factor})"


@dataclass(frozen=True)
class Trivial:
    rank: int

    def __str__(self) -> str:
        return f"triv({self.rank})"


@dataclass(frozen=True)
class Dual:
    arg: "BundleExpr"

    def __str__(self) -> str:
        return f"dual({self.arg})"


@dataclass(frozen=True)
class Sum:
    left: "BundleExpr"
    right: "BundleExpr"

    def __str__(self) -> str:
        return f"sum({self.left},{self.right})"


@dataclass(frozen=True)
class Tensor:
    left: "BundleExpr"
    right: "BundleExpr"

    def __str__(self) -> str:
        return f"tensor({self.left},{self.right})"


@dataclass(frozen=True)
class Wedge:
    power: int
    arg: "BundleExpr"

    def __str__(self) -> str:
        return f"wedge({self.power},{self.arg})"


@dataclass(frozen=True)
class Sym:
    power: int
    arg: "BundleExpr"

    def __str__(self) -> str:
        return f"sym({self.power},{self.arg})"


BundleExpr = Union[Taut, Trivial, Dual, Sum, Tensor, Wedge, Sym]


class BundleError(ValueError):
    """Malformed bundle expression or reference to an undeclared factor."""


def tensor_all(*exprs: BundleExpr) -> BundleExpr:
    out = exprs[0]
    for e in exprs[1:]:
        out = Tensor(out, e)
    return out


def factors_of(e: BundleExpr) -> set[int]:
    if isinstance(e, Taut):
        return {e.factor}
    if isinstance(e, Trivial):
        return set()
    if isinstance(e, (Dual, Wedge, Sym)):
        return factors_of(e.arg)
    return factors_of(e.left) | factors_of(e.right)


def _leaf_rank(e: Taut, factor_ranks: FactorRanks | None) -> int:
    if factor_ranks is not None:
        if e.factor not in factor_ranks:
            raise BundleError(f"factor {e.factor} is not declared")
        k = factor_ranks[e.factor][0]
        if e.rank is not None and e.rank != k:
            raise BundleError(f"taut({e.factor}) has rank {e.rank}, factor has k={k}")
        return k
    if e.rank is None:
        raise BundleError(f"rank of taut({e.factor}) unknown without factor ranks")
    return e.rank


def rank_of(e: BundleExpr, factor_ranks: FactorRanks | None = None) -> int:
    if isinstance(e, Taut):
        return _leaf_rank(e, factor_ranks)
    if isinstance(e, Trivial):
        if e.rank < 0:
            raise BundleError("trivial rank must be nonnegative")
        return e.rank
    if isinstance(e, Dual):
        return rank_of(e.arg, factor_ranks)
    if isinstance(e, Sum):
        return rank_of(e.left, factor_ranks) + rank_of(e.right, factor_ranks)
    if isinstance(e, Tensor):
        return rank_of(e.left, factor_ranks) * rank_of(e.right, factor_ranks)
    if isinstance(e, Wedge):
        r = rank_of(e.arg, factor_ranks)
        if not 0 <= e.power <= r:
            raise BundleError(f"wedge power {e.power} out of range for rank {r}")
        return comb(r, e.power)
    if isinstance(e, Sym):
        if e.power < 0:
            raise BundleError("symmetric power must be nonnegative")
        r = rank_of(e.arg, factor_ranks)
        return comb(r + e.power - 1, e.power) if r else int(e.power == 0)
    raise BundleError(f"not a bundle expression: {e!r}")


class RootLayout:
    """Assigns consecutive variable indices to the Chern roots of each factor."""

    def __init__(self, factor_ranks: FactorRanks):
        self.factors = sorted(factor_ranks)
        self.ranks = {i: factor_ranks[i][0] for i in self.factors}
        self.offset = {}
        pos = 0
        for i in self.factors:
            self.offset[i] = pos
            pos += self.ranks[i]
        self.nvars = pos

    @property
    def groups(self) -> tuple[int, ...]:
        return tuple(self.ranks[i] for i in self.factors)

    def roots(self, e: BundleExpr) -> list[LinearForm]:
        """Chern roots of ``e`` as integer linear forms in the layout's variables."""
        n = self.nvars
        if isinstance(e, Taut):
            if e.factor not in self.offset:
                raise BundleError(f"factor {e.factor} is not declared")
            _leaf_rank(e, {i: (k, 0) for i, k in self.ranks.items()})
            out = []
            for j in range(self.ranks[e.factor]):
                v = [0] * n
                v[self.offset[e.factor] + j] = -1
                out.append(tuple(v))
            return out
        if isinstance(e, Trivial):
            return [(0,) * n] * e.rank
        if isinstance(e, Dual):
            return [tuple(-c for c in r) for r in self.roots(e.arg)]
        if isinstance(e, Sum):
            return self.roots(e.left) + self.roots(e.right)
        if isinstance(e, Tensor):
            return [_add(a, b) for a in self.roots(e.left) for b in self.roots(e.right)]
        if isinstance(e, Wedge):
            rs = self.roots(e.arg)
            if not 0 <= e.power <= len(rs):
                raise BundleError(f"wedge power {e.power} out of range for rank {len(rs)}")
            return [_add(*c) if c else (0,) * n for c in combinations(rs, e.power)]
        if isinstance(e, Sym):
            if e.power < 0:
                raise BundleError("symmetric power must be nonnegative")
            rs = self.roots(e.arg)
            return [_add(*c) if c else (0,) * n
                    for c in combinations_with_replacement(rs, e.power)]
        raise BundleError(f"not a bundle expression: {e!r}")


def _add(*forms: LinearForm) -> LinearForm:
    return tuple(map(sum, zip(*forms)))
