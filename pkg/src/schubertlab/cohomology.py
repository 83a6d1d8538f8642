"""Cohomology rings of products of Grassmannians in the Schubert basis.

H*(G(k, n)) has the Schubert classes sigma_lam, lam in the k x (n-k) box, as
a Z-basis.  Products are Littlewood-Richardson products with terms outside the
box dropped; no relation ideal is ever built.  sigma_lam is identified with
the Schur polynomial s_lam in the Chern roots of the dual tautological bundle.
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass
from itertools import permutations, product
from math import prod
from typing import Mapping, Sequence

from .bundles import BundleExpr, Dual, Taut, Tensor, Wedge, rank_of
from .partitions import EMPTY, Box, Partition, fits_in_box
from .schur import SchurPoly, chern_class, chern_classes, lr_product

Key = tuple[Partition, ...]


@dataclass(frozen=True)
class GrassmannProduct:
    """G(k_1, n_1) x ... x G(k_m, n_m)."""

    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(k), int(n)) for k, n in self.factors))
        if not self.factors:
            raise ValueError("a Grassmannian product needs at least one factor")
        for k, n in self.factors:
            if not 1 <= k < n:
                raise ValueError(f"G({k},{n}) requires 1 <= k < n")

    @classmethod
    def parse(cls, desc: str) -> "GrassmannProduct":
        """Parse ``G(2,4)^3``, ``G(5,9)`` or ``G(2,4)xG(3,6)``."""
        factors = []
        for chunk in re.split(r"\s*[x×]\s*", desc.strip()):
            m = re.fullmatch(r"G\(\s*(\d+)\s*,\s*(\d+)\s*\)(?:\^(\d+))?", chunk)
            if not m:
                raise ValueError(f"cannot parse ring descriptor {desc!r}")
            k, n, power = int(m[1]), int(m[2]), int(m[3] or 1)
            factors.extend([(k, n)] * power)
        return cls(tuple(factors))

    def __str__(self) -> str:
        out, i = [], 0
        while i < len(self.factors):
            j = i
            while j < len(self.factors) and self.factors[j] == self.factors[i]:
                j += 1
            k, n = self.factors[i]
            out.append(f"G({k},{n})" + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return "x".join(out)

    @property
    def dim(self) -> int:
        return sum(k * (n - k) for k, n in self.factors)

    @property
    def boxes(self) -> tuple[Box, ...]:
        return tuple(Box(k, n - k) for k, n in self.factors)

    @property
    def factor_ranks(self) -> dict[int, tuple[int, int]]:
        return dict(enumerate(self.factors))

    @property
    def point_key(self) -> Key:
        return tuple(b.full() for b in self.boxes)

    def fits(self, key: Key) -> bool:
        return all(fits_in_box(p, b) for p, b in zip(key, self.boxes))

    def one(self) -> "SchubertClass":
        return SchubertClass(self, {(EMPTY,) * len(self.factors): 1})

    def zero(self) -> "SchubertClass":
        return SchubertClass(self, {})

    def sigma(self, *parts: Sequence[int]) -> "SchubertClass":
        """``sigma(lam_1, ..., lam_m)``; a single argument is allowed on one factor."""
        if len(parts) != len(self.factors):
            raise ValueError(f"need {len(self.factors)} partitions")
        return SchubertClass(self, {tuple(Partition(p) for p in parts): 1})

    def hyperplane(self, i: int) -> "SchubertClass":
        """``h_i``: sigma_1 on factor i, the Plücker hyperplane class pulled back."""
        key = [EMPTY] * len(self.factors)
        key[i] = Partition((1,))
        return SchubertClass(self, {tuple(key): 1})

    def from_schur(self, poly: SchurPoly) -> "SchubertClass":
        """Truncate a Schur polynomial in the dual-tautological roots to the boxes."""
        expected = tuple(k for k, _ in self.factors)
        if poly.nvars != expected:
            raise ValueError(f"Schur groups {poly.nvars} do not match ring {self}")
        return SchubertClass(self, {k: v for k, v in poly.terms.items() if self.fits(k)})

    def chern(self, e: BundleExpr, degree: int) -> "SchubertClass":
        return self.from_schur(chern_class(e, degree, self.factor_ranks))

    def total_chern(self, e: BundleExpr) -> "SchubertClass":
        out = self.zero()
        for c in chern_classes(e, self.factor_ranks):
            out = out + self.from_schur(c)
        return out


class RingMismatch(ValueError):
    pass


class SchubertClass:
    """Integer combination of Schubert classes on a ``GrassmannProduct``.

    Mixed degrees are allowed (formal sums), e.g. total Chern classes.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: GrassmannProduct, terms: Mapping[Key, int]):
        self.ring = ring
        clean: dict[Key, int] = defaultdict(int)
        for key, c in terms.items():
            key = tuple(Partition(p) for p in key)
            if len(key) != len(ring.factors) or not ring.fits(key):
                raise ValueError(f"{key} is not a Schubert index of {ring}")
            clean[key] += int(c)
        self.terms = {k: v for k, v in sorted(clean.items(), key=_order) if v}

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.ring.one() * other
        return isinstance(other, SchubertClass) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, tuple(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, key) -> int:
        if len(self.ring.factors) == 1 and (not key or isinstance(key[0], int)):
            key = (key,)
        return self.terms.get(tuple(Partition(p) for p in key), 0)

    def _same(self, other: "SchubertClass") -> None:
        if not isinstance(other, SchubertClass) or other.ring != self.ring:
            raise RingMismatch(f"cannot combine classes on {self.ring} and {getattr(other, 'ring', other)}")

    def __add__(self, other: "SchubertClass") -> "SchubertClass":
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return SchubertClass(self.ring, out)

    def __neg__(self) -> "SchubertClass":
        return SchubertClass(self.ring, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "SchubertClass") -> "SchubertClass":
        return self + (-other)

    def __mul__(self, other) -> "SchubertClass":
        if isinstance(other, int):
            return SchubertClass(self.ring, {k: v * other for k, v in self.terms.items()})
        return class_multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SchubertClass":
        out = self.ring.one()
        for _ in range(e):
            out = out * self
        return out

    def degree_part(self, d: int) -> "SchubertClass":
        return SchubertClass(self.ring, {k: v for k, v in self.terms.items() if _weight(k) == d})

    def degrees(self) -> set[int]:
        return {_weight(k) for k in self.terms}

    @property
    def degree(self) -> int:
        """Degree of a homogeneous class (0 for the zero class)."""
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"class is not homogeneous: degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*σ[{'|'.join(str(p) for p in k)}]" for k, v in self.terms.items())

    def to_json(self) -> dict:
        return {"ring": str(self.ring),
                "terms": [{"partitions": [list(p) for p in k], "coefficient": str(v)}
                          for k, v in self.terms.items()]}


def _weight(key: Key) -> int:
    return sum(p.weight for p in key)


def _order(item) -> tuple:
    key = item[0]
    return (_weight(key), tuple(tuple(-x for x in p) + (1,) for p in key))


def class_multiply(a: SchubertClass, b: SchubertClass) -> SchubertClass:
    a._same(b)
    boxes = a.ring.boxes
    out: dict[Key, int] = defaultdict(int)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            factors = [lr_product(p, q, bx.rows, bx.cols) for p, q, bx in zip(ka, kb, boxes)]
            if not all(factors):
                continue
            for combo in product(*(f.items() for f in factors)):
                out[tuple(nu for nu, _ in combo)] += ca * cb * prod(m for _, m in combo)
    return SchubertClass(a.ring, out)


def integrate(c: SchubertClass) -> int:
    """Coefficient of the point class."""
    return c.terms.get(c.ring.point_key, 0)


def degree_wrt(c: SchubertClass, weights: Sequence[int]) -> int:
    """``integral of c * (sum_i w_i h_i)^(dim - deg c)``."""
    ring = c.ring
    if len(weights) != len(ring.factors):
        raise ValueError(f"need {len(ring.factors)} weights")
    if any(w < 0 for w in weights) or not any(weights):
        raise ValueError("weights must be nonnegative and not all zero")
    d = ring.dim - c.degree
    if d < 0:
        raise ValueError(f"class degree {c.degree} exceeds dimension {ring.dim}")
    h = ring.zero()
    for i, w in enumerate(weights):
        if w:
            h = h + ring.hyperplane(i) * w
    out = c
    for _ in range(d):
        out = out * h
    return integrate(out)


def porteous_class(e_rank: int, f_chern: Sequence[SchubertClass], f_rank: int, r: int) -> SchubertClass:
    """Class of the locus where a map from a trivial rank-``e_rank`` bundle to F
    has rank at most ``r``: ``det(c_{f-r+j-i}(F))`` of size ``e_rank - r``.

    ``f_chern[i]`` is ``c_i(F)``; missing or out-of-range indices count as 0
    (and ``c_0 = 1``).
    """
    if not 0 <= r <= min(e_rank, f_rank):
        raise ValueError(f"rank bound r={r} out of range")
    if not f_chern:
        raise ValueError("need at least c_0(F)")
    ring = f_chern[0].ring
    size, shift = e_rank - r, f_rank - r

    def c(i: int) -> SchubertClass:
        if i == 0:
            return ring.one()
        if i < 0 or i > f_rank or i >= len(f_chern):
            return ring.zero()
        return f_chern[i]

    if size == 0:
        return ring.one()
    out = ring.zero()
    for perm in permutations(range(size)):
        sign = _perm_sign(perm)
        term = ring.one()
        for i, j in enumerate(perm):
            term = term * c(shift + j - i)
            if not term:
                break
        if term:
            out = out + term * sign
    return out


def _perm_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for i in range(len(perm)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass
class ZeroLocusProfile:
    ring: GrassmannProduct
    bundle: BundleExpr
    cls: SchubertClass
    dim: int
    index: tuple[int, ...]
    empty: bool

    @property
    def canonical_trivial(self) -> bool:
        return all(i == 0 for i in self.index)


def zero_locus_profile(ring: GrassmannProduct, e: BundleExpr) -> ZeroLocusProfile:
    """Fundamental class, dimension and per-factor anticanonical weights of
    the zero locus of a general section of ``e``.

    By adjunction ``-K_Z = (-K_ambient - c_1(e))|_Z``; on G(k, n) the
    anticanonical class is ``n * sigma_1``.
    """
    r = rank_of(e, ring.factor_ranks)
    if r > ring.dim:
        raise ValueError(f"rank {r} exceeds dimension {ring.dim}")
    cls = ring.chern(e, r)
    c1 = ring.chern(e, 1)
    index = []
    for i, (_, n) in enumerate(ring.factors):
        (h_key,) = ring.hyperplane(i).terms
        index.append(n - c1.terms.get(h_key, 0))
    return ZeroLocusProfile(ring, e, cls, ring.dim - r, tuple(index), not cls)


def kernel_c1_on_complement() -> SchubertClass:
    """c_1 of ker(wedge^3 T -> T) on G(6, 9), T the tautological subbundle.

    Only valid away from the locus where the contraction map drops rank.
    """
    ring = GrassmannProduct(((6, 9),))
    t = Taut(0)
    return ring.chern(Wedge(3, t), 1) - ring.chern(t, 1)


def homogeneous_dims(kind: str, k: int, n: int) -> int:
    """Dimension of G(k,n), IG(k,n) (n even) or OG(k,n)."""
    if kind == "grassmannian":
        if not 1 <= k < n:
            raise ValueError(f"G({k},{n}) needs 1 <= k < n")
        return k * (n - k)
    if kind == "isotropic":
        if n % 2 or not 1 <= k <= n // 2:
            raise ValueError(f"IG({k},{n}) needs n even and 1 <= k <= n/2")
        return k * (n - k) - k * (k - 1) // 2
    if kind == "orthogonal":
        if not 1 <= k <= n // 2:
            raise ValueError(f"OG({k},{n}) needs 1 <= k <= n/2")
        return k * (n - k) - k * (k + 1) // 2
    raise ValueError(f"unknown kind {kind!r}")


def invert_total(c: SchubertClass, max_degree: int | None = None) -> SchubertClass:
    """Inverse of a class with constant term 1, truncated at ``max_degree``."""
    ring = c.ring
    top = ring.dim if max_degree is None else max_degree
    if c.degree_part(0) != ring.one():
        raise ValueError("constant term must be 1")
    x = ring.one() - c
    out, power = ring.one(), ring.one()
    for _ in range(top):
        power = _truncate(power * x, top)
        if not power:
            break
        out = out + power
    return _truncate(out, top)


def _truncate(c: SchubertClass, top: int) -> SchubertClass:
    return SchubertClass(c.ring, {k: v for k, v in c.terms.items() if _weight(k) <= top})


def euler_characteristic_of_zero_locus(ring: GrassmannProduct, e: BundleExpr) -> int:
    """Topological Euler characteristic of the zero locus Z of a regular
    section of ``e``: ``integral of c_top(T_P - e) * c_top(e)``.

    Uses ``T_G(k,n) = U^* (x) C^n - U^* (x) U`` on every factor.
    """
    z = zero_locus_profile(ring, e)
    d = z.dim
    num = ring.one()
    den = ring.total_chern(e)
    for i, (k, n) in enumerate(ring.factors):
        u = Taut(i)
        for _ in range(n):
            num = _truncate(num * ring.total_chern(Dual(u)), ring.dim)
        den = _truncate(den * ring.total_chern(Tensor(Dual(u), u)), ring.dim)
    tangent = _truncate(num * invert_total(den), d)
    return integrate(tangent.degree_part(d) * z.cls)
