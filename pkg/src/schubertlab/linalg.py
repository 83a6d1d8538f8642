"""Dense exact linear algebra over Q and prime fields.

Matrices are lists of rows.  Field elements are Python ``int`` (reduced mod p)
or ``fractions.Fraction``; a small field object supplies normalization,
inversion and sampling.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence


class PrimeField:
    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def elements(self) -> range:
        return range(self.p)

    @property
    def size(self) -> int:
        return self.p


class RationalField:
    p = 0

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / Fraction(x)

    def random(self, rng: random.Random, bound: int = 9) -> Fraction:
        return Fraction(rng.randint(-bound, bound))


QQ = RationalField()


class ExactMatrix:
    """An ``nrows x ncols`` matrix over an exact field."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field, rows: Iterable[Sequence], ncols: int | None = None):
        self.field = field
        self.rows = [[field(x) for x in r] for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else (ncols or 0)
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def zeros(cls, field, m: int, n: int) -> "ExactMatrix":
        return cls(field, [[0] * n for _ in range(m)], n)

    @classmethod
    def identity(cls, field, n: int) -> "ExactMatrix":
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, cols: Sequence[Sequence], nrows: int | None = None) -> "ExactMatrix":
        if not cols:
            return cls(field, [[] for _ in range(nrows or 0)], 0)
        return cls(field, [list(r) for r in zip(*cols)])

    @classmethod
    def random(cls, field, m: int, n: int, rng: random.Random) -> "ExactMatrix":
        return cls(field, [[field.random(rng) for _ in range(n)] for _ in range(m)], n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return (isinstance(other, ExactMatrix) and self.field == other.field
                and self.rows == other.rows and self.ncols == other.ncols)

    def __repr__(self) -> str:
        return f"ExactMatrix({self.field}, {self.rows})"

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix(self.field, [list(c) for c in zip(*self.rows)] if self.rows else [],
                           self.nrows)

    def columns(self) -> list[list]:
        return [list(c) for c in zip(*self.rows)] if self.rows else [[] for _ in range(self.ncols)]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        f = self.field
        cols = other.columns()
        return ExactMatrix(f, [[f(sum(a * b for a, b in zip(r, c))) for c in cols]
                               for r in self.rows], other.ncols)

    def apply(self, v: Sequence) -> list:
        f = self.field
        return [f(sum(a * b for a, b in zip(r, v))) for r in self.rows]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def rref(self) -> tuple[list[list], list[int]]:
        """Reduced row echelon form and pivot columns."""
        f = self.field
        a = [list(r) for r in self.rows]
        pivots: list[int] = []
        row = 0
        for col in range(self.ncols):
            piv = next((i for i in range(row, self.nrows) if a[i][col] != 0), None)
            if piv is None:
                continue
            a[row], a[piv] = a[piv], a[row]
            inv = f.inv(a[row][col])
            a[row] = [f(x * inv) for x in a[row]]
            for i in range(self.nrows):
                if i != row and a[i][col] != 0:
                    c = a[i][col]
                    a[i] = [f(x - c * y) for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
            if row == self.nrows:
                break
        return a, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list]:
        """Basis of the right null space ``{v : A v = 0}``."""
        f = self.field
        r, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in pivots]
        basis = []
        for j in free:
            v = [f(0)] * self.ncols
            v[j] = f(1)
            for i, pc in enumerate(pivots):
                v[pc] = f(-r[i][j])
            basis.append(v)
        return basis

    def left_kernel(self) -> list[list]:
        return self.T.kernel()

    def image(self) -> list[list]:
        """Basis of the column space (pivot columns of the original matrix)."""
        _, pivots = self.rref()
        cols = self.columns()
        return [cols[j] for j in pivots]

    def det(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        f = self.field
        a = [list(r) for r in self.rows]
        n = self.nrows
        d = f(1)
        for col in range(n):
            piv = next((i for i in range(col, n) if a[i][col] != 0), None)
            if piv is None:
                return f(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                d = f(-d)
            d = f(d * a[col][col])
            inv = f.inv(a[col][col])
            for i in range(col + 1, n):
                if a[i][col] != 0:
                    c = f(a[i][col] * inv)
                    a[i] = [f(x - c * y) for x, y in zip(a[i], a[col])]
        return d

    def solve(self, b: Sequence) -> list | None:
        """One solution of ``A x = b``, or None if inconsistent."""
        f = self.field
        aug = ExactMatrix(f, [r + [bi] for r, bi in zip(self.rows, b)])
        r, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [f(0)] * self.ncols
        for i, pc in enumerate(pivots):
            x[pc] = r[i][self.ncols]
        return x


def span_dim(field, vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return ExactMatrix(field, vectors).rank()


def random_full_rank(field, m: int, n: int, rng: random.Random) -> ExactMatrix:
    """Uniform ``m x n`` matrix of rank ``min(m, n)``; rank-deficient draws are rejected."""
    while True:
        a = ExactMatrix.random(field, m, n, rng)
        if a.rank() == min(m, n):
            return a


def normalize_projective(field, v: Sequence) -> tuple:
    """Scale so the first nonzero coordinate is 1."""
    for x in v:
        if x != 0:
            inv = field.inv(x)
            return tuple(field(y * inv) for y in v)
    raise ValueError("zero vector has no projective class")
