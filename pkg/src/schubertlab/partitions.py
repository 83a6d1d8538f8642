"""Partitions and the rectangular boxes that truncate Grassmannian cohomology."""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare and hash equal.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        if not self:
            return "∅"
        if max(self) < 10:
            return "".join(map(str, self))
        return ",".join(map(str, self))

    def to_json(self) -> list[int]:
        return list(self)

    @classmethod
    def from_json(cls, data: list[int]) -> "Partition":
        return cls(data)


EMPTY = Partition()


class Box(NamedTuple):
    """A ``rows x cols`` rectangle; G(k, n) uses ``Box(k, n - k)``."""

    rows: int
    cols: int

    def check(self) -> "Box":
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"box dimensions must be positive: {self}")
        return self

    @property
    def area(self) -> int:
        return self.rows * self.cols

    def full(self) -> Partition:
        return Partition((self.cols,) * self.rows)


def conjugate(p: Partition) -> Partition:
    if not p:
        return EMPTY
    return Partition(sum(1 for x in p if x > j) for j in range(p[0]))


def fits_in_box(p: Partition, b: Box) -> bool:
    return len(p) <= b.rows and (not p or p[0] <= b.cols)


def box_complement(p: Partition, b: Box) -> Partition:
    """Complement of ``p`` in ``b``, rotated by 180 degrees.

    This is the Poincaré dual index: ``sigma_p * sigma_q`` integrates to 1 on
    G(rows, rows + cols) exactly when ``q = box_complement(p, b)``.
    """
    if not fits_in_box(p, b):
        raise ValueError(f"{p!r} does not fit in {b}")
    return Partition(b.cols - p.part(b.rows - 1 - i) for i in range(b.rows))


def _partitions(n: int, max_len: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # lexicographically descending
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_len < n:
            break
        for rest in _partitions(n - first, max_len - 1, first):
            yield (first,) + rest


def enumerate_partitions(weight: int, b: Box | None = None) -> list[Partition]:
    """All partitions of ``weight`` inside ``b`` (unbounded if ``b`` is None),
    in lexicographically descending order."""
    if weight < 0:
        return []
    rows = weight if b is None else b.rows
    cols = weight if b is None else b.cols
    return [Partition(p) for p in _partitions(weight, rows, cols)]


def partitions_in_box(b: Box) -> Iterator[Partition]:
    """Every partition in ``b``, by increasing weight."""
    for w in range(b.area + 1):
        yield from enumerate_partitions(w, b)


def dominates(lam: Partition, mu: Partition) -> bool:
    """True iff ``lam`` dominates ``mu`` (equal weights assumed)."""
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam.part(i)
        t += mu.part(i)
        if s < t:
            return False
    return True


def contains(outer: Partition, inner: Partition) -> bool:
    return len(inner) <= len(outer) and all(outer[i] >= x for i, x in enumerate(inner))


def horizontal_strips(shape: Partition, size: int, max_len: int | None = None,
                      max_part: int | None = None) -> Iterator[Partition]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` boxes.

    ``max_len``/``max_part`` prune results that leave a bounding rectangle.
    """
    nrows = len(shape) + 1
    if max_len is not None:
        nrows = min(nrows, max_len)
    caps = []
    for r in range(nrows):
        cap = size if r == 0 else shape[r - 1] - shape.part(r)
        if r == 0 and max_part is not None:
            cap = min(cap, max_part - shape.part(0))
        caps.append(max(cap, 0))

    def rec(r: int, left: int) -> Iterator[tuple[int, ...]]:
        if r == nrows:
            if left == 0:
                yield ()
            return
        for add in range(min(caps[r], left), -1, -1):
            for rest in rec(r + 1, left - add):
                yield (add,) + rest

    for adds in rec(0, size):
        yield Partition(shape.part(r) + (adds[r] if r < nrows else 0)
                        for r in range(max(len(shape), nrows)))
