"""Integer partitions and Littlewood-Richardson coefficients.

Partitions index the Schubert classes of a Grassmannian.  Everything here is
pure and cached; the weights that occur in practice stay small (at most a
few dozen boxes), so LR coefficients are computed by direct enumeration of
LR skew tableaux rather than by puzzles or crystals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    equals ``Partition((2, 1))``.  The empty partition is ``Partition()``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in partition: {parts}")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
            if p == 0:
                raise ValueError(f"zero part before a positive one: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def contains(self, other: "Partition") -> bool:
        """Young diagram containment ``other ⊆ self``."""
        if len(other) > len(self):
            return False
        return all(o <= s for o, s in zip(other, self))

    def fits(self, rows: int, cols: int) -> bool:
        return len(self) <= rows and (not self or self[0] <= cols)

    def addable_corners(self) -> int:
        """Number of cells that can be added keeping a partition shape."""
        if not self:
            return 1
        # first row and a new bottom row are always addable
        return 2 + sum(1 for i in range(1, len(self)) if self[i] < self[i - 1])

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class BoxShape:
    """The ``rows x cols`` rectangle; for G(r,s) this is ``r x (s-r)``."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError(f"box dimensions must be positive, got {self.rows}x{self.cols}")

    @property
    def area(self) -> int:
        return self.rows * self.cols

    @property
    def full(self) -> Partition:
        return Partition((self.cols,) * self.rows)


def _bounded_partitions(n: int, max_parts: int, max_part: int) -> Iterator[tuple]:
    # yields in lexicographically decreasing order
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_parts < n:
            break
        for rest in _bounded_partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_in_box(k: int, rows: int, cols: int) -> tuple:
    return tuple(Partition(p) for p in _bounded_partitions(k, rows, cols))


def partitions_in_box(k: int, box: BoxShape) -> list[Partition]:
    """All partitions of ``k`` fitting in ``box``, lexicographically decreasing.

    >>> partitions_in_box(4, BoxShape(2, 3))
    [Partition((3, 1)), Partition((2, 2))]
    """
    if k < 0:
        return []
    return list(_partitions_in_box(k, box.rows, box.cols))


def partitions_of(n: int) -> list[Partition]:
    """Every partition of ``n``, lexicographically decreasing."""
    return list(_partitions_in_box(n, max(n, 1), max(n, 1)))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def complement(lam: Iterable[int], box: BoxShape) -> Partition:
    """Complement of ``lam`` in ``box``, rotated by 180 degrees."""
    lam = Partition(lam)
    if not lam.fits(box.rows, box.cols):
        raise ValueError(f"{tuple(lam)} does not fit in a {box.rows}x{box.cols} box")
    return Partition(box.cols - lam.part(box.rows - 1 - i) for i in range(box.rows))


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """The Littlewood-Richardson coefficient c^nu_{lam, mu}.

    Counts semistandard fillings of the skew shape nu/lam with content mu whose
    reverse reading word (right to left, top to bottom) is a lattice word.

    >>> lr_coefficient((2, 1), (2, 1), (3, 2, 1))
    2
    """
    return _lr(Partition(lam), Partition(mu), Partition(nu))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    if nu.weight != lam.weight + mu.weight or not nu.contains(lam):
        return 0
    if not nu.contains(mu):
        return 0
    if not mu:
        return 1
    nrows = len(nu)
    content = list(mu)
    nvals = len(mu)

    def fill(row: int, prev: list[int] | None, counts: list[int]) -> int:
        if row == nrows:
            return 1 if counts == content else 0
        start = lam.part(row)
        length = nu[row] - start
        above_start = lam.part(row - 1) if row else 0
        # entries in row `row` never exceed row + 1 in an LR tableau
        top = min(row + 1, nvals)
        total = 0
        for row_counts in _compositions(length, top):
            new = counts[:]
            ok = True
            for v in range(top):
                new[v] += row_counts[v]
                if new[v] > content[v]:
                    ok = False
                    break
            if not ok:
                continue
            # lattice condition: this row is read right to left, i.e. largest values first
            if any(new[v] > counts[v - 1] for v in range(1, top)):
                continue
            cells = []
            for v in range(top):
                cells.extend([v + 1] * row_counts[v])
            if prev is not None:
                bad = False
                for j, x in enumerate(cells):
                    col = start + j
                    if col >= above_start and x <= prev[col - above_start]:
                        bad = True
                        break
                if bad:
                    continue
            total += fill(row + 1, cells, new)
        return total

    return fill(0, None, [0] * nvals)


@lru_cache(maxsize=None)
def _compositions(n: int, k: int) -> tuple:
    """Weak compositions of n into k parts."""
    if k == 0:
        return ((),) if n == 0 else ()
    if k == 1:
        return ((n,),)
    out = []
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            out.append((first,) + rest)
    return tuple(out)
