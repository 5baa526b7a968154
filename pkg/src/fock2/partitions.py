"""Integer partitions and bipartitions as immutable exact values.

Partitions are weakly decreasing tuples of positive integers; the empty
tuple is the empty partition. Bipartitions are ordered pairs of partitions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive, got {p}")
            if i > 0 and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def rows(self) -> int:
        return len(self.parts)

    @property
    def columns(self) -> int:
        return self.parts[0] if self.parts else 0

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return format_partition(self)


@dataclass(frozen=True, order=True)
class Bipartition:
    first: Partition = Partition()
    second: Partition = Partition()

    @property
    def size(self) -> int:
        return self.first.size + self.second.size

    def component(self, j: int) -> Partition:
        if j == 1:
            return self.first
        if j == 2:
            return self.second
        raise ValueError(f"component index must be 1 or 2, got {j}")

    def __str__(self) -> str:
        return format_bipartition(self)


EMPTY = Partition()


def transpose(p: Partition) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    if not p.parts:
        return EMPTY
    cols = tuple(
        sum(1 for part in p.parts if part >= y) for y in range(1, p.parts[0] + 1)
    )
    return Partition(cols)


def rectangle_dims(p: Partition) -> Optional[tuple[int, int]]:
    """(rows, columns) if all parts are equal, else None.

    The empty partition is not considered a rectangle.
    """
    if not p.parts:
        return None
    if p.parts[0] != p.parts[-1]:
        return None
    return (len(p.parts), p.parts[0])


def largest_part_multiplicity(p: Partition) -> int:
    """Number of rows of maximal length; 0 for the empty partition."""
    if not p.parts:
        return 0
    return sum(1 for part in p.parts if part == p.parts[0])


def removable_cells(p: Partition) -> list[tuple[int, int]]:
    """Cells (row, col), 1-based, whose removal leaves a partition."""
    parts = p.parts
    out = []
    for x in range(1, len(parts) + 1):
        if x == len(parts) or parts[x - 1] > parts[x]:
            out.append((x, parts[x - 1]))
    return out


def addable_cells(p: Partition) -> list[tuple[int, int]]:
    """Cells (row, col), 1-based, whose addition leaves a partition."""
    parts = p.parts
    out = []
    for x in range(1, len(parts) + 1):
        if x == 1 or parts[x - 2] > parts[x - 1]:
            out.append((x, parts[x - 1] + 1))
    out.append((len(parts) + 1, 1))
    return out


def add_cell(p: Partition, row: int) -> Partition:
    """Partition with one box added at the end of the given 1-based row."""
    parts = list(p.parts)
    if row == len(parts) + 1:
        parts.append(1)
    else:
        parts[row - 1] += 1
    return Partition(tuple(parts))


def remove_cell(p: Partition, row: int) -> Partition:
    """Partition with the last box of the given 1-based row removed."""
    parts = list(p.parts)
    parts[row - 1] -= 1
    if parts[row - 1] == 0:
        parts.pop(row - 1)
    return Partition(tuple(parts))


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n as tuples, in descending lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_bipartitions(n: int) -> Iterator[Bipartition]:
    """All bipartitions of n, each exactly once.

    Order: |first component| descending, then the first component in
    descending lexicographic order, then the second likewise.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    for k in range(n, -1, -1):
        for a in partitions_of(k):
            for b in partitions_of(n - k):
                yield Bipartition(Partition(a), Partition(b))


def format_partition(p: Partition) -> str:
    return ",".join(str(part) for part in p.parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return EMPTY
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition text: {text!r}") from None
    return Partition(parts)


def format_bipartition(bp: Bipartition) -> str:
    return f"{format_partition(bp.first)}|{format_partition(bp.second)}"


def parse_bipartition(text: str) -> Bipartition:
    if text.count("|") != 1:
        raise ValueError(f"bipartition text must contain exactly one '|': {text!r}")
    left, right = text.split("|")
    return Bipartition(parse_partition(left), parse_partition(right))
