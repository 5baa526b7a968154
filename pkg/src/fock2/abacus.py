"""Two-row abacus of a charged bipartition and e-period extraction.

Each row is a cofinite-below bead set on columns indexed by Z, stored as a
threshold (every column <= threshold is a bead) plus a finite set of bead
columns above it. Row 1 (bottom) encodes the transpose of the first
component, row 2 (top) the transpose of the second; the bead columns of row
j are the beta-numbers (lambda^j)^t_i + s_j - i + 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional

from .fock import FockParams
from .partitions import Bipartition, Partition, transpose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbacusRow:
    threshold: int
    extras: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        t = self.threshold
        extras = set(self.extras)
        if any(c <= t for c in extras):
            raise ValueError("extras must lie strictly above the threshold")
        # canonical form: absorb a bead sitting just above the threshold
        while t + 1 in extras:
            t += 1
            extras.discard(t)
        object.__setattr__(self, "threshold", t)
        object.__setattr__(self, "extras", frozenset(extras))

    def is_bead(self, col: int) -> bool:
        return col <= self.threshold or col in self.extras

    @property
    def rightmost_bead(self) -> int:
        return max(self.extras) if self.extras else self.threshold

    @property
    def charge(self) -> int:
        return self.threshold + len(self.extras)

    @property
    def is_vacuum(self) -> bool:
        return not self.extras

    def remove(self, cols: Iterable[int]) -> "AbacusRow":
        cols = set(cols)
        for c in cols:
            if not self.is_bead(c):
                raise ValueError(f"no bead at column {c}")
        t = self.threshold
        low = [c for c in cols if c <= t]
        if low:
            new_t = min(low) - 1
            extras = set(self.extras) | set(range(new_t + 1, t + 1))
        else:
            new_t = t
            extras = set(self.extras)
        extras -= cols
        return AbacusRow(new_t, frozenset(extras))

    def to_partition(self) -> Partition:
        """Read off the partition encoded by this row (independent of charge)."""
        col_lengths = []
        for i, beta in enumerate(sorted(self.extras, reverse=True), start=1):
            col_lengths.append(beta - self.charge + i - 1)
        return transpose(Partition(tuple(col_lengths)))


@dataclass(frozen=True)
class Abacus:
    row1: AbacusRow
    row2: AbacusRow

    def row(self, j: int) -> AbacusRow:
        if j == 1:
            return self.row1
        if j == 2:
            return self.row2
        raise ValueError(f"row index must be 1 or 2, got {j}")

    @property
    def rightmost_bead(self) -> int:
        return max(self.row1.rightmost_bead, self.row2.rightmost_bead)

    @property
    def is_vacuum(self) -> bool:
        return self.row1.is_vacuum and self.row2.is_vacuum

    def remove(self, beads: Iterable[tuple[int, int]]) -> "Abacus":
        beads = list(beads)
        return Abacus(
            row1=self.row1.remove(c for j, c in beads if j == 1),
            row2=self.row2.remove(c for j, c in beads if j == 2),
        )

    def to_json(self) -> dict:
        return {
            "row1": {
                "threshold": self.row1.threshold,
                "beads_above_threshold": sorted(self.row1.extras),
            },
            "row2": {
                "threshold": self.row2.threshold,
                "beads_above_threshold": sorted(self.row2.extras),
            },
        }


@dataclass(frozen=True)
class EPeriod:
    """e beads (row, column) in consecutive decreasing columns, rows weakly
    decreasing from 2 to 1."""

    beads: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        rows = [j for j, _ in self.beads]
        cols = [c for _, c in self.beads]
        if any(rows[m] < rows[m + 1] for m in range(len(rows) - 1)):
            raise ValueError("period rows must weakly decrease from 2 to 1")
        if any(cols[m + 1] != cols[m] - 1 for m in range(len(cols) - 1)):
            raise ValueError("period columns must be consecutive and decreasing")

    @property
    def top_row_count(self) -> int:
        return sum(1 for j, _ in self.beads if j == 2)


@dataclass(frozen=True)
class PeriodDecomposition:
    periods: tuple[EPeriod, ...]
    totally_periodic: bool
    residual_charge: Optional[tuple[int, int]] = None


def _row_from_partition(p: Partition, charge: int) -> AbacusRow:
    pt = transpose(p)
    cols = p.columns
    extras = frozenset(
        pt.parts[i - 1] + charge - i + 1 for i in range(1, cols + 1)
    )
    return AbacusRow(charge - cols, extras)


def build_abacus(bp: Bipartition, fp: FockParams) -> Abacus:
    return Abacus(
        row1=_row_from_partition(bp.first, fp.s1),
        row2=_row_from_partition(bp.second, fp.s2),
    )


def abacus_to_bipartition(ab: Abacus) -> tuple[Bipartition, tuple[int, int]]:
    """Inverse of build_abacus: the bipartition and the (s1, s2) charge pair."""
    return (
        Bipartition(ab.row1.to_partition(), ab.row2.to_partition()),
        (ab.row1.charge, ab.row2.charge),
    )


def first_e_period(ab: Abacus, e: int) -> Optional[EPeriod]:
    """The e-period of the abacus, or None.

    The period is forced bead by bead: a top-row bead is usable only when the
    column below it is a space (in which case the bottom row offers no bead
    there), so at every step at most one legal choice exists.
    """
    if e < 2:
        raise ValueError(f"e must be >= 2, got {e}")
    start = ab.rightmost_bead
    beads: list[tuple[int, int]] = []
    on_top = True
    for m in range(e):
        col = start - m
        bottom = ab.row1.is_bead(col)
        top = ab.row2.is_bead(col)
        if on_top and top and not bottom:
            beads.append((2, col))
        elif bottom:
            beads.append((1, col))
            on_top = False
        else:
            return None
    return EPeriod(tuple(beads))


def is_totally_e_periodic(
    bp: Bipartition, fp: FockParams
) -> tuple[bool, PeriodDecomposition]:
    """Strip e-periods until the abacus is a vacuum (two full initial rows)
    or no period exists.

    A vacuum residual is declared totally periodic: vacuum abaci always admit
    a next period (checked on the test grid), so the infinite condition is
    decidable.
    """
    ab = build_abacus(bp, fp)
    bound = bp.size + fp.e * (abs(fp.s) + fp.e) + 4
    periods: list[EPeriod] = []
    while not ab.is_vacuum:
        per = first_e_period(ab, fp.e)
        if per is None:
            return False, PeriodDecomposition(tuple(periods), False)
        periods.append(per)
        ab = ab.remove(per.beads)
        if len(periods) > bound:
            raise AssertionError(
                f"period stripping did not stabilize within {bound} removals"
            )
    charge = (ab.row1.charge, ab.row2.charge)
    return True, PeriodDecomposition(tuple(periods), True, charge)


def detect_violating_pair(ab: Abacus, per1: EPeriod) -> bool:
    """Check the two-space pattern left of a period split across both rows.

    Requires the period to start with a >= 1 top-row beads and finish with
    >= 1 bottom-row beads; True iff the column just left of the lowest
    bottom-row period bead is a space in the bottom row and the column just
    left of the lowest top-row period bead is a space in the top row.
    """
    a = per1.top_row_count
    if a == 0 or a == len(per1.beads):
        logger.debug("period lies in a single row; pattern undefined: %s", per1)
        return False
    last_top_col = per1.beads[a - 1][1]
    last_bottom_col = per1.beads[-1][1]
    return not ab.row1.is_bead(last_bottom_col - 1) and not ab.row2.is_bead(
        last_top_col - 1
    )


def nonzero_columns_from_abacus(ab: Abacus) -> int:
    """Beads with at least one space strictly to their left, over both rows.

    In canonical form these are exactly the above-threshold beads: every
    column below the threshold is a bead, and the column threshold+1 is a
    space sitting left of each extra.
    """
    return len(ab.row1.extras) + len(ab.row2.extras)


def render_abacus(ab: Abacus, lo: int, hi: int) -> str:
    """Two bead rows (top row first) over the column window [lo, hi], plus a
    ones-digit column ruler."""
    if lo > hi:
        raise ValueError(f"empty window {lo}..{hi}")
    for row in (ab.row1, ab.row2):
        if row.threshold > hi or any(c < lo or c > hi for c in row.extras):
            raise ValueError(
                f"window {lo}..{hi} too small for beads of {row}"
            )
    def line(row: AbacusRow) -> str:
        return "".join("●" if row.is_bead(c) else "○" for c in range(lo, hi + 1))

    ruler = "".join(str(abs(c) % 10) for c in range(lo, hi + 1))
    return "\n".join([line(ab.row2), line(ab.row1), ruler, f"columns {lo}..{hi}"])
