"""Charged box contents, the c-function, and the parameter dictionary.

All arithmetic is exact. The charge is always normalized to (0, s) with
s = s2 - s1; rank e >= 2. Values of the c-function live in (1/e)Z and are
returned as Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .partitions import Bipartition, Partition


@dataclass(frozen=True)
class FockParams:
    """Rank e >= 2 together with the charge, normalized to (0, s)."""

    e: int
    s: int = 0

    def __post_init__(self) -> None:
        if self.e < 2:
            raise ValueError(f"rank e must be >= 2, got {self.e}")

    @property
    def s1(self) -> int:
        return 0

    @property
    def s2(self) -> int:
        return self.s

    @classmethod
    def from_charge(cls, e: int, s1: int, s2: int) -> "FockParams":
        """Normalize an arbitrary integer charge pair by a diagonal shift."""
        return cls(e, s2 - s1)


@dataclass(frozen=True)
class CherednikParams:
    c: Fraction
    d: Fraction


def _diagonal_content_sum(p: Partition) -> int:
    """Sum of y - x over the boxes (x, y) of the Young diagram."""
    total = 0
    for x, length in enumerate(p.parts, start=1):
        total += length * (length + 1) // 2 - length * x
    return total


def content_sum(bp: Bipartition, fp: FockParams) -> int:
    """Sum of charged contents s_j + y - x over all boxes of both components."""
    return (
        _diagonal_content_sum(bp.first)
        + _diagonal_content_sum(bp.second)
        + fp.s * bp.second.size
    )


def c_function(bp: Bipartition, fp: FockParams) -> Fraction:
    """The scalar attached to a charged bipartition; zero iff finite-dimensional
    among unitaries.

    Equals |first| + (s/e)(|second| - |first|) - (2/e) * content_sum.
    """
    n1 = bp.first.size
    n2 = bp.second.size
    return (
        Fraction(n1)
        + Fraction(fp.s * (n2 - n1), fp.e)
        - Fraction(2 * content_sum(bp, fp), fp.e)
    )


def fock_to_cherednik(fp: FockParams) -> CherednikParams:
    """Dictionary to the (c, d) parameter pair: c = 1/e, d = -1/2 + s/e."""
    return CherednikParams(
        c=Fraction(1, fp.e), d=Fraction(-1, 2) + Fraction(fp.s, fp.e)
    )


def swap_components(bp: Bipartition, fp: FockParams) -> tuple[Bipartition, FockParams]:
    """Exchange the two components; on the charge this sends s to e - s."""
    return Bipartition(bp.second, bp.first), FockParams(fp.e, fp.e - fp.s)


@dataclass(frozen=True)
class ChargeSolution:
    s_star: Fraction
    is_integral: bool


def solve_charge_for_zero_c(bp: Bipartition, e: int) -> ChargeSolution:
    """The unique charge s making the c-function vanish, as an exact rational.

    The c-function is affine in s with slope -n/e (the content sum itself is
    affine in s since second-component boxes carry the shift), so the root is
    unique for any nonempty bipartition.
    """
    n = bp.size
    if n == 0:
        raise ValueError("charge solving requires a nonempty bipartition")
    if e < 2:
        raise ValueError(f"rank e must be >= 2, got {e}")
    base = _diagonal_content_sum(bp.first) + _diagonal_content_sum(bp.second)
    s_star = Fraction(e * bp.first.size - 2 * base, n)
    return ChargeSolution(s_star, s_star.denominator == 1)


def rational_str(x: Fraction) -> str:
    """Serialize exactly: "p/q", or just "p" when the denominator is 1."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
