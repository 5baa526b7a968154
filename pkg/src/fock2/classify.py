"""Classification of simultaneously unitary and finite-dimensional labels,
the translated case-by-case unitarity inequalities, obstruction certificates,
and the exhaustive verification harness.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .abacus import (
    build_abacus,
    detect_violating_pair,
    first_e_period,
    is_totally_e_periodic,
    nonzero_columns_from_abacus,
)
from .crystal import is_source_vertex
from .fock import FockParams, c_function, content_sum, swap_components
from .partitions import (
    Bipartition,
    Partition,
    enumerate_bipartitions,
    format_bipartition,
    largest_part_multiplicity,
    rectangle_dims,
    transpose,
)


@dataclass(frozen=True)
class Witness:
    component: int
    rows: int
    columns: int
    required_s: int


@dataclass(frozen=True)
class ClassificationResult:
    unitary_fd: bool
    reason: str  # rectangle-match | not-rectangle | both-components-nonempty | wrong-charge
    witness: Optional[Witness] = None


def classify_theorem(bp: Bipartition, fp: FockParams) -> ClassificationResult:
    """True iff exactly one component is nonempty, that component is an
    r x q rectangle, and the charge matches: s = e - q + r for a nonempty
    first component, s = q - r for a nonempty second (the swap image).
    """
    if bp.size == 0:
        raise ValueError("classification requires a nonempty bipartition")
    if bp.first and bp.second:
        return ClassificationResult(False, "both-components-nonempty")
    if bp.first:
        component, rect = 1, rectangle_dims(bp.first)
    else:
        component, rect = 2, rectangle_dims(bp.second)
    if rect is None:
        return ClassificationResult(False, "not-rectangle")
    r, q = rect
    required_s = fp.e - q + r if component == 1 else q - r
    witness = Witness(component, r, q, required_s)
    if fp.s == required_s:
        return ClassificationResult(True, "rectangle-match", witness)
    return ClassificationResult(False, "wrong-charge", witness)


@dataclass(frozen=True)
class TraceEntry:
    text: str
    left: Optional[int] = None
    right: Optional[int] = None
    holds: bool = True


@dataclass(frozen=True)
class CaseReport:
    case: str
    satisfied: bool
    trace: tuple[TraceEntry, ...] = ()


def _ineq(text: str, left: int, right: int) -> TraceEntry:
    return TraceEntry(text, left, right, left <= right)


def _stats(bp: Bipartition) -> tuple[int, int, int, int, int, int]:
    f, g = bp.first, bp.second
    return (
        f.columns,
        f.rows,
        largest_part_multiplicity(f),
        g.columns,
        g.rows,
        largest_part_multiplicity(g),
    )


def check_griffeth_case(case: str, bp: Bipartition, fp: FockParams) -> CaseReport:
    """Evaluate one of the translated unitarity case conditions (a)-(g) for a
    bipartition with both components nonempty. Cases (d) and (e) reduce to
    (b) and (c) on the component-wise transpose with charge negated.
    """
    if not (bp.first and bp.second):
        raise ValueError("case checks require both components nonempty")
    e, s = fp.e, fp.s
    col1, row1, mult1, col2, row2, mult2 = _stats(bp)

    if case == "a":
        trace = (
            _ineq("-s <= cols(l1)+rows(l2)-1", -s, col1 + row2 - 1),
            _ineq("cols(l1)+rows(l2)-1 <= e-s", col1 + row2 - 1, e - s),
            _ineq("s-e <= cols(l2)+rows(l1)-1", s - e, col2 + row1 - 1),
            _ineq("cols(l2)+rows(l1)-1 <= s", col2 + row1 - 1, s),
        )
    elif case == "b":
        trace = (
            _ineq(
                "cols(l1)-mult(l1)+rows(l2) <= e-s",
                col1 - mult1 + row2,
                e - s,
            ),
            _ineq("cols(l2)+rows(l1)-1 <= s", col2 + row1 - 1, s),
        )
    elif case == "c":
        trace = (
            _ineq(
                "cols(l2)-mult(l2)+rows(l1) <= s",
                col2 - mult2 + row1,
                s,
            ),
            _ineq("cols(l1)+rows(l2)-1 <= e-s", col1 + row2 - 1, e - s),
        )
    elif case in ("d", "e"):
        reduced_bp = Bipartition(transpose(bp.first), transpose(bp.second))
        reduced_fp = FockParams(e, -s)
        inner = check_griffeth_case({"d": "b", "e": "c"}[case], reduced_bp, reduced_fp)
        note = TraceEntry(
            f"reduction: case ({case}) = case ({inner.case}) on transposed components with charge -s"
        )
        return CaseReport(case, inner.satisfied, (note,) + inner.trace)
    elif case == "f":
        trace = (
            _ineq(
                "cols(l1)-mult(l1)+rows(l2) <= e-s",
                col1 - mult1 + row2,
                e - s,
            ),
            _ineq(
                "cols(l2)-mult(l2)+rows(l1) <= s",
                col2 - mult2 + row1,
                s,
            ),
        )
    elif case == "g":
        return CaseReport(
            "g",
            False,
            (TraceEntry("does not arise for level-2 Fock parameters", holds=False),),
        )
    else:
        raise ValueError(f"unknown case tag {case!r}")
    return CaseReport(case, all(t.holds for t in trace), trace)


CASE_TAGS = ("a", "b", "c", "d", "e", "f", "g")

NOT_SOURCE = "not-sl_e-source"
TOO_FEW_COLUMNS = "too-few-columns"
VIOLATING_PAIR = "violating-pair"
NONE_FOUND = "none-found"


def fd_obstruction(bp: Bipartition, fp: FockParams) -> str:
    """First certifiable obstruction to finite-dimensionality, if any."""
    periodic, _ = is_totally_e_periodic(bp, fp)
    if not periodic:
        return NOT_SOURCE
    if bp.first and bp.second:
        ab = build_abacus(bp, fp)
        if nonzero_columns_from_abacus(ab) < fp.e:
            # impossible for a periodic abacus; flagged as an inconsistency
            return TOO_FEW_COLUMNS
        per = first_e_period(ab, fp.e)
        if per is not None and detect_violating_pair(ab, per):
            return VIOLATING_PAIR
    return NONE_FOUND


PROPERTIES = ("P1", "P2", "P3", "P4", "P5", "P6", "P7")


def _violation(bp: Bipartition, e: int, s: int, detail: str) -> dict:
    return {"bipartition": format_bipartition(bp), "e": e, "s": s, "detail": detail}


def _default_s_values(e: int) -> list[int]:
    return list(range(-2 * e, 2 * e + 1))


def verify_range(
    n_max: int,
    e_values: Iterable[int],
    s_values: Optional[Iterable[int]] = None,
) -> dict:
    """Run properties P1-P7 over the grid; returns a JSON-ready report with
    per-property checked counts and violation records.

    P1  satisfied case in {a,b,c,f} => total columns <= e
    P2  totally periodic and both nonempty => total columns >= e
    P3  both nonempty, columns == e, periodic => violating pair in Per^1
    P4  satisfied case (d/e via reduction) => certified fd-obstruction
    P5  rectangle suite: c-function root, content average, periodicity,
        classifier agreement, and nonvanishing at all other charges
    P6  classifier invariant under component swap with s -> e-s
    P7  crystal source vertex == totally periodic abacus
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    e_values = sorted(set(int(e) for e in e_values))
    if not e_values:
        raise ValueError("empty rank set")
    fixed_s = None if s_values is None else sorted(set(int(s) for s in s_values))

    report = {p: {"checked": 0, "violations": []} for p in PROPERTIES}

    def record(prop: str, ok: bool, bp: Bipartition, e: int, s: int, detail: str) -> None:
        report[prop]["checked"] += 1
        if not ok:
            report[prop]["violations"].append(_violation(bp, e, s, detail))

    all_bps = [bp for n in range(n_max + 1) for bp in enumerate_bipartitions(n)]

    for e in e_values:
        for s in fixed_s if fixed_s is not None else _default_s_values(e):
            fp = FockParams(e, s)
            for bp in all_bps:
                both = bool(bp.first) and bool(bp.second)
                if both:
                    ab = build_abacus(bp, fp)
                    cols = nonzero_columns_from_abacus(ab)
                    periodic, _ = is_totally_e_periodic(bp, fp)
                    satisfied = [
                        tag
                        for tag in CASE_TAGS
                        if check_griffeth_case(tag, bp, fp).satisfied
                    ]
                    for tag in satisfied:
                        if tag in ("a", "b", "c", "f"):
                            record(
                                "P1",
                                cols <= e,
                                bp,
                                e,
                                s,
                                f"case ({tag}) satisfied but {cols} columns > e",
                            )
                    if periodic:
                        record(
                            "P2",
                            cols >= e,
                            bp,
                            e,
                            s,
                            f"totally periodic with {cols} columns < e",
                        )
                        if cols == e:
                            per = first_e_period(ab, e)
                            ok = per is not None and detect_violating_pair(ab, per)
                            record(
                                "P3",
                                ok,
                                bp,
                                e,
                                s,
                                "columns == e, periodic, but no violating pair",
                            )
                    for tag in satisfied:
                        if tag in ("d", "e"):
                            red_bp = Bipartition(
                                transpose(bp.first), transpose(bp.second)
                            )
                            red_fp = FockParams(e, -s)
                            obstruction = fd_obstruction(red_bp, red_fp)
                        else:
                            obstruction = fd_obstruction(bp, fp)
                        record(
                            "P4",
                            obstruction != NONE_FOUND,
                            bp,
                            e,
                            s,
                            f"case ({tag}) satisfied but no fd-obstruction found",
                        )
                if bp.size >= 1:
                    res = classify_theorem(bp, fp)
                    swapped_bp, swapped_fp = swap_components(bp, fp)
                    res_sw = classify_theorem(swapped_bp, swapped_fp)
                    record(
                        "P6",
                        res.unitary_fd == res_sw.unitary_fd,
                        bp,
                        e,
                        s,
                        "classifier changed under component swap",
                    )
                record(
                    "P7",
                    is_source_vertex(bp, fp) == is_totally_e_periodic(bp, fp)[0],
                    bp,
                    e,
                    s,
                    "source-vertex and total periodicity disagree",
                )

    # P5: rectangle suite
    for e in e_values:
        for q in range(1, n_max + 1):
            for r in range(1, n_max // q + 1):
                rect = Bipartition(Partition((q,) * r), Partition())
                n = q * r
                s_star = e - q + r
                fp = FockParams(e, s_star)
                ok = (
                    c_function(rect, fp) == 0
                    and 2 * content_sum(rect, fp) == (q - r) * n
                    and is_totally_e_periodic(rect, fp)[0]
                    and classify_theorem(rect, fp).unitary_fd
                )
                for s in fixed_s if fixed_s is not None else _default_s_values(e):
                    if s != s_star and c_function(rect, FockParams(e, s)) == 0:
                        ok = False
                record(
                    "P5",
                    ok,
                    rect,
                    e,
                    s_star,
                    f"rectangle suite failed for {q}x{r} rectangle",
                )

    report["total_violations"] = sum(
        len(report[p]["violations"]) for p in PROPERTIES
    )
    return report
