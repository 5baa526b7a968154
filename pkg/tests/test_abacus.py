import pytest

from fock2.abacus import (
    Abacus,
    AbacusRow,
    abacus_to_bipartition,
    build_abacus,
    detect_violating_pair,
    first_e_period,
    is_totally_e_periodic,
    nonzero_columns_from_abacus,
    render_abacus,
)
from fock2.fock import FockParams
from fock2.partitions import Bipartition, Partition, enumerate_bipartitions


def BP(first, second=()):
    return Bipartition(Partition(tuple(first)), Partition(tuple(second)))


def beads_in(row, lo, hi):
    return {c for c in range(lo, hi + 1) if row.is_bead(c)}


def test_build_vacuum():
    ab = build_abacus(BP(()), FockParams(2, 0))
    assert ab.row1 == AbacusRow(0) and ab.row2 == AbacusRow(0)


def test_build_examples():
    ab = build_abacus(BP((2, 2)), FockParams(2, 2))
    assert beads_in(ab.row1, -4, 4) == {-4, -3, -2, 1, 2}
    assert beads_in(ab.row2, -4, 4) == {-4, -3, -2, -1, 0, 1, 2}

    ab = build_abacus(BP((1,), (1,)), FockParams(2, 0))
    for row in (ab.row1, ab.row2):
        assert beads_in(row, -3, 3) == {-3, -2, -1, 1}


def test_row_normalization_and_removal():
    row = AbacusRow(0, frozenset({1}))
    assert row.threshold == 1 and not row.extras
    row = AbacusRow(0, frozenset({2}))
    removed = row.remove([0, -1])
    assert removed.threshold == -2
    assert removed.extras == frozenset({2})
    with pytest.raises(ValueError):
        row.remove([5])


def test_first_e_period_examples():
    ab = build_abacus(BP((2, 2)), FockParams(2, 2))
    per = first_e_period(ab, 2)
    assert per.beads == ((1, 2), (1, 1))

    ab = build_abacus(BP((1,), (1,)), FockParams(2, 0))
    assert first_e_period(ab, 2) is None

    ab = build_abacus(BP(()), FockParams(2, 3))
    per = first_e_period(ab, 2)
    assert per.beads == ((2, 3), (2, 2))


def test_totally_periodic_examples():
    assert is_totally_e_periodic(BP(()), FockParams(2, 1))[0]

    periodic, decomp = is_totally_e_periodic(BP((2, 2)), FockParams(2, 2))
    assert periodic
    # Per^1 is the bottom-row pair; the residual is already a vacuum abacus
    # (hand decomposition can keep stripping it: row2 {2,1}, row2 {0,-1}, ...)
    assert decomp.periods[0].beads == ((1, 2), (1, 1))
    assert decomp.residual_charge == (-2, 2)

    periodic, decomp = is_totally_e_periodic(BP((1,), (1,)), FockParams(2, 0))
    assert not periodic and not decomp.totally_periodic


def test_vacuum_always_periodic():
    for e in range(2, 7):
        for s in range(-6, 7):
            assert is_totally_e_periodic(BP(()), FockParams(e, s))[0]


def test_detect_violating_pair_examples():
    fp = FockParams(2, 1)
    ab = build_abacus(BP((1,), (1,)), fp)
    per = first_e_period(ab, 2)
    assert per.beads == ((2, 2), (1, 1))
    assert detect_violating_pair(ab, per)

    # period entirely in one row: pattern undefined
    ab = build_abacus(BP((2, 2)), FockParams(2, 2))
    assert not detect_violating_pair(ab, first_e_period(ab, 2))

    # vacuum beads block the pattern
    ab = build_abacus(BP(()), FockParams(2, 1))
    per = first_e_period(ab, 2)
    assert per.beads == ((2, 1), (1, 0))
    assert not detect_violating_pair(ab, per)


def test_nonzero_columns():
    assert nonzero_columns_from_abacus(build_abacus(BP(()), FockParams(2, 3))) == 0
    assert nonzero_columns_from_abacus(build_abacus(BP((2, 2)), FockParams(2, 2))) == 2
    assert nonzero_columns_from_abacus(build_abacus(BP((1,), (1,)), FockParams(2, 0))) == 2
    for n in range(7):
        for bp in enumerate_bipartitions(n):
            ab = build_abacus(bp, FockParams(3, 2))
            expected = bp.first.columns + bp.second.columns
            assert nonzero_columns_from_abacus(ab) == expected


def test_render():
    ab = build_abacus(BP(()), FockParams(2, 0))
    assert render_abacus(ab, -2, 2).splitlines()[:2] == ["●●●○○", "●●●○○"]

    ab = build_abacus(BP((1,), (1,)), FockParams(2, 0))
    assert render_abacus(ab, -2, 2).splitlines()[:2] == ["●●○●○", "●●○●○"]

    ab = build_abacus(BP((2, 2)), FockParams(2, 2))
    assert render_abacus(ab, -3, 3).splitlines()[:2] == ["●●●●●●○", "●●○○●●○"]

    with pytest.raises(ValueError):
        render_abacus(ab, -1, 1)


def test_round_trip():
    for n in range(11):
        for bp in enumerate_bipartitions(n):
            for s in range(-5, 6):
                fp = FockParams(3, s)
                back, charge = abacus_to_bipartition(build_abacus(bp, fp))
                assert back == bp
                assert charge == (0, s)


def test_period_disjointness_and_stabilization():
    for n in range(8):
        for bp in enumerate_bipartitions(n):
            for e in (2, 3):
                for s in range(-3, 4):
                    periodic, decomp = is_totally_e_periodic(bp, FockParams(e, s))
                    seen = set()
                    for per in decomp.periods:
                        assert not (set(per.beads) & seen)
                        seen |= set(per.beads)
                    if periodic:
                        assert len(decomp.periods) <= n + e * (abs(s) + e) + 4
