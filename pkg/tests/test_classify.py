import pytest

from fock2.classify import (
    CASE_TAGS,
    NONE_FOUND,
    NOT_SOURCE,
    VIOLATING_PAIR,
    check_griffeth_case,
    classify_theorem,
    fd_obstruction,
    verify_range,
)
from fock2.fock import FockParams
from fock2.partitions import Bipartition, Partition


def BP(first, second=()):
    return Bipartition(Partition(tuple(first)), Partition(tuple(second)))


def test_classify_examples():
    res = classify_theorem(BP((2, 2)), FockParams(2, 2))
    assert res.unitary_fd and res.reason == "rectangle-match"
    assert (res.witness.rows, res.witness.columns) == (2, 2)

    for e, s in [(2, 0), (3, 1), (4, -2)]:
        assert not classify_theorem(BP((2, 1)), FockParams(e, s)).unitary_fd
        assert not classify_theorem(BP((1,), (1,)), FockParams(e, s)).unitary_fd

    res = classify_theorem(BP((), (2, 2)), FockParams(2, 0))
    assert res.unitary_fd and res.witness.component == 2

    with pytest.raises(ValueError):
        classify_theorem(BP(()), FockParams(2, 0))


def test_classify_wrong_charge():
    res = classify_theorem(BP((2, 2)), FockParams(2, 1))
    assert not res.unitary_fd and res.reason == "wrong-charge"
    assert res.witness.required_s == 2


def test_case_a_examples():
    rep = check_griffeth_case("a", BP((1,), (1,)), FockParams(2, 1))
    assert rep.satisfied
    assert all(t.holds for t in rep.trace)

    rep = check_griffeth_case("a", BP((2, 2), (1,)), FockParams(2, 0))
    assert not rep.satisfied
    assert any(not t.holds for t in rep.trace)


def test_case_g_never_satisfied():
    for bp in [BP((1,), (1,)), BP((3, 2), (1, 1))]:
        for e in (2, 3):
            for s in (-2, 0, 3):
                assert not check_griffeth_case("g", bp, FockParams(e, s)).satisfied


def test_case_requires_both_nonempty():
    with pytest.raises(ValueError):
        check_griffeth_case("a", BP((2,)), FockParams(2, 0))


def test_case_reduction_trace():
    rep = check_griffeth_case("d", BP((2, 1), (1,)), FockParams(3, 1))
    assert rep.case == "d"
    assert "transposed" in rep.trace[0].text


def test_fd_obstruction_examples():
    assert fd_obstruction(BP((1,), (1,)), FockParams(2, 0)) == NOT_SOURCE
    assert fd_obstruction(BP((1,), (1,)), FockParams(2, 1)) == VIOLATING_PAIR
    assert fd_obstruction(BP((2, 2)), FockParams(2, 2)) == NONE_FOUND


def test_verify_range_small():
    report = verify_range(2, [2], range(0, 3))
    assert report["total_violations"] == 0
    assert report["P5"]["checked"] > 0
    # the 1x2 rectangle hits at s = e - 2 + 1 = 1
    assert classify_theorem(BP((2,)), FockParams(2, 1)).unitary_fd

    with pytest.raises(ValueError):
        verify_range(0, [2])
    with pytest.raises(ValueError):
        verify_range(2, [])


def test_verify_range_medium():
    report = verify_range(4, [2, 3], range(-3, 4))
    assert report["total_violations"] == 0
    for prop in ("P1", "P2", "P3", "P4", "P6", "P7"):
        assert report[prop]["violations"] == []
    assert report["P3"]["checked"] > 0


def test_all_case_tags_evaluate():
    bp = BP((2, 1), (2,))
    for tag in CASE_TAGS:
        rep = check_griffeth_case(tag, bp, FockParams(3, 2))
        assert rep.case == tag
        assert isinstance(rep.satisfied, bool)
