import json

import pytest

from fock2.cli import main
from fock2.partitions import parse_bipartition


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", "--e", "2", "--s", "2", "--bp", "2,2|")
    assert code == 0
    payload = json.loads(out)
    assert payload["unitary_fd"] is True
    assert payload["r"] == 2 and payload["q"] == 2
    assert payload["c_function"] == "0"


def test_classify_text(capsys):
    code, out, _ = run(
        capsys, "classify", "--e", "2", "--s", "0", "--bp", "2,1|", "--format", "text"
    )
    assert code == 0
    assert "not-rectangle" in out


def test_abacus_text(capsys):
    code, out, _ = run(
        capsys, "abacus", "--e", "2", "--s", "0", "--bp", "1|1", "--window=-2..2"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "●●○●○" and lines[1] == "●●○●○"
    assert "not totally 2-periodic" in out


def test_abacus_json(capsys):
    code, out, _ = run(
        capsys, "abacus", "--e", "2", "--s", "2", "--bp", "2,2|", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["totally_periodic"] is True
    assert payload["row1"]["beads_above_threshold"] == [1, 2]


def test_crystal_dot_counts(capsys):
    code, out, _ = run(
        capsys, "crystal", "--nmax", "1", "--e", "2", "--s", "1", "--format", "dot"
    )
    assert code == 0
    node_lines = [l for l in out.splitlines() if l.endswith('";')]
    edge_lines = [l for l in out.splitlines() if " -> " in l]
    assert len(node_lines) == 3 and len(edge_lines) == 2


def test_enumerate_round_trip(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == len(set(lines)) == 36
    for line in lines:
        assert str(parse_bipartition(line)) == line


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "2", "--e", "2", "--s", "0..2")
    assert code == 0
    report = json.loads(out)
    assert report["total_violations"] == 0


def test_usage_errors(capsys):
    code, _, err = run(capsys, "classify", "--e", "1", "--s", "0", "--bp", "1|")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "classify", "--e", "2", "--s", "0", "--bp", "oops")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--e", "2"])
    assert exc.value.code == 2
