import json

import pytest

from partdecomp.cli import main, parse_delta, UsageError
from partdecomp.labeled import LabeledMatrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_abacus_figure(capsys):
    code, out, _ = run(capsys, "abacus", "2,1", "--beads", "7", "--p", "5", "--delta", "6")
    assert code == 0
    assert "marker runner 0" in out
    assert out.splitlines()[0].split() == ["v"]


def test_abacus_core(capsys):
    code, out, _ = run(capsys, "abacus", "5,4", "--beads", "10", "--p", "5")
    assert code == 0
    assert "Gamma  = (2, 2, 3, 1, 2)" in out
    assert "5-core = (3,1)" in out


def test_abacus_empty_json(capsys):
    code, out, _ = run(capsys, "abacus", "-", "--beads", "3", "--p", "3", "--delta", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["abacus"]["marker"] == 2
    assert data["gamma_delta"] == [1, 1, 2]


def test_abacus_too_few_beads(capsys):
    code, _, err = run(capsys, "abacus", "3,1", "--beads", "2", "--p", "3")
    assert code == 2 and "error" in err


def test_multiply_figure(capsys):
    code, out, _ = run(capsys, "multiply", "1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", "1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", "--n", "5")
    assert code == 0
    assert out.startswith("δ^1 * ")


def test_multiply_identity(capsys):
    code, out, _ = run(capsys, "multiply", "1 -1 | 2 -2", "1 -1 | 2 -2")
    assert code == 0 and out.strip() == "δ^0 * 1 -1 | 2 -2"


def test_multiply_mismatched_sizes(capsys):
    code, _, _ = run(capsys, "multiply", "1 -1", "1 -1 | 2 -2")
    assert code == 2


def test_blocks_commands(capsys):
    code, out, _ = run(capsys, "blocks", "--n", "3", "--p", "3", "--delta", "2")
    assert code == 0 and len(out.splitlines()) == 3
    code, out, _ = run(capsys, "blocks", "--n", "4", "--char0", "--delta", "4")
    assert "{(1), (4)}" in out.splitlines()
    code, out, _ = run(capsys, "blocks", "--n", "4", "--p", "3", "--delta", "1")
    line = next(l for l in out.splitlines() if "(1)," in l or "{(1)" in l)
    assert "(4)" in line and "(2^2)" in line


def test_decomp_both_agree(capsys):
    code, out, _ = run(capsys, "decomp", "--n", "3", "--p", "3", "--delta", "2", "--method", "both")
    assert code == 0
    assert out.rstrip().endswith("(none)")


def test_decomp_unsupported(capsys):
    code, _, err = run(capsys, "decomp", "--n", "4", "--p", "3", "--delta", "1", "--method", "theorem")
    assert code == 3 and "unsupported" in err


def test_decomp_small_n_json(capsys):
    code, out, _ = run(capsys, "decomp", "--n", "4", "--p", "5", "--delta", "2", "--method", "both", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["diff"] == []
    assert LabeledMatrix.from_json(data["theorem"]).same_entries(LabeledMatrix.from_json(data["oracle"]))


def test_decomp_csv(capsys):
    code, out, _ = run(capsys, "decomp", "--n", "2", "--p", "3", "--delta", "1", "--format", "csv")
    assert code == 0
    assert LabeledMatrix.from_csv(out).rows[0].size() == 0


def test_same_seed_is_byte_identical(capsys):
    argv = ("decomp", "--n", "3", "--p", "3", "--delta", "2", "--method", "oracle", "--format", "json", "--seed", "5")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_core_is_deterministic(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "core", "--seed", "7", "--format", "json")
    again = run(capsys, "verify", "--suite", "core", "--seed", "7", "--format", "json")[1]
    strip = lambda s: [(r["criterion"], r["passed"], r["detail"]) for r in json.loads(s)]
    assert code == 0 and strip(out) == strip(again)
    assert [r[0] for r in strip(out)] == [1, 2, 3, 11, 12]


def test_bad_delta(capsys):
    code, _, _ = run(capsys, "blocks", "--n", "3", "--p", "3", "--delta", "q")
    assert code == 2
    with pytest.raises(UsageError):
        parse_delta("ss", 3)
    assert parse_delta("5", 3) == 2
    assert parse_delta("ss", None) is None


def test_negative_seed_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["decomp", "--n", "2", "--p", "3", "--delta", "1", "--seed", "-1"])
    assert exc.value.code == 2
