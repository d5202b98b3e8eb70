"""Command line surface: JSON shape, exit codes, determinism, CSV."""

import json

import pytest

from drinfeld.cli import main


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_heights_command(capsys):
    code, out = _run(
        capsys, ["heights", "--module", '{"q":2,"r":2,"g":["t","1"]}']
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["h_G"] == "1"
    assert doc["h_J"] == "3"
    assert doc["d"] == 3
    assert doc["schema_version"] == 1


def test_isogeny_verify(capsys):
    module = '{"q":2,"r":2,"g":["t+1","1"]}'
    code, out = _run(
        capsys,
        [
            "isogeny",
            "pushforward",
            "--module",
            module,
            "--f",
            "1*T^0 + T^1",
        ],
    )
    assert code == 0
    target = json.dumps(json.loads(out)["target"])
    code, out = _run(
        capsys,
        [
            "isogeny",
            "verify",
            "--module",
            module,
            "--f",
            "1*T^0 + T^1",
            "--target",
            target,
        ],
    )
    assert code == 0
    assert json.loads(out)["verified"] is True


def test_isogeny_dual(capsys):
    module = '{"q":2,"r":2,"g":["t+1","1"]}'
    code, out = _run(
        capsys,
        ["isogeny", "dual", "--module", module, "--f", "1*T^0 + T^1"],
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["N"] == "t"
    assert doc["degree_identity_ok"] is True


def test_isogeny_remark3(capsys):
    module = '{"q":2,"r":3,"g":["t+1","0","1"]}'
    code, out = _run(
        capsys, ["isogeny", "remark3", "--module", module, "--f0", "1"]
    )
    assert code == 0
    assert json.loads(out)["remark3"]["ok"] is True


def test_harness_exit_zero_and_satisfied(capsys):
    code, out = _run(
        capsys, ["harness", "--q", "2", "--r", "2", "--trials", "20", "--seed", "7"]
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 20
    assert all(row["satisfied"] for row in doc["rows"])


def test_harness_deterministic(capsys):
    argv = ["harness", "--q", "2", "--r", "2", "--trials", "10", "--seed", "3"]
    _, out1 = _run(capsys, argv)
    _, out2 = _run(capsys, argv)
    assert out1 == out2


def test_lattice_commands(capsys):
    code, out = _run(
        capsys, ["lattice", "reduce", "--q", "2", "--matrix", '[["t","0"],["0","1"]]']
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["minima_logs"] == ["1", "0"]
    assert doc["log_covolume"] == "1"
    assert doc["is_reduced"] is True

    code, out = _run(
        capsys,
        [
            "lattice",
            "index",
            "--q",
            "2",
            "--sub",
            '[["t","0"],["0","t"]]',
            "--sup",
            '[["1","0"],["0","1"]]',
        ],
    )
    assert code == 0
    assert json.loads(out)["log_index"] == "2"

    code, out = _run(
        capsys,
        [
            "lattice",
            "analytic-check",
            "--q",
            "2",
            "--sub",
            '[["1","0"],["0","1"]]',
            "--sup",
            '[["1","0"],["0","1"]]',
            "--alpha",
            "t",
        ],
    )
    assert code == 0
    assert json.loads(out)["check"]["ok"] is True


def test_modpoly_compute(capsys):
    code, out = _run(capsys, ["modpoly", "compute", "--q", "2"])
    assert code == 0
    doc = json.loads(out)
    assert doc["height_within_prop65"] is True
    assert abs(doc["rows"][0]["prop65_bound"] - 33.66) < 0.05
    degrees = {(e["i"], e["j"]) for e in doc["phi_t"]["sparse"]}
    assert (3, 0) in degrees and (0, 3) in degrees


def test_modpoly_cross_check(capsys):
    code, out = _run(capsys, ["modpoly", "cross-check", "--q", "2"])
    assert code == 0
    assert json.loads(out)["routes_agree"] is True


def test_csv_output(capsys):
    code, out = _run(
        capsys,
        [
            "harness",
            "--q",
            "2",
            "--r",
            "2",
            "--trials",
            "5",
            "--seed",
            "1",
            "--format",
            "csv",
        ],
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6  # header + five rows
    assert "satisfied" in lines[0]


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["harness", "--bogus"])
    assert exc.value.code == 1


def test_bad_input_exit_code(capsys):
    code = main(["heights", "--module", "{not json"])
    assert code == 1
