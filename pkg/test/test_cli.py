#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# test/test_cli.py

import io

import pytest

from densecert import (
    __about__,
    cli,
    config,
    constants,
    jsonify,
    localunits,
    quadfield,
    quaternion,
)
from densecert.models import Report


def run_json(capsys, *argv):
    code = cli.main(["--format", "json"] + list(argv))
    out = capsys.readouterr().out
    return code, jsonify.loads(out)


def test_every_command_is_registered():
    assert sorted(cli.COMMANDS) == sorted(
        [
            "g-invariant",
            "density-check",
            "witness",
            "weil",
            "isogclass",
            "modular1",
            "topgen",
            "torus-search",
            "unitary-index",
            "fiber",
            "quaternion-verify",
        ]
    )
    parser = cli.build_parser()
    for name in cli.COMMANDS:
        assert parser.parse_args(_minimal(name)).command == name


def _minimal(name):
    return {
        "g-invariant": [name, "-d", "2", "-p", "2"],
        "density-check": [name, "-d", "2", "-p", "2"],
        "witness": [name, "-d", "2", "-p", "2"],
        "weil": [name, "-p", "2"],
        "isogclass": [name, "-p", "2", "-n", "3"],
        "modular1": [name, "-p", "3", "-n", "3"],
        "topgen": [name, "-p", "5"],
        "torus-search": [name, "-d", "-1", "-p", "5"],
        "unitary-index": [name, "-d", "-1", "-p", "5", "-l", "13"],
        "fiber": [name, "-d", "-1", "-p", "2"],
        "quaternion-verify": [name, "-p", "3", "-l", "2"],
    }[name]


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        cli.main(["--version"])
    assert e.value.code == 0
    assert __about__.__version__ in capsys.readouterr().out


def test_fiber_text(capsys):
    assert cli.main(["fiber", "-d", "-1", "-p", "2"]) == 0
    out = capsys.readouterr().out
    assert "fiber  [found]" in out
    assert "AdditiveTimesMu2" in out


def test_fiber_json(capsys):
    code, report = run_json(capsys, "fiber", "-d", "-1", "-p", "5")
    assert code == 0
    assert isinstance(report, Report)
    assert report.verdict == "found"
    assert report.inputs == {"d": "-1", "p": "5"}
    assert report.certificate["kind"] == "Multiplicative"


def test_uncontained_closure_exits_with_failure(capsys, monkeypatch):
    report = quaternion.ClosureReport(
        3, 2, 1, 1, 48, 24, [12], [3], 4, contained=False
    )
    monkeypatch.setattr(quaternion, "closure_check", lambda *args: report)
    code, result = run_json(capsys, "quaternion-verify", "-p", "3", "-l", "2")
    assert code == 1
    assert result.verdict == "failed"
    assert result.certificate["closure"]["contained"] is False


def test_format_after_subcommand(capsys):
    assert cli.main(["fiber", "-d", "-1", "-p", "3", "--format", "json"]) == 0
    report = jsonify.loads(capsys.readouterr().out)
    assert report.certificate["kind"] == "NormOneTorus"


def test_g_invariant(capsys):
    code, report = run_json(capsys, "g-invariant", "-d", "2", "-p", "2", "--sigma", "all")
    assert code == 1
    assert report.verdict == "not-dense"
    assert report.inputs["sigma"] == "all"
    assert report.certificate["density"]["g"] == "3"
    assert report.certificate["local_bound"]


def test_g_invariant_dense(capsys):
    code, report = run_json(capsys, "g-invariant", "-d", "2", "-p", "7")
    assert code == 0
    assert report.verdict == "dense"
    assert report.certificate["density"]["g"] == "0"


def test_modular1(capsys):
    code, report = run_json(capsys, "modular1", "-p", "3", "-n", "3", "-l", "2", "-m", "4")
    assert code == 0
    assert report.verdict == "verified"


def test_topgen_rejected(capsys):
    code, report = run_json(capsys, "topgen", "-l", "7", "-p", "3")
    assert code == 1
    assert report.verdict == "rejected"


def test_topgen_found(capsys):
    code, report = run_json(capsys, "topgen", "-p", "5")
    assert code == 0
    assert report.verdict == "found"


def test_torus_search_exhausted(capsys):
    code, report = run_json(capsys, "torus-search", "-d", "-1", "-p", "5", "--bound", "12")
    assert code == 1
    assert report.verdict == "exhausted"
    assert report.inputs["bound"] == "12"


def test_torus_search_records_default_bound(capsys):
    code, report = run_json(capsys, "torus-search", "-d", "-1", "-p", "5")
    assert code == 0
    assert report.inputs["bound"] == str(config.TORUS_SEARCH_BOUND)


def test_cap_makes_verdict_inconclusive(capsys, root_two):
    localunits.unit_quotient(root_two, 2)
    with config.override(GENERATOR_SEARCH_BOUND=1):
        code, report = run_json(
            capsys, "density-check", "-d", "2", "-p", "2", "-S", "7", "--sigma", "all"
        )
    assert code == 2
    assert report.verdict == constants.INCONCLUSIVE


def test_density_check_accepts_prime_ideals(capsys):
    _, by_prime = run_json(capsys, "density-check", "-d", "-7", "-p", "2", "-S", "5")
    code, by_ideal = run_json(
        capsys, "density-check", "-d", "-7", "-p", "2", "-S", "(5, 0+5*w)"
    )
    assert code == 0
    assert by_ideal.verdict == by_prime.verdict == "dense"
    assert by_ideal.inputs["S"] == ["(5, 0+5*w)"]
    assert by_ideal.certificate == by_prime.certificate


def test_density_check_replays_a_split_prime(capsys, gaussian):
    P, Pbar = quadfield.prime_ideals_above(gaussian, 13)
    argv = ["density-check", "-d", "-1", "-p", "5", "-S"]
    _, one = run_json(capsys, *argv, P.to_json())
    _, mixed = run_json(capsys, *argv, "2,{}".format(Pbar.to_json()))
    assert one.inputs["S"] == [P.to_json()]
    assert mixed.inputs["S"] == ["2", Pbar.to_json()]
    assert one.verdict in ("dense", "not-dense")


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["fiber", "-d", "-1"],
        ["fiber", "-d", "x", "-p", "2"],
        ["fiber", "-d", "-1", "-p", "4"],
        ["fiber", "-d", "4", "-p", "2"],
        ["isogclass", "-p", "2", "-n", "2"],
        ["weil", "-t", "5", "-p", "2"],
        ["g-invariant", "-d", "-1", "-p", "5", "--sigma", "0"],
        ["g-invariant", "-d", "2", "-p", "2", "--sigma", "first"],
        ["density-check", "-d", "-7", "-p", "2", "-S", "(5"],
        ["density-check", "-d", "-1", "-p", "5", "-S", "(5, 1)"],
        ["density-check", "-d", "-1", "-p", "5", "-S", "(25, 7+1*w)"],
        ["nonsense"],
    ],
)
def test_usage_errors(capsys, argv):
    assert cli.main(argv) == constants.EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error" in captured.err


def test_dispatch_is_deterministic():
    argv = ["weil", "-t", "1", "-p", "2"]
    first, fmt = cli.dispatch(argv)
    second, _ = cli.dispatch(argv)
    assert fmt == "text"
    assert first == second


def test_emit_json_round_trips():
    report, _ = cli.dispatch(["weil", "-t", "1", "-p", "2"])
    stream = io.StringIO()
    cli.emit(report, "json", stream)
    assert stream.getvalue().endswith("\n")
    assert jsonify.loads(stream.getvalue()) == report


@pytest.mark.parametrize(
    "sigma,expected",
    [("none", ()), ("all", (0, 1)), ((1,), (1,))],
)
def test_resolve_sigma(root_two, gaussian, sigma, expected):
    assert cli.resolve_sigma(root_two, sigma) == expected
    if sigma == "all":
        assert cli.resolve_sigma(gaussian, sigma) == ()
