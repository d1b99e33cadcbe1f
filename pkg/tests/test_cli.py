from pathlib import Path

import pytest

from app.api.schemas import SuiteResult, VerificationReport
from app.core.config import get_settings
from app.core.enums import VerifyTarget
from app.scripts import cli
from app.services import suites


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


def test_bounds_prints_the_case_record(capsys) -> None:
    code = cli.main(["bounds", "--s", "1", "--t", "2", "--p", "1"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == (
        "case=A_lower lower=0.5 upper=0.7071067811865476 sharp=true strict=both"
    )


def test_bounds_of_the_general_ratio(capsys) -> None:
    code = cli.main(["bounds", "--r", "3", "--s", "1", "--t", "2", "--p", "2"])

    out = capsys.readouterr().out
    assert code == cli.EXIT_OK
    assert out.startswith("case=thm33 lower=1.5198")
    assert "upper=2.0 sharp=false" in out


def test_bounds_not_covered(capsys) -> None:
    code = cli.main(["bounds", "--s", "1", "--t", "3", "--p", "2.5"])

    assert code == cli.EXIT_NOT_COVERED
    assert capsys.readouterr().out.strip() == "not covered: p lies strictly between 2s and 2(s+t)/3"


@pytest.mark.parametrize(
    "argv,message",
    [
        (["--s", "2", "--t", "1", "--p", "1"], "expected s < t"),
        (["--s", "1", "--t", "1", "--p", "1"], "expected s < t"),
        (["--s", "0", "--t", "1", "--p", "1"], "s must be nonzero"),
        (["--r", "1.5", "--s", "1", "--t", "2", "--p", "1"], "expected 0 < s < t < r"),
        (["--r", "3", "--s", "1", "--t", "2", "--p", "-1"], "expected p > 0"),
    ],
)
def test_bounds_rejects_invalid_parameters_as_usage(argv, message, capsys) -> None:
    code = cli.main(["bounds", *argv])

    assert code == cli.EXIT_USAGE
    err = capsys.readouterr().err
    assert err.startswith("invalid parameters:")
    assert message in err


def test_classify(capsys) -> None:
    assert cli.main(["classify", "--r", "0.3", "--q", "1.5"]) == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "Decreasing rule=0<r<1, q>=max(2r, 2(r+1)/3)"

    assert cli.main(["classify", "--r", "2.5", "--q", "2.2", "--function", "f"]) == cli.EXIT_OK
    assert capsys.readouterr().out.startswith("Unknown rule=")

    assert cli.main(["classify", "--aq", "4"]) == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == "A_q = [2.5, inf)"


def test_classify_usage_errors() -> None:
    assert cli.main(["classify", "--r", "0.3"]) == cli.EXIT_USAGE
    assert cli.main(["classify", "--r", "0", "--q", "1"]) == cli.EXIT_NOT_COVERED


def test_verify_prints_reports_and_summary(capsys) -> None:
    code = cli.main(["verify", "--target", "kouba", "--samples", "500"])

    lines = capsys.readouterr().out.strip().splitlines()
    assert code == cli.EXIT_OK
    assert lines[0] == "target=two-sided intro(p=1.25)"
    assert lines[-1] == "suite=kouba reports=3 violations=0"


def test_verify_exit_code_on_violations(monkeypatch, capsys) -> None:
    def failing(target: VerifyTarget, cfg) -> SuiteResult:
        return SuiteResult(target=target, reports=[VerificationReport(label="broken", checked=1, violations=1)])

    monkeypatch.setattr(suites, "run_target", failing)

    assert cli.main(["verify", "--target", "thm31"]) == cli.EXIT_VIOLATIONS
    assert capsys.readouterr().out.strip().endswith("suite=thm31 reports=1 violations=1")


def test_verify_usage_errors() -> None:
    assert cli.main(["verify", "--target", "nope"]) == cli.EXIT_USAGE
    assert cli.main(["verify", "--target", "aq", "--samples", "-1"]) == cli.EXIT_USAGE
    assert cli.main(["verify", "--target", "aq", "--x-min", "5", "--x-max", "1"]) == cli.EXIT_USAGE
    assert cli.main([]) == cli.EXIT_USAGE


def test_help_exits_cleanly() -> None:
    assert cli.main(["--help"]) == cli.EXIT_OK


def test_seed_default_comes_from_the_environment(monkeypatch) -> None:
    monkeypatch.setenv("MEANBOUNDS_SEED", "7")
    get_settings.cache_clear()

    args = cli.build_parser().parse_args(["verify", "--target", "aq"])

    assert args.seed == 7
    assert args.samples == 10_000


def test_sweep_writes_the_grid(tmp_path: Path, capsys) -> None:
    target = tmp_path / "grid.csv"

    code = cli.main(["sweep", "--output", str(target), "--r-steps", "3", "--q-steps", "3"])

    assert code == cli.EXIT_OK
    assert capsys.readouterr().out.strip() == f"wrote {target}"
    assert target.read_text().splitlines()[1] == "-2,-2,dec,dec"


def test_sweep_into_a_missing_directory(tmp_path: Path, capsys) -> None:
    code = cli.main(["sweep", "--output", str(tmp_path / "missing" / "grid.csv")])

    assert code == cli.EXIT_USAGE
    assert "cannot write" in capsys.readouterr().err
