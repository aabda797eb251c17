"""The thirteen acceptance criteria, one pass/fail line each."""

import pytest

from hadarank.reproduce import CHECKS, run_check


@pytest.mark.parametrize("number", [c[0] for c in CHECKS], ids=[f"criterion-{c[0]}" for c in CHECKS])
def test_criterion(number, capsys):
    result = run_check(number)
    with capsys.disabled():
        print("\n" + result.line())
        if not result.passed:
            for line in result.details:
                print("      " + line)
    assert result.passed, "\n".join(result.details)
