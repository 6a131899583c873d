"""One test per acceptance criterion; each prints a single PASS/FAIL line.

The lines are collected into a summary section at the end of the run; see
also ``semiclassical verify`` for the same report with details.
"""
import pytest
from conftest import ACCEPTANCE_LINES

from semiclassical import verify


@pytest.mark.parametrize("number", sorted(verify.CRITERIA))
def test_criterion(number):
    result = verify.run_criterion(number)
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    failures = [f"{c.name}: {c.detail}" for c in result.checks if c.status == verify.FAIL]
    assert result.ok, "; ".join(failures)
