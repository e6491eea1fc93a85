"""The full acceptance battery, one test per numbered criterion.

Every check is exact (rational or Gaussian-rational arithmetic, zero
tolerance). Each test prints its own pass/fail line with the recorded
details. Criterion 8 states a claim about the composed higher-derivative
Lagrangian that is provably false for two of the three variations; the
check reports that honestly and the corresponding test fails by design
rather than weakening the check. The repository notes record the analysis.
"""
import pytest

from z2tk.acceptance import CRITERIA

IDS = [f"criterion-{i:02d}" for i in range(1, len(CRITERIA) + 1)]


@pytest.mark.parametrize("position,criterion", list(enumerate(CRITERIA, 1)), ids=IDS)
def test_criterion(position, criterion):
    result = criterion()
    verdict = "PASS" if result.passed else "FAIL"
    print(f"criterion {result.number}: {verdict} - {result.title}")
    for line in result.details:
        print(f"    {line}")
    assert result.number == position
    assert result.passed, f"criterion {result.number} failed: {result.title}"
