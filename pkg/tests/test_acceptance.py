"""Acceptance suite: every exit criterion, one test each, printed as a
pass/fail line.  Run with `pytest -s tests/test_acceptance.py` to see the
lines, or `lkrep verify all` for the same checks via the CLI."""

import pytest

from lkrep import acceptance


@pytest.mark.parametrize(
    "index,name,criterion",
    [(i + 1, name, fn) for i, (name, fn) in enumerate(acceptance.CRITERIA)],
    ids=[f"criterion_{i+1}" for i in range(len(acceptance.CRITERIA))],
)
def test_acceptance_criterion(index, name, criterion):
    ok, detail = criterion(n_max=6)
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {index}: {name} - {detail}")
    assert ok, f"criterion {index} ({name}): {detail}"
