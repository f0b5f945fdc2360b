"""Exit criteria.  One pass/fail line per criterion is printed in the terminal summary.

Run alone with ``pytest tests/test_acceptance.py -m acceptance``.
"""

import pytest

from kchordal.oracle_harness import dumps
from tests.acceptance import CRITERIA
from tests.conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.acceptance

_first_run: dict[int, str] = {}


def _run(number: int) -> dict:
    result = CRITERIA[number][1]()
    _first_run.setdefault(number, dumps(result))
    return result


def _report(number: int, name: str, passed: bool) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {name}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    name = CRITERIA[number][0]
    result = _run(number)
    _report(number, name, result["passed"])
    assert result["passed"], dumps(result)[:2000]


def test_criterion_10_determinism():
    mismatched = []
    for number in sorted(CRITERIA):
        if number not in _first_run:
            _run(number)
        again = dumps(CRITERIA[number][1]())
        if again != _first_run[number]:
            mismatched.append(number)
    _report(10, "criteria 1-9 rerun byte-identical", not mismatched)
    assert not mismatched
