import itertools

import pytest

from weylmaj.groups import Window

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def all_signed(n):
    """Every signed permutation of rank n, generated independently of the package."""
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield Window._trusted(s * x for s, x in zip(signs, perm))


@pytest.fixture
def record_criterion():
    def record(key: str, ok: bool, detail: str = ""):
        ACCEPTANCE_RESULTS[key] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {key}  {detail}")
