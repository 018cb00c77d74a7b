import json
from functools import lru_cache
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name):
    return json.loads((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.fixture
def fixture_data():
    return load_fixture


@lru_cache(maxsize=None)
def walls_upto(g, n):
    from c2fock.youngwall import enumerate_walls

    return tuple(enumerate_walls(g, n))


# criterion number -> list of (label, ok, detail), filled by test_acceptance.py
ACCEPTANCE = {}


def record_criterion(number, label, ok, detail):
    ACCEPTANCE.setdefault(number, []).append((label, ok, detail))
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}{label and ' ' + label}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        ok = all(p[1] for p in parts)
        if len(parts) == 1:
            detail = parts[0][2]
        else:
            failed = [f"{label} ({d})" for label, good, d in parts if not good]
            detail = f"{len(parts) - len(failed)}/{len(parts)} sub-checks pass"
            if failed:
                detail += "; failing: " + "; ".join(failed)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}")
