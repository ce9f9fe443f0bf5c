import functools

import pytest
from sympy import GF, QQ, Matrix
from sympy.polys.matrices import DomainMatrix

from tighttri import fixtures

ACCEPTANCE: dict[str, tuple[str, bool]] = {}


@functools.lru_cache(maxsize=None)
def fixture(name: str, seed: int = 0):
    return fixtures.get_fixture(name, seed)


@pytest.fixture(scope="session")
def fx():
    return fixture


def oracle_rank(rows, p: int) -> int:
    """Rank via sympy's DomainMatrix, independent of tighttri.linalg."""
    if not rows or not rows[0]:
        return 0
    dom = QQ if p == 0 else GF(p)
    return DomainMatrix.from_Matrix(Matrix(rows)).convert_to(dom).rank()


def record_acceptance(key: str, title: str):
    """Decorator: remember pass/fail of an acceptance test for the summary."""

    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            ACCEPTANCE[key] = (title, False)
            fn(*args, **kwargs)
            ACCEPTANCE[key] = (title, True)

        return run

    return wrap


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    def order(key: str):
        digits = key.rstrip("abcdefghijklmnopqrstuvwxyz")
        return int(digits), key[len(digits):]

    for key in sorted(ACCEPTANCE, key=order):
        title, ok = ACCEPTANCE[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {title}")
