import math
from itertools import product

import pytest

from subspace_codes import Field, construct_code

# criterion id -> (passed, detail); printed in the terminal summary
ACCEPTANCE = {}


def span_vectors(rows, q=2):
    """Every vector in the row span, by enumerating all coefficient tuples."""
    rows = [tuple(r) for r in rows]
    if not rows:
        return set()
    n = len(rows[0])
    out = set()
    for coeffs in product(range(q), repeat=len(rows)):
        out.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(n)))
    return out


def brute_rank(rows, q=2):
    """Rank as log_q of the size of the row span (prime q only)."""
    size = len(span_vectors(rows, q)) if rows else 1
    return round(math.log(size, q))


@pytest.fixture(scope="session")
def gf2():
    return Field(2)


@pytest.fixture(scope="session")
def code71(gf2):
    return construct_code(gf2, 6, 3, 2)


@pytest.fixture(scope="session")
def code289(gf2):
    return construct_code(gf2, 7, 3, 2)


@pytest.fixture(scope="session")
def code4573(gf2):
    return construct_code(gf2, 8, 4, 2)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        passed, detail = ACCEPTANCE[key]
        terminalreporter.write_line(f"{key}: {'PASS' if passed else 'FAIL'}  {detail}")
