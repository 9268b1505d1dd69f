import numpy as np
import pytest

from convkern import LaurentPoly


def variables(dim):
    return [LaurentPoly.variable(dim, j) for j in range(dim)]


def const(dim, c):
    return LaurentPoly.constant(dim, c)


def random_poly(rng, dim, degree, complex_coeffs=False, laurent=False):
    """Random sparse polynomial with total degree at most ``degree``."""
    terms = {}
    lo = -degree if laurent else 0
    n_terms = rng.integers(1, 6)
    for _ in range(n_terms):
        exp = tuple(int(v) for v in rng.integers(lo, degree + 1, size=dim))
        if sum(abs(e) for e in exp) > degree:
            continue
        c = rng.normal()
        if complex_coeffs:
            c = complex(c, rng.normal())
        terms[exp] = terms.get(exp, 0) + c
    p = LaurentPoly(dim, terms)
    if p.is_zero:
        p = LaurentPoly.constant(dim, 1.0)
    return p


@pytest.fixture
def rng():
    return np.random.default_rng(20240329)


# one verdict line per end-to-end acceptance criterion, echoed after the
# test run so they survive output capture
acceptance_log = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_log:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_log:
            terminalreporter.write_line(line)
