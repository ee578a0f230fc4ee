from fractions import Fraction

import pytest
from hypothesis import strategies as st

from drazin.rings import Integers, Matrix, Modular, PrimeField, Product, Rationals


def values_of(ring, small=5):
    """Hypothesis strategy for raw payloads of ``ring``."""
    if isinstance(ring, Modular):
        return st.integers(0, ring.n - 1)
    if isinstance(ring, Integers):
        return st.integers(-small, small)
    if isinstance(ring, Rationals):
        return st.fractions(min_value=-small, max_value=small, max_denominator=7)
    if isinstance(ring, Matrix):
        row = st.lists(values_of(ring.base, small), min_size=ring.dim, max_size=ring.dim)
        return st.lists(row, min_size=ring.dim, max_size=ring.dim)
    if isinstance(ring, Product):
        return st.tuples(values_of(ring.left, small), values_of(ring.right, small))
    raise TypeError(ring)


def elements_of(ring, small=5):
    return values_of(ring, small).map(ring)


SMALL_RINGS = [
    Modular(2), Modular(6), Modular(12), Modular(16), PrimeField(13),
    Matrix(2, PrimeField(2)), Product(Modular(2), Modular(3)), Product(Modular(4), Modular(4)),
]

LARGE_RINGS = [
    Integers(), Rationals(), Matrix(2, Integers()), Matrix(2, Rationals()), Matrix(3, PrimeField(5)),
    Matrix(2, Modular(12)), Product(Modular(7), Matrix(2, Modular(4))), Product(Integers(), Rationals()),
    Matrix(2, Product(Modular(2), Modular(3))),
]


def oracle_2x2_rational(entries):
    """Drazin inverse of a 2x2 rational matrix in closed form.

    invertible -> adjugate / det; rank one -> a^2 = tr(a) a, so a^D = a / tr^2
    when tr != 0 and a is nilpotent (a^D = 0) when tr == 0.
    """
    (a, b), (c, d) = [[Fraction(v) for v in row] for row in entries]
    det, tr = a * d - b * c, a + d
    if det != 0:
        return [[d / det, -b / det], [-c / det, a / det]]
    if a == b == c == d == 0 or tr == 0:
        return [[Fraction(0)] * 2 for _ in range(2)]
    return [[a / tr**2, b / tr**2], [c / tr**2, d / tr**2]]


def oracle_2x2_integer_member(entries):
    return all(v.denominator == 1 for row in oracle_2x2_rational(entries) for v in row)


@pytest.fixture
def mz():
    return Matrix(2, Integers())


@pytest.fixture
def test_pair(mz):
    return mz([[1, 0], [0, 0]]), mz([[2, 1], [-2, -1]])


# one PASS/FAIL line per acceptance criterion in the terminal summary

_acceptance: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or rep.failed:
        number, title = marker.args
        prev = _acceptance.get(number, (title, True))[1]
        _acceptance[number] = (title, prev and not rep.failed)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok = _acceptance[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
