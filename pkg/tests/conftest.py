from fractions import Fraction

import pytest

from panint import FiniteSpace, validate_capacity
from panint.io import capacity_from_json, fixture_path
from panint.verify import golden_instance


@pytest.fixture
def golden():
    """Four-point capacity and signed function, exact."""
    return golden_instance(exact=True)


@pytest.fixture
def golden_float():
    return golden_instance(exact=False)


@pytest.fixture
def additive4():
    return capacity_from_json(fixture_path("additive4.capacity.json"), exact=True)


@pytest.fixture
def single_atom3():
    return capacity_from_json(fixture_path("single_atom3.capacity.json"), exact=True)


def table_capacity(n, values, exact=True):
    """Capacity from a list of values indexed by bitmask 1..2^n-1."""
    space = FiniteSpace.of(n)
    conv = Fraction if exact else float
    return validate_capacity({s: conv(v) for s, v in enumerate(values, start=1)}, space, exact=exact)


# acceptance lines collected by test_acceptance, printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[key])
