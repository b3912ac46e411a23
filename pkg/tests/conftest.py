import json
import sys
from pathlib import Path

import pytest

from typea_cluster.geometry import triangulation_from_orientation

DATA = Path(__file__).parent / "data"


@pytest.fixture
def fan():
    """Hexagon with all three diagonals at one corner (orientation FF)."""
    return triangulation_from_orientation(3, "FF")


@pytest.fixture
def pentagon():
    return triangulation_from_orientation(2, "F")


@pytest.fixture(scope="session")
def oracle_tables():
    with open(DATA / "oracle_tables.json") as fh:
        return json.load(fh)


def poly(text, nvars):
    """Parse a sum of monomials like ``x1*x4 + x2`` (test helper)."""
    from typea_cluster.laurent import LaurentPoly, product_of_vars

    total = LaurentPoly.zero(nvars)
    for term in text.split("+"):
        idx = [int(f.strip()[1:]) for f in term.split("*")]
        total = total + product_of_vars(idx, nvars)
    return total


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
