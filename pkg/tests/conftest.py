import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from womlat.algebra import UnaryAlgebra  # noqa: E402
from womlat.fixtures import chain, fixture, m3  # noqa: E402


def alg(lattice, mapping):
    """UnaryAlgebra from a ``{"0": "1", ...}`` label map."""
    return UnaryAlgebra.from_labels(lattice, mapping)


@pytest.fixture(scope="session")
def fig2():
    return fixture("FIG2")


@pytest.fixture(scope="session")
def m3a():
    return fixture("M3A")


@pytest.fixture(scope="session")
def m3b():
    return fixture("M3B")


@pytest.fixture(scope="session")
def b4():
    return fixture("B4")


@pytest.fixture(scope="session")
def c2():
    return chain(2)


@pytest.fixture(scope="session")
def m3_lattice():
    return m3()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
