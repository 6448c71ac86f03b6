import sys

import pytest

from razavy_dw.dw_basis import RazavyModel, razavy_eigenvalues
from razavy_dw.dynamics import Wavepacket
from razavy_dw.hamiltonian import CoupledModel, solve
from razavy_dw.ho_basis import HoModel
from razavy_dw.overlaps import overlap_table


@pytest.fixture(scope="session")
def dw():
    return RazavyModel()


@pytest.fixture(scope="session")
def levels(dw):
    return razavy_eigenvalues(dw)


@pytest.fixture(scope="session")
def ho(levels):
    return HoModel.from_alpha(1.0, 10.0, levels.delta)


@pytest.fixture(scope="session")
def table(dw, ho):
    return overlap_table(dw, ho)


@pytest.fixture(scope="session")
def linear():
    """d=1, c=1, m=1, alpha=10, N=1 and its two-term packet."""
    dec = solve(CoupledModel.build())
    return dec, Wavepacket.two_term(dec)


@pytest.fixture(scope="session")
def quadratic():
    dec = solve(CoupledModel.build(d=2))
    return dec, Wavepacket.two_term(dec)


@pytest.fixture(scope="session")
def uncoupled():
    dec = solve(CoupledModel.build(c=0.0))
    return dec, Wavepacket.two_term(dec)


def pytest_terminal_summary(terminalreporter):
    module = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for line in results:
            terminalreporter.write_line(line)
