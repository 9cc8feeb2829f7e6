# Shared pytest configuration and helpers for python/tests.
import pytest

from penning.fock import FockBasis


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "basic: mark test as a basic/smoke test (e.g. run with -m basic)",
    )
    config.addinivalue_line(
        "markers",
        "slow: mark test as slow (osp(2|6) Jacobi scan, quadrature grids); skip with -m 'not slow'",
    )


@pytest.fixture(scope="session")
def basis8():
    return FockBasis.uniform(8)


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    # checks run in-process unless a test passes its own config
    monkeypatch.setenv("PENNING_THREADS", "1")
