import pytest

from ctxfer import network, nf_density, random_density, symmetric_reflectivity

from .common import GRID_CONFIGS


@pytest.fixture(scope="session")
def half():
    return network(0.5, 0.5)


@pytest.fixture(scope="session")
def nf_half(half):
    return nf_density(half)


@pytest.fixture(scope="session")
def sym():
    r = symmetric_reflectivity()
    return network(r, r)


@pytest.fixture(scope="session")
def random_states():
    return [random_density(seed) for seed in range(100)]


@pytest.fixture(scope="session")
def grid_tables():
    return [network(a, b) for a, b in GRID_CONFIGS]


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
