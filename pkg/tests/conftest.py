import functools

import pytest

from coxorder.coxeter import named, dihedral, INF

# criterion number -> (ok, description, seconds), filled by test_acceptance
ACCEPTANCE = {}


@functools.lru_cache(maxsize=None)
def system(name):
    "one shared instance per name, so the per-system caches get reused"
    return named(name)


@pytest.fixture(scope="session")
def A2():
    return system("A2")


@pytest.fixture(scope="session")
def B2():
    return system("B2")


@pytest.fixture(scope="session")
def G2():
    return system("G2")


@pytest.fixture(scope="session")
def A3():
    return system("A3")


@pytest.fixture(scope="session")
def B3():
    return system("B3")


@pytest.fixture(scope="session")
def A4():
    return system("A4")


@pytest.fixture(scope="session")
def Iinf():
    return system("I2(inf)")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, desc, secs = ACCEPTANCE[k]
        tr.write_line("criterion %d: %s  %s (%.1fs)" % (k, "PASS" if ok else "FAIL", desc, secs))
