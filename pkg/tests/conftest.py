import pytest

from inducibility import make_digraph, random_digraph

_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")


@pytest.fixture
def s3():
    return make_digraph(3, [(0, 1), (0, 2)])


@pytest.fixture
def tt3():
    return make_digraph(3, [(0, 1), (0, 2), (1, 2)])


def random_batch(count, max_n=8, seed0=0):
    """Seeded digraphs over both modes and several densities."""
    out = []
    for i in range(count):
        seed = seed0 + i
        n = 1 + seed % max_n
        mode = ("general", "oriented")[seed % 2]
        p = (0.2, 0.35, 0.5, 0.7)[(seed // 2) % 4]
        out.append(random_digraph(n, p, mode, seed))
    return out
