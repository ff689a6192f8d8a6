import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gingrowth import Ideal, Ring, borel_closure, quadric_union, random_complete_intersection
from gingrowth.ring import monomials_of_degree

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def ring3():
    return Ring.make(3)


@pytest.fixture(scope="session")
def ring4():
    return Ring.make(4)


@pytest.fixture(scope="session")
def ci444(ring4):
    return random_complete_intersection(ring4, [4, 4, 4], seed=1)


@pytest.fixture(scope="session")
def union_ci():
    return quadric_union("ci")


@pytest.fixture(scope="session")
def union_general():
    return quadric_union("general")


def random_ideal(seed: int, n: int | None = None, max_deg: int = 4, max_gens: int = 3) -> Ideal:
    """A random homogeneous ideal with sparse coefficients."""
    rng = np.random.default_rng(seed)
    n = n or int(rng.integers(2, 5))
    R = Ring.make(n)
    gens = []
    for _ in range(int(rng.integers(1, max_gens + 1))):
        d = int(rng.integers(1, max_deg + 1))
        monos = monomials_of_degree(n, d)
        k = int(rng.integers(1, min(4, len(monos)) + 1))
        picks = rng.choice(len(monos), size=k, replace=False)
        f = R.zero()
        for i in picks:
            f = f + R.monomial(monos[int(i)], int(rng.integers(1, 50)))
        gens.append(f)
    return Ideal(R, gens)


@st.composite
def strongly_stable_ideals(draw, n_min: int = 2, n_max: int = 4, max_deg: int = 5):
    """Borel closures of a few random monomials."""
    n = draw(st.integers(n_min, n_max))
    count = draw(st.integers(1, 3))
    gens = []
    for _ in range(count):
        d = draw(st.integers(1, max_deg))
        monos = monomials_of_degree(n, d)
        gens.append(monos[draw(st.integers(0, len(monos) - 1))])
    return borel_closure(n, gens)


# ---------------------------------------------------------------------------
# one summary line per acceptance criterion

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(cid, name): acceptance criterion a test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            cid, name = mark.args
            _criteria.setdefault(cid, {"name": name, "nodes": set(), "failed": False, "seconds": 0.0, "ran": 0})
            _criteria[cid]["nodes"].add(item.nodeid)


def pytest_runtest_logreport(report):
    for row in _criteria.values():
        if report.nodeid not in row["nodes"]:
            continue
        if report.failed:
            row["failed"] = True
        if report.when == "call":
            row["seconds"] += report.duration
            row["ran"] += 1


def pytest_terminal_summary(terminalreporter):
    rows = [(cid, row) for cid, row in _criteria.items() if row["ran"] or row["failed"]]
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for cid, row in sorted(rows, key=lambda kv: (len(kv[0].rstrip("abcdefg")), kv[0])):
        status = "FAIL" if row["failed"] or row["ran"] < len(row["nodes"]) else "PASS"
        terminalreporter.write_line(f"ACCEPTANCE {cid} {row['name']}: {status} ({row['seconds']:.1f}s)")
