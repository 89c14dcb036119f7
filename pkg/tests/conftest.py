import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from latdual.corpus import CorpusConfig, corpus_lattices, corpus_spaces, random_poset
from latdual.order import downset_lattice
from latdual.topology import FiniteSpace, canonical_family

settings.register_profile(
    "latdual", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("latdual")


@st.composite
def lattices(draw, max_poset=6):
    """Downset lattices of random posets; sizes up to 2**max_poset."""
    n = draw(st.integers(0, max_poset))
    seed = draw(st.integers(0, 2**32 - 1))
    return downset_lattice(random_poset(n, random.Random(seed)))


@st.composite
def spaces(draw, max_points=5):
    """Alexandrov topologies of random preorders (every finite topology is one)."""
    n = draw(st.integers(0, max_points))
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and draw(st.booleans()):
                rows[i] |= 1 << j
    # transitive closure
    for _ in range(n):
        rows = [r | _union(rows, r) for r in rows]
    opens = [m for m in range(1 << n) if all(rows[x] & ~m == 0 for x in _bits(m))]
    return FiniteSpace(n, canonical_family(n, opens))


def _bits(m):
    return [i for i in range(m.bit_length()) if m >> i & 1]


def _union(rows, m):
    out = 0
    for i in _bits(m):
        out |= rows[i]
    return out


@pytest.fixture(scope="session")
def corpus():
    cfg = CorpusConfig()
    return corpus_lattices(cfg), corpus_spaces(cfg)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
