import pytest
from hypothesis import strategies as st

from ogsbn import OgsExponents, bfs, from_ogs


@st.composite
def ogs_vectors(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return OgsExponents(tuple(draw(st.integers(-k, k - 1)) for k in range(1, n + 1)))


@st.composite
def signed_perms(draw, min_n=1, max_n=8):
    return from_ogs(draw(ogs_vectors(min_n, max_n)))


@pytest.fixture(scope="session")
def cayley():
    """BFS tables for ranks 1..5, built once."""
    return {n: bfs(n) for n in range(1, 6)}
