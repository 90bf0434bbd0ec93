import pytest

from temporal_disjoint import generators


def small_instances(count, seed0=0, directed=None, max_n=7, max_tau=4):
    """Deterministic stream of small random instances with non-adjacent s, t."""
    out = []
    for k in range(count):
        seed = seed0 + k
        n = 4 + seed % (max_n - 3)
        tau = 1 + (seed // 3) % max_tau
        d = (seed % 2 == 1) if directed is None else directed
        density = 0.25 + 0.1 * (seed % 4)
        out.append(generators.random_instance(n, density, tau, d, seed))
    return out


@pytest.fixture
def fig1():
    return generators.named_example("fig1")


@pytest.fixture
def fig2():
    return generators.named_example("fig2")
